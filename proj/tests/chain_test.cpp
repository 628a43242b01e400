// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "capalg/chain.hpp"

#include "capalg/errors.hpp"
#include "doctest.h"

namespace capalg {
namespace {

TEST_CASE("make_chain builds uniform levels") {
  CHECK(make_chain(1).levels().size() == 2);
  const Chain c = make_chain(2);
  REQUIRE(c.levels().size() == 3);
  CHECK(c.level(1).to_string() == "1/2");
  CHECK(c.zero().to_string() == "0");
  CHECK(c.one().to_string() == "1");
  CHECK_THROWS_AS(make_chain(0), InvalidResolution);
  CHECK_THROWS_AS(make_chain(-3), InvalidResolution);
}

TEST_CASE("join and meet") {
  const Chain c(2);
  CHECK(join(c.level(1), c.one()) == c.one());
  CHECK(meet(c.level(1), c.one()) == c.level(1));
  for (Level a : c.levels()) CHECK(join(a, c.zero()) == a);
  CHECK_THROWS_AS(join(c.level(1), Chain(4).level(2)), ChainMismatch);
  CHECK_THROWS_AS(meet(c.level(1), Chain(3).level(2)), ChainMismatch);
}

TEST_CASE("complement is an order-reversing involution") {
  const Chain c(2);
  CHECK(complement(c.zero()) == c.one());
  CHECK(complement(c.level(1)) == c.level(1));
  for (int k = 1; k <= 4; ++k) {
    const Chain ck(k);
    for (Level a : ck.levels()) {
      CHECK(complement(complement(a)) == a);
      for (Level b : ck.levels()) {
        CHECK(complement(join(a, b)) == meet(complement(a), complement(b)));
        if (a <= b) CHECK(complement(b) <= complement(a));
      }
    }
  }
}

TEST_CASE("levels are exact rationals") {
  CHECK(Chain(2).level(1) == Chain(4).level(2));
  CHECK(Chain(4).level(2).to_string() == "1/2");
  CHECK(Chain(6).level(4).to_string() == "2/3");
  CHECK(Chain(4).parse("1/2").index() == 2);
  CHECK(Chain(4).parse("2/4").index() == 2);
  CHECK(Chain(2).parse("1").index() == 2);
  CHECK_THROWS_AS(Chain(3).parse("1/2"), ParseError);
  CHECK_THROWS_AS(Chain(2).parse("3/2"), ParseError);
  CHECK_THROWS_AS(Chain(2).parse("half"), ParseError);
  CHECK_THROWS_AS(Chain(2).parse(""), ParseError);
}

}  // namespace
}  // namespace capalg
