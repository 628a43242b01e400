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

#include <charconv>
#include <numeric>

#include "capalg/errors.hpp"

namespace capalg {

int Level::numerator() const {
  return index_ / std::gcd(index_, resolution_);
}

int Level::denominator() const {
  return resolution_ / std::gcd(index_, resolution_);
}

std::string Level::to_string() const {
  if (index_ == 0) return "0";
  if (index_ == resolution_) return "1";
  return std::to_string(numerator()) + "/" + std::to_string(denominator());
}

Chain::Chain(int k) : k_(k) {
  if (k < 1 || k > kMaxResolution) {
    throw InvalidResolution("chain resolution must lie in [1, " +
                            std::to_string(kMaxResolution) + "], got " +
                            std::to_string(k));
  }
}

Level Chain::level(int index) const {
  if (index < 0 || index > k_) {
    throw InvalidInput("level index " + std::to_string(index) +
                       " outside chain of resolution " + std::to_string(k_));
  }
  return Level(index, k_);
}

std::vector<Level> Chain::levels() const {
  std::vector<Level> out;
  out.reserve(size());
  for (int i = 0; i <= k_; ++i) out.push_back(Level(i, k_));
  return out;
}

namespace {

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Level Chain::parse(std::string_view text) const {
  int num = 0;
  int den = 1;
  const auto slash = text.find('/');
  bool ok = false;
  if (slash == std::string_view::npos) {
    ok = parse_int(text, num);
  } else {
    ok = parse_int(text.substr(0, slash), num) &&
         parse_int(text.substr(slash + 1), den);
  }
  if (!ok || den <= 0 || num < 0 || num > den) {
    throw ParseError("malformed level \"" + std::string(text) + "\"");
  }
  // num/den == i/k  <=>  i = num*k/den, exact.
  if ((static_cast<long>(num) * k_) % den != 0) {
    throw ParseError("level " + std::string(text) +
                     " is not on the chain of resolution " + std::to_string(k_));
  }
  return Level(static_cast<int>(static_cast<long>(num) * k_ / den), k_);
}

Chain make_chain(int k) { return Chain(k); }

namespace {

void require_same_chain(Level a, Level b) {
  if (a.resolution() != b.resolution()) {
    throw ChainMismatch("levels from chains of resolution " +
                        std::to_string(a.resolution()) + " and " +
                        std::to_string(b.resolution()));
  }
}

}  // namespace

Level join(Level a, Level b) {
  require_same_chain(a, b);
  return a.index() >= b.index() ? a : b;
}

Level meet(Level a, Level b) {
  require_same_chain(a, b);
  return a.index() <= b.index() ? a : b;
}

Level complement(Level a) {
  return Chain(a.resolution()).level(a.resolution() - a.index());
}

}  // namespace capalg
