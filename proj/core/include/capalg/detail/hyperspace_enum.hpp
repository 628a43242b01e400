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

#ifndef CAPALG_DETAIL_HYPERSPACE_ENUM_HPP
#define CAPALG_DETAIL_HYPERSPACE_ENUM_HPP

// Included from finite_space.hpp.

#include <vector>

namespace capalg {
namespace detail {

// Minimal-member antichains of every inclusion hyperspace on an m-point
// carrier (m <= 4), in canonical order.
const std::vector<std::vector<Subset>>& hyperspace_antichains(int m);

}  // namespace detail

template <class T>
std::vector<Hyperspace<T>> all_hyperspaces(const std::vector<T>& points) {
  std::vector<Hyperspace<T>> out;
  for (const auto& antichain : detail::hyperspace_antichains(static_cast<int>(points.size()))) {
    std::vector<std::vector<T>> gens;
    for (Subset s : antichain) {
      std::vector<T> set;
      for (int i : s.members()) set.push_back(points[i]);
      gens.push_back(std::move(set));
    }
    out.push_back(Hyperspace<T>::generated_by(std::move(gens)));
  }
  return out;
}

}  // namespace capalg

#endif  // CAPALG_DETAIL_HYPERSPACE_ENUM_HPP
