// Copyright 2026 The lteusim Authors
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

#ifndef LTEU_GEOMETRY_HPP
#define LTEU_GEOMETRY_HPP

#include <cmath>

namespace lteu {

struct vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const vec2& a, const vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace lteu

#endif  // LTEU_GEOMETRY_HPP
