// Copyright 2026 The upv Authors.
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


#include "upv/unproj/rewriting.hpp"

namespace upv::unproj {

using alg::comp;
using alg::x_var;
using alg::y_var;

bool rewrite_step(alg::Monomial& m, bool& negate) {
  const int x00 = x_var(0, 0), x01 = x_var(0, 1);
  if (m[x01] > 0) {
    int e = m[x01];
    m[x01] = 0;
    m[x00] = static_cast<std::int16_t>(m[x00] + e);
    if (e % 2) negate = !negate;
    return true;
  }
  for (int i = 1; i < 4; ++i) {
    if (m[x_var(i, 0)] > 0 && m[x_var(i, 1)] > 0) {
      m[x_var(i, 0)] -= 1;
      m[x_var(i, 1)] -= 1;
      m[x00] += 2;
      negate = !negate;
      return true;
    }
  }
  if (m[x00] > 0) {
    for (const auto& t : alg::ell()) {
      int y = y_var(t);
      if (m[y] == 0) continue;
      m[y] -= 1;
      m[x00] -= 1;
      for (int i = 1; i < 4; ++i) m[x_var(i, comp(t[static_cast<std::size_t>(i)]))] += 1;
      if (t[0]) negate = !negate;
      return true;
    }
  }
  return false;
}

}  // namespace upv::unproj
