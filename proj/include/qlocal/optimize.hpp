// Copyright 2026 The qlocal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLOCAL_OPTIMIZE_HPP
#define QLOCAL_OPTIMIZE_HPP

#include <cmath>
#include <utility>

namespace qlocal {

struct ScalarOptimum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi].
/// Deterministic; stops when the bracket is narrower than tol.
template <class F>
ScalarOptimum golden_section_maximize(F &&f, double lo, double hi, double tol) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 200 && (b - a) > tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? ScalarOptimum{c, fc} : ScalarOptimum{d, fd};
}

/// Bisection for the boundary of a predicate that is true on [lo, x*) and
/// false on (x*, hi]. Returns the midpoint of the final bracket.
template <class Pred>
double bisect_boundary(Pred &&below, double lo, double hi, double abs_tol) {
  for (int it = 0; it < 400 && (hi - lo) > abs_tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break;
    if (below(mid))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace qlocal

#endif
