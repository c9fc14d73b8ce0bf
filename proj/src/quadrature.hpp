// Copyright 2026 The floquet-walk Authors
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

#pragma once

#include <boost/math/quadrature/gauss.hpp>

namespace floquet_walk::detail {

// Composite 20-point Gauss-Legendre on [a, b]. Works for any value type with
// + and scalar *, e.g. Eigen matrices, which boost's own integrate() does not
// accept.
template <class F, class V>
V gauss_legendre(F&& f, double a, double b, int panels, V zero) {
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  V total = zero;
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double mid = lo + 0.5 * width;
    const double half = 0.5 * width;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] == 0.0) {
        total += (w[k] * half) * f(mid);
      } else {
        total += (w[k] * half) * f(mid + half * x[k]);
        total += (w[k] * half) * f(mid - half * x[k]);
      }
    }
  }
  return total;
}

// Composite Simpson with an even number of intervals n on [a, b].
template <class F, class V>
V simpson(F&& f, double a, double b, int n, V zero) {
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  V total = zero;
  total += f(a);
  total += f(b);
  for (int k = 1; k < n; ++k) total += (k % 2 == 1 ? 4.0 : 2.0) * f(a + k * h);
  return total * (h / 3.0);
}

}  // namespace floquet_walk::detail
