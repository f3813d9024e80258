// Copyright 2026 The quditcorr Authors
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

#include "quditcorr/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace quditcorr {

namespace {

struct Vertex {
  std::vector<double> x;
  double f;
};

std::vector<double> affine(const std::vector<double>& a, const std::vector<double>& b,
                           double t) {
  // a + t (b - a)
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + t * (b[i] - a[i]);
  return out;
}

}  // namespace

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, const NelderMeadOptions& options) {
  const std::size_t dim = x0.size();
  NelderMeadResult result;
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };

  std::vector<Vertex> simplex;
  simplex.reserve(dim + 1);
  simplex.push_back({x0, eval(x0)});
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<double> x = x0;
    x[i] += options.initial_step;
    simplex.push_back({x, eval(x)});
  }

  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  auto diameter = [&] {
    double d = 0.0;
    for (std::size_t v = 1; v < simplex.size(); ++v)
      for (std::size_t i = 0; i < dim; ++i)
        d = std::max(d, std::abs(simplex[v].x[i] - simplex[0].x[i]));
    return d;
  };

  while (true) {
    std::sort(simplex.begin(), simplex.end(), by_value);
    if (diameter() < options.diameter_tolerance) {
      result.converged = true;
      break;
    }
    if (evals >= options.max_evaluations || dim == 0) break;

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t v = 0; v < dim; ++v)
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[v].x[i];
    for (double& c : centroid) c /= static_cast<double>(dim);

    Vertex& worst = simplex.back();
    const std::vector<double> xr = affine(centroid, worst.x, -1.0);
    const double fr = eval(xr);

    if (fr < simplex.front().f) {
      const std::vector<double> xe = affine(centroid, worst.x, -2.0);
      const double fe = eval(xe);
      worst = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
      continue;
    }
    if (fr < simplex[dim - 1].f) {
      worst = {xr, fr};
      continue;
    }
    // Outside contraction when the reflected point beats the worst vertex,
    // inside contraction otherwise.
    const bool outside = fr < worst.f;
    const std::vector<double> xc =
        outside ? affine(centroid, xr, 0.5) : affine(centroid, worst.x, 0.5);
    const double fc = eval(xc);
    if (fc < (outside ? fr : worst.f)) {
      worst = {xc, fc};
      continue;
    }
    for (std::size_t v = 1; v < simplex.size(); ++v) {
      simplex[v].x = affine(simplex[0].x, simplex[v].x, 0.5);
      simplex[v].f = eval(simplex[v].x);
    }
  }

  std::sort(simplex.begin(), simplex.end(), by_value);
  result.x = simplex.front().x;
  result.value = simplex.front().f;
  result.evaluations = evals;
  return result;
}

}  // namespace quditcorr
