#pragma once

// Exhaustive search over a bounded exponent box. Uses only the arithmetic
// primitives and never consults the classifier's families, so comparing the
// two (cross_check) is a real completeness test.

#include <algorithm>
#include <chrono>
#include <iterator>
#include <vector>

#include "pxpy/arithmetic.hpp"
#include "pxpy/parallel.hpp"
#include "pxpy/types.hpp"

namespace pxpy {

inline SearchReport brute_force(const EquationInstance& instance, const SearchBox& box,
                                unsigned workers = default_workers()) {
  const auto start = std::chrono::steady_clock::now();
  const Exponent root_degree = 2 * instance.n();

  std::vector<Natural> powers;
  powers.reserve(std::max(box.x_max, box.y_max) + 1);
  Natural pw = 1;
  for (Exponent e = 0; e <= std::max(box.x_max, box.y_max); ++e, pw *= instance.p()) powers.push_back(pw);

  auto locals = parallel_rows<std::vector<SolutionTriple>>(
      box.x_max + 1, workers, [&](std::size_t row, std::vector<SolutionTriple>& found) {
        const auto x = static_cast<Exponent>(row);
        for (Exponent y = 0; y <= box.y_max; ++y) {
          const Natural lhs = powers[x] + powers[y];
          RootResult r = integer_root(lhs, root_degree);
          if (!r.exact) continue;
          if (power(r.root, root_degree) != lhs)
            throw InconsistencyError("integer_root reported an inexact root as exact");
          found.push_back({x, y, std::move(r.root)});
        }
      });

  SearchReport report{instance, box, {}, (box.x_max + 1) * (box.y_max + 1), {}};
  for (auto& l : locals) std::move(l.begin(), l.end(), std::back_inserter(report.solutions));
  std::sort(report.solutions.begin(), report.solutions.end());
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace pxpy
