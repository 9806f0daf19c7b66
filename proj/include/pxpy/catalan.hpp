#pragma once

// Consecutive perfect powers: a^x - b^y = 1 (trusted via Mihailescu's
// theorem, cross-validated here by bounded search), and the insolvability of
// p^x + 1 = z^2 for primes p > 3.

#include <algorithm>
#include <chrono>
#include <string>
#include <tuple>
#include <vector>

#include "pxpy/arithmetic.hpp"
#include "pxpy/parallel.hpp"
#include "pxpy/types.hpp"

namespace pxpy {

/// The query "does a^x - b^y = 1 hold?".
struct CatalanInstance {
  Natural a;
  Natural b;
  Exponent x = 0;
  Exponent y = 0;

  friend bool operator==(const CatalanInstance&, const CatalanInstance&) = default;
};

inline bool catalan_holds(const CatalanInstance& inst) {
  require_natural(inst.a, "a");
  require_natural(inst.b, "b");
  return power(inst.a, inst.x) == power(inst.b, inst.y) + 1;
}

/// All t in [2, max_exponent] with k^2 - base^t = 1, by direct search.
inline std::vector<Exponent> solve_catalan_constrained(const Natural& k, const Natural& base, Exponent max_exponent) {
  require_natural(k, "k");
  require_natural(base, "base");
  if (base < 2) throw InvalidArgument("base must be >= 2");
  if (k < 2) throw InvalidArgument("k must be >= 2");

  const Natural target = k * k - 1;  // base^t must equal this
  std::vector<Exponent> out;
  Natural pw = base * base;
  for (Exponent t = 2; t <= max_exponent; ++t, pw *= base) {
    if (pw == target) out.push_back(t);
    if (pw >= target) break;  // powers only grow from here
  }
  return out;
}

/// Every (a, b, x, y) with 2 <= a, b <= base_max and 2 <= x, y <= exponent_max
/// satisfying a^x - b^y = 1, sorted by (a, b, x, y). The power table is
/// built once; each worker scans a subset of (a, x) rows against all (b, y).
inline std::vector<CatalanInstance> catalan_search(Exponent base_max, Exponent exponent_max,
                                                   unsigned workers = default_workers()) {
  struct Entry {
    Exponent base;
    Exponent exponent;
    Natural value;
  };
  std::vector<Entry> table;
  for (Exponent a = 2; a <= base_max; ++a) {
    Natural pw = Natural(a) * a;
    for (Exponent x = 2; x <= exponent_max; ++x, pw *= a) table.push_back({a, x, pw});
  }

  auto locals = parallel_rows<std::vector<CatalanInstance>>(
      table.size(), workers, [&](std::size_t row, std::vector<CatalanInstance>& found) {
        const Entry& lhs = table[row];
        for (const Entry& rhs : table)
          if (lhs.value == rhs.value + 1) found.push_back({lhs.base, rhs.base, lhs.exponent, rhs.exponent});
      });

  std::vector<CatalanInstance> out;
  for (auto& l : locals) out.insert(out.end(), l.begin(), l.end());
  std::sort(out.begin(), out.end(), [](const CatalanInstance& l, const CatalanInstance& r) {
    return std::tie(l.a, l.b, l.x, l.y) < std::tie(r.a, r.b, r.x, r.y);
  });
  return out;
}

/// Checks p^x + 1 = z^2 for every x in [0, x_max]. The report is framed as
/// the instance (p, 1) over the box x_max x 0, since p^0 = 1. Any hit throws
/// InconsistencyError: the search contradicts a proven result.
inline SearchReport lemma2_no_solutions(const Natural& p, Exponent x_max) {
  require_natural(p, "p");
  if (p <= 3) throw InvalidArgument("p must be a prime greater than 3, got " + to_decimal(p));
  if (!is_prime(p)) throw InvalidArgument("p must be prime, got " + to_decimal(p));

  const auto start = std::chrono::steady_clock::now();
  SearchReport report{EquationInstance(p, 1), SearchBox{x_max, 0}, {}, 0, {}};
  Natural pw = 1;
  for (Exponent x = 0; x <= x_max; ++x, pw *= p) {
    RootResult r = integer_root(pw + 1, 2);
    ++report.pairs_checked;
    if (r.exact) report.solutions.push_back({x, 0, std::move(r.root)});
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

  if (!report.solutions.empty())
    throw InconsistencyError("p^x + 1 = z^2 has a solution for p = " + to_decimal(p) + ": " +
                             to_string(report.solutions.front()));
  return report;
}

}  // namespace pxpy
