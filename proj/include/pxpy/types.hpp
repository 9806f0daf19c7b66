#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pxpy/arithmetic.hpp"

namespace pxpy {

/// One equation p^x + p^y = z^(2n): p prime, n >= 1.
class EquationInstance {
 public:
  EquationInstance(Natural p, Exponent n) : p_(std::move(p)), n_(n) {
    require_natural(p_, "p");
    if (!is_prime(p_)) throw InvalidArgument("p must be prime, got " + to_decimal(p_));
    if (n_ == 0) throw InvalidArgument("n must be >= 1");
  }

  const Natural& p() const { return p_; }
  Exponent n() const { return n_; }

  friend bool operator==(const EquationInstance&, const EquationInstance&) = default;

 private:
  Natural p_;
  Exponent n_;
};

struct SolutionTriple {
  Exponent x = 0;
  Exponent y = 0;
  Natural z;

  friend bool operator==(const SolutionTriple&, const SolutionTriple&) = default;
  friend bool operator<(const SolutionTriple& a, const SolutionTriple& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }
};

inline std::string to_string(const SolutionTriple& t) {
  return "(" + std::to_string(t.x) + ", " + std::to_string(t.y) + ", " + to_decimal(t.z) + ")";
}

/// The finite domain {0..x_max} x {0..y_max}.
struct SearchBox {
  Exponent x_max = 0;
  Exponent y_max = 0;

  bool contains(Exponent x, Exponent y) const { return x <= x_max && y <= y_max; }
  friend bool operator==(const SearchBox&, const SearchBox&) = default;
};

struct SearchReport {
  EquationInstance instance;
  SearchBox box;
  std::vector<SolutionTriple> solutions;  // sorted, duplicate-free
  std::uint64_t pairs_checked = 0;
  std::chrono::milliseconds elapsed{0};
};

}  // namespace pxpy
