#pragma once

// Exact integer primitives: powers, k-th roots, p-adic valuation, primality.
// Everything here is a pure function over arbitrary-precision integers.

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "pxpy/errors.hpp"

namespace pxpy {

/// Non-negative arbitrary-precision integer. The sign is checked at API
/// boundaries (see require_natural); arithmetic inside is exact.
using Natural = boost::multiprecision::cpp_int;

/// Exponents (x, y, n, s, e, k of a root) are machine words: any exponent
/// that does not fit would produce a power with more than 10^18 digits.
using Exponent = std::uint64_t;

inline void require_natural(const Natural& v, std::string_view what) {
  if (v < 0) throw InvalidArgument(std::string(what) + " must be non-negative");
}

/// Number of significant bits; 0 for zero.
inline Exponent bit_length(const Natural& m) {
  return m == 0 ? 0 : static_cast<Exponent>(boost::multiprecision::msb(m)) + 1;
}

inline Natural power(const Natural& base, Exponent e) {
  if (e == 0) return 1;
  if (base == 0 || base == 1) return base;
  if (e > std::numeric_limits<unsigned>::max())
    throw ResourceError("exponent " + std::to_string(e) + " is too large to materialize");
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

/// Upper bound on the decimal digit count of base^e, without computing it.
inline Exponent digits_upper_bound(const Natural& base, Exponent e) {
  // log10(2) < 0.30103; bit_length(base)*e bits bound base^e from above.
  const long double bits = static_cast<long double>(bit_length(base)) * static_cast<long double>(e);
  return static_cast<Exponent>(bits * 0.30103L) + 1;
}

struct RootResult {
  Natural root;  // floor of the k-th root
  bool exact = false;

  friend bool operator==(const RootResult&, const RootResult&) = default;
};

/// floor(m^(1/k)) by integer Newton iteration started above the root.
inline RootResult integer_root(const Natural& m, Exponent k) {
  require_natural(m, "radicand");
  if (k == 0) throw InvalidArgument("root degree k must be >= 1");
  if (m < 2 || k == 1) return {m, true};

  const Exponent bits = bit_length(m);
  // 2^k > m, so the root is 1 (and m >= 2 is not a k-th power).
  if (k >= bits) return {1, false};

  // 2^ceil(bits/k) >= m^(1/k): a valid starting point from above.
  Natural x = Natural(1) << static_cast<unsigned>((bits + k - 1) / k);
  const Natural km1 = k - 1;
  for (;;) {
    Natural y = (km1 * x + m / power(x, k - 1)) / k;
    if (y >= x) break;
    x = std::move(y);
  }
  const bool exact = power(x, k) == m;
  return {std::move(x), exact};
}

inline bool is_perfect_power(const Natural& m, Exponent k) { return integer_root(m, k).exact; }

struct Valuation {
  Exponent e = 0;    // largest e with p^e | m
  Natural cofactor;  // m / p^e, not divisible by p

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

inline Valuation p_adic_valuation(const Natural& m, const Natural& p) {
  require_natural(m, "m");
  if (m == 0) throw InvalidArgument("valuation of 0 is infinite");
  if (p < 2) throw InvalidArgument("valuation base p must be >= 2");

  if (p == 2) {
    const auto e = static_cast<Exponent>(boost::multiprecision::lsb(m));
    return {e, m >> static_cast<unsigned>(e)};
  }
  Valuation out{0, m};
  Natural q, r;
  for (;;) {
    boost::multiprecision::divide_qr(out.cofactor, p, q, r);
    if (r != 0) break;
    out.cofactor = std::move(q);
    ++out.e;
  }
  return out;
}

namespace detail {

inline constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

// The first 13 primes as strong-probable-prime bases decide primality for
// every m below 3317044064679887385961981.
inline constexpr std::array<unsigned, 13> kMillerRabinBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

inline const Natural& primality_certified_bound() {
  static const Natural bound("3317044064679887385961981");
  return bound;
}

inline bool trial_division_is_prime(std::uint64_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (std::uint64_t d = 3; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

inline bool strong_probable_prime(const Natural& m, const Natural& d, Exponent r, unsigned base) {
  const Natural m1 = m - 1;
  Natural x = boost::multiprecision::powm(Natural(base), d, m);
  if (x == 1 || x == m1) return true;
  for (Exponent i = 1; i < r; ++i) {
    x = (x * x) % m;
    if (x == m1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace detail

/// Deterministic primality test. Values at or above the certified
/// Miller-Rabin bound (about 3.3e24) are refused rather than guessed.
inline bool is_prime(const Natural& m) {
  if (m < 2) return false;
  if (m < detail::kTrialDivisionLimit) return detail::trial_division_is_prime(m.convert_to<std::uint64_t>());
  if (m >= detail::primality_certified_bound())
    throw InvalidArgument("primality of values >= 3317044064679887385961981 is not certified");

  for (unsigned q : detail::kMillerRabinBases)
    if (m % q == 0) return false;

  const Natural m1 = m - 1;
  const auto r = static_cast<Exponent>(boost::multiprecision::lsb(m1));
  const Natural d = m1 >> static_cast<unsigned>(r);
  for (unsigned base : detail::kMillerRabinBases)
    if (!detail::strong_probable_prime(m, d, r, base)) return false;
  return true;
}

/// p^x + p^y, exactly.
inline Natural eval_lhs(const Natural& p, Exponent x, Exponent y) {
  if (p < 2) throw InvalidArgument("p must be >= 2");
  return power(p, x) + power(p, y);
}

/// Parses a non-empty string of decimal digits.
inline Natural parse_natural(std::string_view text) {
  if (text.empty()) throw InvalidArgument("expected a decimal integer, got an empty string");
  for (char c : text)
    if (c < '0' || c > '9') throw InvalidArgument("expected a non-negative decimal integer, got '" + std::string(text) + "'");
  return Natural(std::string(text));
}

inline Exponent parse_exponent(std::string_view text) {
  const Natural v = parse_natural(text);
  if (v > std::numeric_limits<Exponent>::max())
    throw InvalidArgument("exponent '" + std::string(text) + "' does not fit in 64 bits");
  return v.convert_to<Exponent>();
}

inline std::string to_decimal(const Natural& v) { return v.str(); }

}  // namespace pxpy
