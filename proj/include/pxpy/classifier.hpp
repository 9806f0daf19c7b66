#pragma once

// Complete solution set of p^x + p^y = z^(2n) as symbolic one-parameter
// families, plus a case-by-case trace that explains why a given triple is or
// is not a solution.

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pxpy/arithmetic.hpp"
#include "pxpy/types.hpp"

namespace pxpy {

/// slope * s + offset
struct Affine {
  Exponent slope = 0;
  Exponent offset = 0;

  Exponent at(Exponent s) const {
    if (slope != 0 && s > (std::numeric_limits<Exponent>::max() - offset) / slope)
      throw ResourceError("family parameter s = " + std::to_string(s) + " overflows an exponent");
    return slope * s + offset;
  }
  friend bool operator==(const Affine&, const Affine&) = default;
};

/// coefficient * base^(exponent(s) / divisor); the division is exact on
/// every admissible s.
struct PowerTerm {
  Natural coefficient = 1;
  Natural base = 2;
  Affine exponent;
  Exponent divisor = 1;

  friend bool operator==(const PowerTerm&, const PowerTerm&) = default;
};

/// s ≡ residue (mod modulus); modulus 1 accepts every s.
struct Congruence {
  Exponent modulus = 1;
  Exponent residue = 0;

  bool holds(Exponent s) const { return s % modulus == residue; }
  friend bool operator==(const Congruence&, const Congruence&) = default;
};

struct SolutionFamily {
  Affine x;
  Affine y;
  PowerTerm z;
  Congruence condition;

  friend bool operator==(const SolutionFamily&, const SolutionFamily&) = default;
};

struct Classification {
  EquationInstance instance;
  std::vector<SolutionFamily> families;
  bool no_solutions = true;
};

// ---------------------------------------------------------------------------
// Rendering

namespace detail {

inline std::string render_affine(const Affine& a) {
  if (a.slope == 0) return std::to_string(a.offset);
  std::string out = a.slope == 1 ? "s" : std::to_string(a.slope) + "s";
  if (a.offset != 0) out += "+" + std::to_string(a.offset);
  return out;
}

}  // namespace detail

/// "3*2^s", "2^(s+1)", "2^((s+1)/3)". When divisor_symbol is given it
/// replaces the numeric divisor (used for the generic n > 1 row).
inline std::string render_power(const PowerTerm& t, std::optional<std::string_view> divisor_symbol = std::nullopt) {
  std::string exponent = detail::render_affine(t.exponent);
  const bool compound = t.exponent.slope != 0 && (t.exponent.offset != 0 || t.exponent.slope != 1);
  if (t.divisor != 1 || divisor_symbol) {
    const std::string div = divisor_symbol ? std::string(*divisor_symbol) : std::to_string(t.divisor);
    exponent = "(" + (compound ? "(" + exponent + ")" : exponent) + "/" + div + ")";
  } else if (compound) {
    exponent = "(" + exponent + ")";
  }
  std::string out = t.coefficient == 1 ? "" : to_decimal(t.coefficient) + "*";
  return out + to_decimal(t.base) + "^" + exponent;
}

inline std::string render_condition(const Congruence& c, std::optional<std::string_view> modulus_symbol = std::nullopt) {
  if (c.modulus == 1 && !modulus_symbol) return "s>=0";
  if (modulus_symbol) return "s>=0, s+1 = 0 mod " + std::string(*modulus_symbol);
  return "s>=0, s = " + std::to_string(c.residue) + " mod " + std::to_string(c.modulus);
}

/// e.g. "x=2s+3, y=2s, z=3*2^s, s>=0"
inline std::string render_family(const SolutionFamily& f, std::optional<std::string_view> n_symbol = std::nullopt) {
  return "x=" + detail::render_affine(f.x) + ", y=" + detail::render_affine(f.y) + ", z=" + render_power(f.z, n_symbol) +
         ", " + render_condition(f.condition, n_symbol);
}

// ---------------------------------------------------------------------------
// Classification

inline Classification classify(const EquationInstance& instance) {
  const Natural& p = instance.p();
  const Exponent n = instance.n();
  std::vector<SolutionFamily> families;

  if (n == 1) {
    if (p == 2) {
      families = {
          {{2, 3}, {2, 0}, {3, 2, {1, 0}, 1}, {}},
          {{2, 0}, {2, 3}, {3, 2, {1, 0}, 1}, {}},
          {{2, 1}, {2, 1}, {1, 2, {1, 1}, 1}, {}},
      };
    } else if (p == 3) {
      families = {
          {{2, 1}, {2, 0}, {2, 3, {1, 0}, 1}, {}},
          {{2, 0}, {2, 1}, {2, 3, {1, 0}, 1}, {}},
      };
    }
  } else if (p == 2) {
    // z^n = 2^(s+1) is integral exactly when n | s+1.
    families = {{{2, 1}, {2, 1}, {1, 2, {1, 1}, n}, {n, n - 1}}};
  }

  const bool none = families.empty();
  return Classification{instance, std::move(families), none};
}

/// p^x + p^y == z^(2n), exactly.
inline bool verify(const EquationInstance& instance, const SolutionTriple& t) {
  // p^x + p^y >= 2, while z^(2n) <= 1 for z <= 1.
  if (t.z <= 1) return false;
  const Natural lhs = eval_lhs(instance.p(), t.x, t.y);

  // z^(2n) has between (b-1)*2n+1 and b*2n bits, b = bit_length(z).
  const unsigned __int128 twice_n = static_cast<unsigned __int128>(instance.n()) * 2;
  const unsigned __int128 zb = bit_length(t.z);
  const unsigned __int128 lb = bit_length(lhs);
  if ((zb - 1) * twice_n + 1 > lb || zb * twice_n < lb) return false;

  return power(t.z, static_cast<Exponent>(twice_n)) == lhs;
}

inline SolutionTriple instantiate(const SolutionFamily& family, Exponent s, const EquationInstance& instance) {
  if (!family.condition.holds(s))
    throw InvalidArgument("s = " + std::to_string(s) + " violates s = " + std::to_string(family.condition.residue) +
                          " mod " + std::to_string(family.condition.modulus));

  const Exponent raw = family.z.exponent.at(s);
  if (raw % family.z.divisor != 0)
    throw InconsistencyError("family exponent " + std::to_string(raw) + " is not divisible by " +
                             std::to_string(family.z.divisor));

  SolutionTriple t{family.x.at(s), family.y.at(s),
                   family.z.coefficient * power(family.z.base, raw / family.z.divisor)};
  if (!verify(instance, t))
    throw InconsistencyError("family instance " + to_string(t) + " does not satisfy the equation");
  return t;
}

/// Every family member with x, y <= max_exponent, sorted by (x, y, z).
inline std::vector<SolutionTriple> enumerate(const EquationInstance& instance, Exponent max_exponent) {
  std::vector<SolutionTriple> out;
  for (const SolutionFamily& f : classify(instance).families) {
    // x and y are strictly increasing in s, so the walk terminates.
    for (Exponent s = 0; f.x.at(s) <= max_exponent && f.y.at(s) <= max_exponent; ++s)
      if (f.condition.holds(s)) out.push_back(instantiate(f, s, instance));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Case trace

enum class ProofCase {
  Case1,     // x = y
  Case2_1,   // x < y, p = 2, y - x = 1
  Case2_2,   // x < y, p = 2, y - x > 1
  Case2_3,   // x < y, p = 3, y - x = 1
  Case2_4,   // x < y, p = 3, y - x > 1
  Case2_5,   // x < y, p > 3
  Case3_1,   // x > y, mirrors of the above
  Case3_2,
  Case3_3,
  Case3_4,
  Case3_5,
  Reduced1_1,  // n > 1, p = 2, w = z^n = 3*2^s
  Reduced1_2,  // n > 1, p = 2, w = z^n = 2^(s+1)
  Reduced2_1,  // n > 1, p = 3
  Reduced2_2,  // n > 1, p > 3
};

inline std::string_view label(ProofCase c) {
  switch (c) {
    case ProofCase::Case1: return "Case 1";
    case ProofCase::Case2_1: return "Case 2.1";
    case ProofCase::Case2_2: return "Case 2.2";
    case ProofCase::Case2_3: return "Case 2.3";
    case ProofCase::Case2_4: return "Case 2.4";
    case ProofCase::Case2_5: return "Case 2.5";
    case ProofCase::Case3_1: return "Case 3 (2.1)";
    case ProofCase::Case3_2: return "Case 3 (2.2)";
    case ProofCase::Case3_3: return "Case 3 (2.3)";
    case ProofCase::Case3_4: return "Case 3 (2.4)";
    case ProofCase::Case3_5: return "Case 3 (2.5)";
    case ProofCase::Reduced1_1: return "n>1 Case 1.1";
    case ProofCase::Reduced1_2: return "n>1 Case 1.2";
    case ProofCase::Reduced2_1: return "n>1 Case 2.1";
    case ProofCase::Reduced2_2: return "n>1 Case 2.2";
  }
  return "?";
}

enum class Verdict { accepted, rejected };

struct CaseTrace {
  ProofCase proof_case = ProofCase::Case1;
  std::optional<Exponent> e;  // p-adic valuation of z (of w when n > 1)
  std::optional<Natural> k;   // z / p^e
  std::optional<Natural> w;   // z^n, only when n > 1
  std::optional<ProofCase> reduced_case;  // the n = 1 case that w went through
  Verdict verdict = Verdict::rejected;
  std::optional<std::string> rejection_reason;

  bool accepted() const { return verdict == Verdict::accepted; }
};

/// "Case 2.2, e=0, k=3, accepted"
inline std::string describe(const CaseTrace& t) {
  std::string out(label(t.proof_case));
  if (t.reduced_case) out += " via " + std::string(label(*t.reduced_case));
  if (t.w) out += ", w=" + to_decimal(*t.w);
  if (t.e) out += ", e=" + std::to_string(*t.e);
  if (t.k) out += ", k=" + to_decimal(*t.k);
  out += t.accepted() ? ", accepted" : ", rejected";
  if (t.rejection_reason) out += ": " + *t.rejection_reason;
  return out;
}

namespace detail {

inline CaseTrace accept(CaseTrace t) {
  t.verdict = Verdict::accepted;
  t.rejection_reason.reset();
  return t;
}

inline CaseTrace reject(CaseTrace t, std::string reason) {
  t.verdict = Verdict::rejected;
  t.rejection_reason = std::move(reason);
  return t;
}

inline ProofCase unequal_case(const Natural& p, Exponent gap, bool mirrored) {
  int sub;
  if (p == 2)
    sub = gap == 1 ? 1 : 2;
  else if (p == 3)
    sub = gap == 1 ? 3 : 4;
  else
    sub = 5;
  const int first = static_cast<int>(mirrored ? ProofCase::Case3_1 : ProofCase::Case2_1);
  return static_cast<ProofCase>(first + sub - 1);
}

// x = y: 2p^x = z^2 needs p = 2, x odd, z = 2^((x+1)/2).
inline CaseTrace trace_equal(const Natural& p, Exponent x, const Natural& z) {
  CaseTrace t;
  t.proof_case = ProofCase::Case1;
  if (z == 0) return reject(t, "z = 0 but p^x + p^y >= 2");
  if (p != 2) return reject(t, "2*p^x is not a perfect square for odd p");
  if (x % 2 == 0) return reject(t, "2^(x+1) is a perfect square only for odd x");
  if (z != power(Natural(2), (x + 1) / 2)) return reject(t, "z must equal 2^((x+1)/2) = 2^" + std::to_string((x + 1) / 2));
  return accept(t);
}

// lo < hi. With z = p^e*k, p not dividing k: p^lo (1 + p^(hi-lo)) = p^(2e) k^2
// forces lo = 2e and k^2 = 1 + p^(hi-lo).
inline CaseTrace trace_unequal(const Natural& p, Exponent lo, Exponent hi, const Natural& z, bool mirrored) {
  const Exponent gap = hi - lo;
  CaseTrace t;
  t.proof_case = unequal_case(p, gap, mirrored);
  const char* small = mirrored ? "y" : "x";

  if (z == 0) return reject(t, "z = 0 but p^x + p^y >= 2");
  Valuation v = p_adic_valuation(z, p);
  t.e = v.e;
  t.k = std::move(v.cofactor);
  const Natural& k = *t.k;
  const Exponent e = *t.e;

  if (static_cast<unsigned __int128>(lo) != static_cast<unsigned __int128>(e) * 2)
    return reject(t, std::string(small) + " = " + std::to_string(lo) + " but the valuation of z forces " + small +
                         " = 2e = " + std::to_string(2 * e));

  const std::string g = std::to_string(gap);
  switch (t.proof_case) {
    case ProofCase::Case2_1:
    case ProofCase::Case3_1:
      return reject(t, "k^2 = 1 + 2 = 3 is not a perfect square");
    case ProofCase::Case2_2:
    case ProofCase::Case3_2:
      // k^2 - 2^gap = 1 with k, gap > 1: only (k, gap) = (3, 3).
      if (k == 3 && gap == 3) return accept(t);
      return reject(t, "k^2 - 2^" + g + " = 1 has the unique solution (k, y-x) = (3, 3); got k = " + to_decimal(k));
    case ProofCase::Case2_3:
    case ProofCase::Case3_3:
      if (k == 2) return accept(t);
      return reject(t, "k^2 = 1 + 3 = 4 forces k = 2; got k = " + to_decimal(k));
    case ProofCase::Case2_4:
    case ProofCase::Case3_4:
      return reject(t, "k^2 - 3^" + g + " = 1 has no solutions with k, y-x > 1");
    default:
      return reject(t, "1 + p^" + g + " = k^2 has no solutions for p > 3");
  }
}

inline CaseTrace trace_square(const Natural& p, Exponent x, Exponent y, const Natural& z) {
  if (x == y) return trace_equal(p, x, z);
  if (x < y) return trace_unequal(p, x, y, z, false);
  return trace_unequal(p, y, x, z, true);
}

}  // namespace detail

/// Replays the case analysis for one candidate. The verdict always agrees
/// with verify(); a disagreement throws InconsistencyError.
inline CaseTrace trace_candidate(const EquationInstance& instance, const SolutionTriple& triple) {
  const Natural& p = instance.p();
  const Exponent n = instance.n();
  CaseTrace t;

  if (n == 1) {
    t = detail::trace_square(p, triple.x, triple.y, triple.z);
  } else {
    // w = z^n turns the equation into p^x + p^y = w^2.
    Natural w = power(triple.z, n);
    CaseTrace inner = detail::trace_square(p, triple.x, triple.y, w);
    t.e = inner.e;
    t.k = inner.k;
    t.w = std::move(w);
    t.reduced_case = inner.proof_case;
    const std::string inner_reason = inner.rejection_reason.value_or("");

    if (p == 2 && inner.proof_case == ProofCase::Case1) {
      t.proof_case = ProofCase::Reduced1_2;
      // w = 2^(s+1) with x = 2s+1; w = z^n by construction, so n | s+1.
      t = inner.accepted() ? detail::accept(t) : detail::reject(t, "w = z^n: " + inner_reason);
    } else if (p == 2) {
      t.proof_case = ProofCase::Reduced1_1;
      t = detail::reject(t, inner.accepted() ? "w = 3*2^s is not a perfect n-th power"
                                             : "w = z^n: " + inner_reason);
    } else if (p == 3) {
      t.proof_case = ProofCase::Reduced2_1;
      t = detail::reject(t, inner.accepted() ? "w = 2*3^s is not a perfect n-th power"
                                             : "w = z^n: " + inner_reason);
    } else {
      t.proof_case = ProofCase::Reduced2_2;
      t = detail::reject(t, "p^x + p^y = w^2 has no solutions for p > 3");
    }
  }

  if (t.accepted() != verify(instance, triple))
    throw InconsistencyError("case trace and direct evaluation disagree on " + to_string(triple) + ": " + describe(t));
  return t;
}

}  // namespace pxpy
