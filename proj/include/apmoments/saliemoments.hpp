#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <vector>

#include "apmoments/modarith.hpp"

// Residue-class moments of products of Sa_q values: the exact closed formula,
// its brute-force oracle, the Q_r polynomial over squarefree kernels, and
// exact zero detection for signed sums of square roots.

namespace apm {

using bigint = boost::multiprecision::cpp_int;

struct MomentTuple {
  PrimePowerModulus modulus;
  std::vector<i64> shifts;  // m_1..m_nu, all coprime to p
  int cls = +1;             // class selector e in {+1, -1}
};

// Closed formula for E^e(prod Sa_q(m_i a)); 0 when the shifts' symbols are
// mixed or do not match the selector.
double salie_moment_formula(const MomentTuple& tuple);

// (2/phi(q)) sum over invertible a with (a/p) = e of prod Sa_q(m_i a).
// Enumerates the class as mu^{(1-e)/2} b^2 over units b.
double salie_moment_bruteforce(const MomentTuple& tuple);

struct SquarefreeDecomposition {
  i64 m;  // = r^2 t
  i64 r;
  i64 t;  // squarefree kernel
};

SquarefreeDecomposition squarefree_decompose(i64 m);

// Q_r(m_1..m_r) = prod over sign vectors e with e_1 = 1 of sum e_i sqrt(m_i),
// expanded exactly over squarefree kernels.  Q_1(x) = x, Q_0 = 0.
bigint q_poly(std::span<const i64> m);

// True iff sum e_i sqrt(m_i) = 0 exactly: per squarefree kernel t, the signed
// root multiplicities sum to zero.
bool sqrt_sum_is_zero(std::span<const int> signs, std::span<const i64> m);

struct DeltaBoundCheck {
  i64 lhs;   // number of sign vectors with sum of canonical roots = 0 mod q
  i64 rhs;   // 2^nu times the number of exact rational vanishings
  bool holds;
};

// Lemma-4.4-style bound; requires (nu^2 Y)^{2^{nu-2}} < q/2 and QR shifts < Y.
DeltaBoundCheck check_delta_bound(const PrimePowerModulus& q, double Y, std::span<const i64> m);

}  // namespace apm
