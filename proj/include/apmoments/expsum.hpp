#pragma once

#include <complex>
#include <vector>

#include "apmoments/modarith.hpp"

// Normalized Kloosterman, Salie and Gauss sums modulo odd prime powers, both
// by direct O(q) summation and by the two-term closed forms.

namespace apm {

enum class EvalMethod { direct, closed_form };

using cplx = std::complex<double>;

// Direct-evaluation context for one modulus: inverse table over the units
// (built once by batch inversion) shared by all sums mod q.
class DirectEvaluator {
 public:
  explicit DirectEvaluator(const PrimePowerModulus& q);

  cplx kloosterman(i64 m, i64 n) const;
  cplx salie(i64 m, i64 n) const;

  const PrimePowerModulus& modulus() const { return q_; }

 private:
  cplx twisted_sum(i64 m, i64 n, bool with_character) const;

  PrimePowerModulus q_;
  std::vector<i64> inv_;      // inv_[x] = x^{-1} mod q, 0 for non-units
  std::vector<int> chi_;      // chi_[x] = (x/q) Jacobi symbol
};

// Table of Sa_q(x) for all residues x mod q: 2cos(2 pi sqrt(x)/q) on the
// invertible squares, 0 elsewhere.  One O(q) pass over canonical roots.
class SaTable {
 public:
  explicit SaTable(const PrimePowerModulus& q);
  double operator[](i64 x) const { return table_[size_t(q_.reduce(x))]; }
  const PrimePowerModulus& modulus() const { return q_; }

 private:
  PrimePowerModulus q_;
  std::vector<double> table_;
};

cplx kloosterman(i64 m, i64 n, const PrimePowerModulus& q, EvalMethod method);
cplx salie(i64 m, i64 n, const PrimePowerModulus& q, EvalMethod method);

// Sa_q(x): 2cos(2 pi sqrt(x)^q / q) when (x/p) = +1, else 0.
double sa(i64 x, const PrimePowerModulus& q);

// (1/q) sum over x mod q of chi(x) e_q(ax) with chi the nu-th power of the
// quadratic character mod p (principal for even nu).
cplx gauss_sum(int nu, i64 a, const PrimePowerModulus& q);

}  // namespace apm
