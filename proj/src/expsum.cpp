#include "apmoments/expsum.hpp"

#include <cmath>
#include <numbers>

namespace apm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx unit_root(i64 k, i64 q) {
  double ang = kTwoPi * double(k % q) / double(q);
  return {std::cos(ang), std::sin(ang)};
}

// Closed form of Prop-4.1 type: prefactor * sum over the two roots of
// x^2 = mn mod q of weight(x) e_q(2x).  Returns 0 when p | n (m coprime),
// rejects p | m.
cplx closed_form_sum(i64 m, i64 n, const PrimePowerModulus& q, bool kloosterman_weights) {
  i64 mr = q.reduce(m), nr = q.reduce(n);
  if (mr % q.p == 0)
    throw std::invalid_argument("closed_form: requires m coprime to p");
  if (nr % q.p == 0) return {0.0, 0.0};
  if (kloosterman_weights && q.N < 2)
    throw std::invalid_argument("kloosterman closed_form: requires N >= 2");
  i64 mn = i64(mul_mod(u64(mr), u64(nr), u64(q.q)));
  auto root = mod_sqrt(mn, q);
  if (!root) return {0.0, 0.0};
  cplx eps = epsilon_factor(q.q);
  i64 r = root->value;
  cplx total = 0.0;
  for (i64 x : {r, q.q - r}) {
    double weight = 1.0;
    if (kloosterman_weights)
      weight = double(kronecker_symbol(x, q.q));
    total += weight * unit_root(2 * x, q.q);
  }
  if (!kloosterman_weights)
    total *= double(kronecker_symbol(mr, q.q));
  return eps * total;
}

}  // namespace

DirectEvaluator::DirectEvaluator(const PrimePowerModulus& q) : q_(q) {
  size_t n = size_t(q.q);
  inv_.assign(n, 0);
  chi_.assign(n, 0);
  // Batch inversion: prefix products of the units, one extended Euclid,
  // then a backward sweep.
  std::vector<i64> units;
  units.reserve(n - n / size_t(q.p));
  for (i64 x = 1; x < q.q; ++x)
    if (x % q.p != 0) units.push_back(x);
  std::vector<u64> prefix(units.size());
  u64 acc = 1;
  for (size_t i = 0; i < units.size(); ++i) {
    acc = mul_mod(acc, u64(units[i]), u64(q.q));
    prefix[i] = acc;
  }
  u64 inv_all = u64(inverse_mod(i64(acc), q.q));
  for (size_t i = units.size(); i-- > 0;) {
    u64 before = (i == 0) ? 1 : prefix[i - 1];
    inv_[size_t(units[i])] = i64(mul_mod(inv_all, before, u64(q.q)));
    inv_all = mul_mod(inv_all, u64(units[i]), u64(q.q));
  }
  for (i64 x = 0; x < q.q; ++x) chi_[size_t(x)] = kronecker_symbol(x, q.q);
}

cplx DirectEvaluator::twisted_sum(i64 m, i64 n, bool with_character) const {
  i64 mr = q_.reduce(m), nr = q_.reduce(n);
  cplx total = 0.0;
  for (i64 x = 1; x < q_.q; ++x) {
    if (x % q_.p == 0) continue;
    i64 phase = i64(mul_mod(u64(mr), u64(x), u64(q_.q)) + mul_mod(u64(nr), u64(inv_[size_t(x)]), u64(q_.q)));
    cplx term = unit_root(phase, q_.q);
    if (with_character) term *= double(chi_[size_t(x)]);
    total += term;
  }
  return total / std::sqrt(double(q_.q));
}

cplx DirectEvaluator::kloosterman(i64 m, i64 n) const { return twisted_sum(m, n, false); }
cplx DirectEvaluator::salie(i64 m, i64 n) const { return twisted_sum(m, n, true); }

SaTable::SaTable(const PrimePowerModulus& q) : q_(q), table_(size_t(q.q), 0.0) {
  for (i64 r = 1; r <= (q.q - 1) / 2; ++r) {
    if (r % q.p == 0) continue;
    i64 x = i64(mul_mod(u64(r), u64(r), u64(q.q)));
    table_[size_t(x)] = 2.0 * std::cos(kTwoPi * double(r) / double(q.q));
  }
}

cplx kloosterman(i64 m, i64 n, const PrimePowerModulus& q, EvalMethod method) {
  if (method == EvalMethod::direct) return DirectEvaluator(q).kloosterman(m, n);
  return closed_form_sum(m, n, q, /*kloosterman_weights=*/true);
}

cplx salie(i64 m, i64 n, const PrimePowerModulus& q, EvalMethod method) {
  if (method == EvalMethod::direct) return DirectEvaluator(q).salie(m, n);
  return closed_form_sum(m, n, q, /*kloosterman_weights=*/false);
}

double sa(i64 x, const PrimePowerModulus& q) {
  i64 xr = q.reduce(x);
  if (xr % q.p == 0) return 0.0;
  if (kronecker_symbol(xr, q.p) != 1) return 0.0;
  auto root = mod_sqrt(xr, q);
  return 2.0 * std::cos(kTwoPi * double(root->value) / double(q.q));
}

cplx gauss_sum(int nu, i64 a, const PrimePowerModulus& q) {
  i64 ar = q.reduce(a);
  bool odd = (nu % 2) != 0;
  cplx total = 0.0;
  for (i64 x = 0; x < q.q; ++x) {
    if (x % q.p == 0) continue;  // character vanishes (odd) or unit-restricted (even)
    double chi = odd ? double(kronecker_symbol(x, q.p)) : 1.0;
    total += chi * unit_root(i64(mul_mod(u64(ar), u64(x), u64(q.q))), q.q);
  }
  return total / double(q.q);
}

}  // namespace apm
