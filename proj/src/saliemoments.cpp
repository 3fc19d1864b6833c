#include "apmoments/saliemoments.hpp"

#include <cmath>
#include <map>

#include "apmoments/expsum.hpp"

namespace apm {

namespace {

int common_symbol(const MomentTuple& t) {
  int sym = 0;
  for (i64 m : t.shifts) {
    if (t.modulus.reduce(m) % t.modulus.p == 0)
      throw std::invalid_argument("moment: shifts must be coprime to p");
    int s = kronecker_symbol(m, t.modulus.p);
    if (sym == 0)
      sym = s;
    else if (sym != s)
      return 0;  // mixed symbols: the product vanishes identically
  }
  return sym;
}

}  // namespace

double salie_moment_formula(const MomentTuple& tuple) {
  const auto& q = tuple.modulus;
  if (tuple.shifts.empty()) throw std::invalid_argument("moment: nu must be >= 1");
  int sym = common_symbol(tuple);
  if (sym == 0 || sym != tuple.cls) return 0.0;

  i64 mu = sym == 1 ? 1 : find_nonresidue(q.p);
  size_t nu = tuple.shifts.size();

  std::vector<i64> root_q(nu), root_qp(nu);
  bool has_parent = q.N >= 2;
  PrimePowerModulus parent = has_parent ? q.parent() : q;
  for (size_t i = 0; i < nu; ++i) {
    i64 mm = q.reduce(i64(mul_mod(u64(q.reduce(mu)), u64(q.reduce(tuple.shifts[i])), u64(q.q))));
    root_q[i] = mod_sqrt(mm, q)->value;
    if (has_parent) root_qp[i] = mod_sqrt(mm, parent)->value;
  }

  double total = 0.0;
  for (size_t mask = 0; mask < (size_t(1) << nu); ++mask) {
    i64 s_q = 0, s_qp = 0;
    for (size_t i = 0; i < nu; ++i) {
      i64 e = (mask >> i) & 1 ? -1 : 1;
      s_q += e * root_q[i];
      if (has_parent) s_qp += e * root_qp[i];
    }
    int d_q = dirac_mod(s_q, q.q);
    int d_qp = has_parent ? dirac_mod(s_qp, parent.q) : 1;  // delta_{q/p} = 1 when q = p
    total += double(d_q) - double(d_qp) / double(q.p);
  }
  return double(q.q) / double(q.totient()) * total;
}

double salie_moment_bruteforce(const MomentTuple& tuple) {
  const auto& q = tuple.modulus;
  if (tuple.shifts.empty()) throw std::invalid_argument("moment: nu must be >= 1");
  for (i64 m : tuple.shifts)
    if (q.reduce(m) % q.p == 0)
      throw std::invalid_argument("moment: shifts must be coprime to p");
  i64 sel = tuple.cls == 1 ? 1 : find_nonresidue(q.p);
  SaTable sa_tab(q);
  std::vector<i64> mr(tuple.shifts.size());
  for (size_t i = 0; i < mr.size(); ++i) mr[i] = q.reduce(tuple.shifts[i]);

  // sum over units b of f(sel * b^2) counts each class element twice, so the
  // (2/phi) normalization becomes 1/phi.
  double total = 0.0;
  for (i64 b = 1; b < q.q; ++b) {
    if (b % q.p == 0) continue;
    i64 a = i64(mul_mod(mul_mod(u64(b), u64(b), u64(q.q)), u64(sel), u64(q.q)));
    double prod = 1.0;
    for (i64 m : mr) {
      prod *= sa_tab[i64(mul_mod(u64(m), u64(a), u64(q.q)))];
      if (prod == 0.0) break;
    }
    total += prod;
  }
  return total / double(q.totient());
}

SquarefreeDecomposition squarefree_decompose(i64 m) {
  if (m < 1) throw std::invalid_argument("squarefree_decompose: m must be >= 1");
  i64 r = 1, t = 1, rest = m;
  for (i64 d = 2; d * d <= rest; ++d) {
    if (rest % d) continue;
    int e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) r *= d;
    if (e % 2) t *= d;
  }
  t *= rest;
  return {m, r, t};
}

namespace {

// Element of Z[sqrt(t_1), ..., sqrt(t_k)] as kernel -> coefficient.
using KernelPoly = std::map<i64, bigint>;

KernelPoly kp_mul(const KernelPoly& a, const KernelPoly& b) {
  KernelPoly out;
  for (const auto& [ta, ca] : a) {
    for (const auto& [tb, cb] : b) {
      i64 g = gcd_i64(ta, tb);
      i64 kernel = (ta / g) * (tb / g);
      bigint coeff = ca * cb * g;
      auto it = out.find(kernel);
      if (it == out.end())
        out.emplace(kernel, std::move(coeff));
      else {
        it->second += coeff;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace

bigint q_poly(std::span<const i64> m) {
  size_t r = m.size();
  if (r == 0) return 0;
  if (r == 1) return bigint(m[0]);
  std::vector<SquarefreeDecomposition> dec;
  dec.reserve(r);
  for (i64 v : m) dec.push_back(squarefree_decompose(v));

  KernelPoly acc{{1, 1}};
  for (size_t mask = 0; mask < (size_t(1) << (r - 1)); ++mask) {
    KernelPoly factor;
    for (size_t i = 0; i < r; ++i) {
      i64 e = (i > 0 && ((mask >> (i - 1)) & 1)) ? -1 : 1;
      i64 kernel = dec[i].t;
      bigint coeff = e * dec[i].r;
      auto it = factor.find(kernel);
      if (it == factor.end())
        factor.emplace(kernel, std::move(coeff));
      else {
        it->second += coeff;
        if (it->second == 0) factor.erase(it);
      }
    }
    acc = kp_mul(acc, factor);
  }
  if (acc.empty()) return 0;
  if (acc.size() != 1 || acc.begin()->first != 1)
    throw std::logic_error("q_poly: expansion is not rational");
  return acc.begin()->second;
}

bool sqrt_sum_is_zero(std::span<const int> signs, std::span<const i64> m) {
  if (signs.size() != m.size()) throw std::invalid_argument("sqrt_sum_is_zero: size mismatch");
  std::map<i64, i64> per_kernel;
  for (size_t i = 0; i < m.size(); ++i) {
    auto d = squarefree_decompose(m[i]);
    per_kernel[d.t] += signs[i] * d.r;
  }
  for (const auto& [t, c] : per_kernel)
    if (c != 0) return false;
  return true;
}

DeltaBoundCheck check_delta_bound(const PrimePowerModulus& q, double Y, std::span<const i64> m) {
  size_t nu = m.size();
  if (nu < 2) throw std::invalid_argument("check_delta_bound: nu must be >= 2");
  double hyp = std::pow(double(nu) * double(nu) * Y, std::pow(2.0, double(nu) - 2.0));
  if (!(hyp < double(q.q) / 2.0))
    throw std::invalid_argument("check_delta_bound: hypothesis (nu^2 Y)^{2^{nu-2}} < q/2 fails");
  std::vector<i64> roots(nu);
  for (size_t i = 0; i < nu; ++i) {
    if (!(double(m[i]) < Y)) throw std::invalid_argument("check_delta_bound: m_i must be < Y");
    if (kronecker_symbol(m[i], q.p) != 1)
      throw std::invalid_argument("check_delta_bound: m_i must be quadratic residues");
    roots[i] = mod_sqrt(m[i], q)->value;
  }
  i64 lhs = 0, zero_count = 0;
  std::vector<int> signs(nu);
  for (size_t mask = 0; mask < (size_t(1) << nu); ++mask) {
    i64 s = 0;
    for (size_t i = 0; i < nu; ++i) {
      signs[i] = (mask >> i) & 1 ? -1 : 1;
      s += signs[i] * roots[i];
    }
    lhs += dirac_mod(s, q.q);
    zero_count += sqrt_sum_is_zero(signs, m) ? 1 : 0;
  }
  i64 rhs = (i64(1) << nu) * zero_count;
  return {lhs, rhs, lhs <= rhs};
}

}  // namespace apm
