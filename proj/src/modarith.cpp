#include "apmoments/modarith.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace apm {

u64 mul_mod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

i64 gcd_i64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Witness set proven sufficient below 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i + 1 < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PrimePowerModulus::PrimePowerModulus(i64 p_, int N_) : p(p_), N(N_) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(u64(p)))
    throw std::invalid_argument("PrimePowerModulus: p must be an odd prime");
  if (N < 1) throw std::invalid_argument("PrimePowerModulus: N must be >= 1");
  i128 acc = 1;
  for (int i = 0; i < N; ++i) {
    acc *= p;
    if (acc >= kMaxModulus) throw std::invalid_argument("PrimePowerModulus: q exceeds 2^62");
  }
  q = i64(acc);
}

PrimePowerModulus PrimePowerModulus::from_q(i64 qq) {
  if (qq < 3 || qq % 2 == 0 || qq >= kMaxModulus)
    throw std::invalid_argument("from_q: q must be an odd prime power < 2^62");
  if (is_prime_u64(u64(qq))) return PrimePowerModulus(qq, 1);
  for (int k = 2; k < 63; ++k) {
    // integer k-th root by floating guess plus correction
    i64 r = i64(std::pow(double(qq), 1.0 / k));
    for (i64 cand = std::max<i64>(r - 2, 2); cand <= r + 2; ++cand) {
      i128 acc = 1;
      bool over = false;
      for (int i = 0; i < k; ++i) {
        acc *= cand;
        if (acc > qq) {
          over = true;
          break;
        }
      }
      if (!over && acc == qq && is_prime_u64(u64(cand)) && cand % 2 == 1)
        return PrimePowerModulus(cand, k);
    }
  }
  throw std::invalid_argument("from_q: not an odd prime power");
}

i64 PrimePowerModulus::totient() const { return q / p * (p - 1); }

PrimePowerModulus PrimePowerModulus::parent() const {
  if (N < 2) throw std::logic_error("parent: N must be >= 2");
  return PrimePowerModulus(p, N - 1);
}

i64 PrimePowerModulus::reduce(i64 x) const {
  i64 r = x % q;
  return r < 0 ? r + q : r;
}

int kronecker_symbol(i64 a, i64 n) {
  if (n == 0) throw std::invalid_argument("kronecker_symbol: n must be nonzero");
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    while (n % 2 == 0) {
      n /= 2;
      i64 r = ((a % 8) + 8) % 8;
      if (r == 3 || r == 5) result = -result;
    }
  }
  a %= n;
  if (a < 0) a += n;
  // Jacobi loop, n odd positive from here on.
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::complex<double> epsilon_factor(i64 d) {
  if (d % 2 == 0) throw std::invalid_argument("epsilon_factor: d must be odd");
  i64 r = ((d % 4) + 4) % 4;
  return r == 1 ? std::complex<double>(1.0, 0.0) : std::complex<double>(0.0, 1.0);
}

i64 find_nonresidue(i64 p) {
  for (i64 m = 2; m < p; ++m) {
    if (kronecker_symbol(m, p) == -1) return m;
  }
  throw std::invalid_argument("find_nonresidue: p must be an odd prime >= 3");
}

namespace {

// Tonelli-Shanks square root mod an odd prime, seeded deterministically.
i64 sqrt_mod_prime(i64 x, i64 p) {
  u64 up = u64(p);
  u64 a = u64(x % p);
  if (a == 0) return 0;
  if (p % 4 == 3) return i64(pow_mod(a, (up + 1) / 4, up));
  u64 s = up - 1;
  int e = 0;
  while ((s & 1) == 0) {
    s >>= 1;
    ++e;
  }
  u64 g = pow_mod(u64(find_nonresidue(p)), s, up);
  u64 r = pow_mod(a, (s + 1) / 2, up);
  u64 b = pow_mod(a, s, up);
  while (b != 1) {
    int m = 0;
    u64 t = b;
    while (t != 1) {
      t = mul_mod(t, t, up);
      ++m;
    }
    u64 gs = g;
    for (int i = 0; i < e - m - 1; ++i) gs = mul_mod(gs, gs, up);
    r = mul_mod(r, gs, up);
    g = mul_mod(gs, gs, up);
    b = mul_mod(b, g, up);
    e = m;
  }
  return i64(r);
}

}  // namespace

std::optional<CanonicalSqrt> mod_sqrt(i64 x, const PrimePowerModulus& q) {
  i64 xr = q.reduce(x);
  if (xr % q.p == 0) throw std::invalid_argument("mod_sqrt: x must be coprime to p");
  if (kronecker_symbol(xr, q.p) != 1) return std::nullopt;
  i64 r = sqrt_mod_prime(xr, q.p);
  // Hensel: Newton iteration r <- (r + x/r)/2 doubles the precision each step.
  i64 cur = 1;
  i64 mod = q.p;
  while (cur < q.N) {
    cur = std::min(2 * cur, i64(q.N));
    i128 m128 = 1;
    for (i64 i = 0; i < cur; ++i) m128 *= q.p;
    mod = i64(m128);
    u64 um = u64(mod);
    u64 inv_r = u64(inverse_mod(r % mod, mod));
    u64 t = mul_mod(u64(xr % mod), inv_r, um);
    u64 sum = (u64(r) + t) % um;
    u64 half = (um + 1) / 2;  // inverse of 2 mod odd modulus
    r = i64(mul_mod(sum, half, um));
  }
  if (r > (q.q - 1) / 2) r = q.q - r;
  return CanonicalSqrt{r, q};
}

i64 inverse_mod(i64 u, i64 modulus) {
  i64 a = ((u % modulus) + modulus) % modulus;
  if (a == 0) throw std::invalid_argument("inverse_mod: not invertible");
  i64 b = modulus, x0 = 0, x1 = 1;
  while (a > 1) {
    if (b == 0) throw std::invalid_argument("inverse_mod: not invertible");
    i64 qt = a / b;
    a -= qt * b;
    std::swap(a, b);
    x1 -= qt * x0;
    std::swap(x0, x1);
  }
  if (a != 1) throw std::invalid_argument("inverse_mod: not invertible");
  return x1 < 0 ? x1 + modulus : x1;
}

i64 mod_inverse(i64 u, const PrimePowerModulus& q) {
  if (gcd_i64(u, q.q) != 1) throw std::invalid_argument("mod_inverse: u not coprime to q");
  return inverse_mod(u, q.q);
}

i64 ramanujan_sum(i64 x, const PrimePowerModulus& q) {
  i64 xr = q.reduce(x);
  if (xr == 0) return q.totient();
  i64 qp = q.q / q.p;
  if (xr % qp == 0) return -qp;
  return 0;
}

int dirac_mod(i64 x, i64 q) {
  if (q < 1) throw std::invalid_argument("dirac_mod: q must be >= 1");
  return x % q == 0 ? 1 : 0;
}

}  // namespace apm
