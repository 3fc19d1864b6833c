#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

// Exact modular arithmetic over odd prime powers q = p^N.  All products go
// through 128-bit intermediates, so q must stay below 2^62.

namespace apm {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

inline constexpr i64 kMaxModulus = i64(1) << 62;

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
i64 gcd_i64(i64 a, i64 b);

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(u64 n);

struct PrimePowerModulus {
  i64 p = 0;  // odd prime
  int N = 0;  // exponent >= 1
  i64 q = 0;  // p^N

  PrimePowerModulus() = default;
  PrimePowerModulus(i64 p_, int N_);

  // Factors q as p^N; rejects anything that is not an odd prime power < 2^62.
  static PrimePowerModulus from_q(i64 q);

  i64 totient() const;                  // p^{N-1}(p-1)
  PrimePowerModulus parent() const;     // modulus q/p, requires N >= 2
  i64 reduce(i64 x) const;              // x mod q in [0, q)
};

// Full Kronecker symbol (a/n); n may be even or negative, n != 0.
int kronecker_symbol(i64 a, i64 n);

// 1 if d = 1 mod 4, i if d = 3 mod 4; rejects even d.
std::complex<double> epsilon_factor(i64 d);

struct CanonicalSqrt {
  i64 value;  // in [1, (q-1)/2]
  PrimePowerModulus modulus;
};

// Canonical square root of x mod q when (x/p) = +1, absent when (x/p) = -1.
// Rejects x divisible by p.  Tonelli-Shanks mod p, Hensel lifting to p^N.
std::optional<CanonicalSqrt> mod_sqrt(i64 x, const PrimePowerModulus& q);

// Inverse of u mod q in [1, q-1]; rejects non-invertible u.
i64 mod_inverse(i64 u, const PrimePowerModulus& q);
i64 inverse_mod(i64 u, i64 modulus);  // extended Euclid for any modulus

// Sum over invertible b mod q of e_q(bx), returned exactly via the closed
// form: phi(q) if p^N | x, -p^{N-1} if p^{N-1} || x, 0 otherwise.
i64 ramanujan_sum(i64 x, const PrimePowerModulus& q);

// Smallest positive integer with (mu/p) = -1.
i64 find_nonresidue(i64 p);

// 1 iff q | x.
int dirac_mod(i64 x, i64 q);

}  // namespace apm
