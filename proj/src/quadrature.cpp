#include "apmoments/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "apmoments/errors.hpp"

namespace apm {

namespace {
constexpr double kPi = std::numbers::pi;
}

GaussLegendre::GaussLegendre(int n) {
  if (n < 2) throw std::invalid_argument("GaussLegendre: n >= 2");
  x.resize(size_t(n));
  w.resize(size_t(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[size_t(i)] = -z;
    x[size_t(n - 1 - i)] = z;
    w[size_t(i)] = w[size_t(n - 1 - i)] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

const GaussLegendre& gl_rule(int n) {
  static std::map<int, GaussLegendre> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, GaussLegendre(n)).first;
  return it->second;
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 int panels, int points) {
  const auto& rule = gl_rule(points);
  double total = 0.0;
  double h = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    double a = lo + p * h;
    double mid = a + 0.5 * h, half = 0.5 * h;
    double acc = 0.0;
    for (size_t i = 0; i < rule.x.size(); ++i) acc += rule.w[i] * f(mid + half * rule.x[i]);
    total += acc * half;
  }
  return total;
}

double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double rel_tol, int max_panels) {
  double prev = integrate(f, lo, hi, 8);
  for (int panels = 16; panels <= max_panels; panels *= 2) {
    double cur = integrate(f, lo, hi, panels);
    if (std::abs(cur - prev) <= rel_tol * (std::abs(cur) + 1e-300)) return cur;
    prev = cur;
  }
  return prev;
}

std::complex<double> lgamma_complex(std::complex<double> z) {
  static const double kCoef[9] = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  // shift into Re z >= 2 for accuracy; callers exponentiate, so the branch of
  // the subtracted logs does not matter
  std::complex<double> shift = 0.0;
  while (z.real() < 2.0) {
    shift -= std::log(z);
    z += 1.0;
  }
  std::complex<double> acc = kCoef[0];
  for (int i = 1; i < 9; ++i) acc += kCoef[i] / (z - 1.0 + double(i));
  std::complex<double> t = z - 1.0 + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(acc) + shift;
}

namespace {

// Hankel asymptotic series for J_0, J_1, valid for large z.
double bessel_j01_asymptotic(int n, double z) {
  double mu = 4.0 * n * n;
  double p = 1.0, q = 0.0;
  double term = 1.0;
  for (int k = 1; k <= 14; ++k) {
    term *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * z * k);
    if (k % 2 == 1)
      q += (k % 4 == 1) ? term : -term;
    else
      p += (k % 4 == 2) ? -term : term;
    if (std::abs(term) < 1e-18) break;
  }
  double omega = z - (0.5 * n + 0.25) * kPi;
  return std::sqrt(2.0 / (kPi * z)) * (p * std::cos(omega) - q * std::sin(omega));
}

double bessel_miller(int n, double z) {
  if (z == 0.0) return n == 0 ? 1.0 : 0.0;
  int start = n + 22 + int(z);
  if (start % 2) ++start;
  double fp1 = 0.0, fk = 1e-30;
  double norm = 0.0, out = 0.0;
  for (int k = start; k >= 1; --k) {
    double fm1 = (2.0 * k / z) * fk - fp1;
    fp1 = fk;
    fk = fm1;
    if (k - 1 == n) out = fk;
    if ((k - 1) % 2 == 0) norm += (k - 1 == 0) ? fk : 2.0 * fk;
    if (std::abs(fk) > 1e250) {  // rescale to avoid overflow
      fp1 /= 1e250;
      fk /= 1e250;
      norm /= 1e250;
      out /= 1e250;
    }
  }
  return out / norm;
}

}  // namespace

double bessel_j_int(int n, double z) {
  if (n < 0) throw std::invalid_argument("bessel_j_int: n >= 0");
  double sign = 1.0;
  if (z < 0) {
    z = -z;
    if (n % 2) sign = -1.0;
  }
  if (z < 35.0 || z < 2.2 * n) return sign * bessel_miller(n, z);
  double jm1 = bessel_j01_asymptotic(0, z);
  if (n == 0) return sign * jm1;
  double jk = bessel_j01_asymptotic(1, z);
  for (int k = 1; k < n; ++k) {
    double jp1 = (2.0 * k / z) * jk - jm1;
    jm1 = jk;
    jk = jp1;
  }
  return sign * jk;
}

double bessel_j_half(int n, double z) {
  if (n < 0 || z < 0) throw std::invalid_argument("bessel_j_half: n >= 0, z >= 0");
  if (z == 0.0) return 0.0;
  double jn;
  if (z <= std::max(9.0, 1.2 * n)) {
    // power series for the spherical Bessel j_n
    double dfact = 1.0;  // (2n+1)!!
    for (int k = 1; k <= 2 * n + 1; k += 2) dfact *= k;
    double term = std::pow(z, n) / dfact;
    double sum = term;
    for (int k = 1; k <= 200; ++k) {
      term *= -0.5 * z * z / (k * (2.0 * (n + k) + 1.0));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    jn = sum;
  } else {
    double jm1 = std::sin(z) / z;
    if (n == 0) {
      jn = jm1;
    } else {
      double jk = jm1 / z - std::cos(z) / z;
      for (int k = 1; k < n; ++k) {
        double jp1 = (2.0 * k + 1.0) / z * jk - jm1;
        jm1 = jk;
        jk = jp1;
      }
      jn = jk;
    }
  }
  return std::sqrt(2.0 * z / kPi) * jn;
}

double bessel_j(double nu, double z) {
  double r = std::round(nu);
  if (std::abs(nu - r) < 1e-12) return bessel_j_int(int(r), z);
  double h = std::round(nu - 0.5);
  if (std::abs(nu - 0.5 - h) < 1e-12) return bessel_j_half(int(h), z);
  throw std::invalid_argument("bessel_j: order must be integer or half-integer");
}

}  // namespace apm
