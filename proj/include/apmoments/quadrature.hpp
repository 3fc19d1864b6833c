#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace apm {

// Gauss-Legendre rule on [-1, 1], nodes by Newton iteration on P_n.
struct GaussLegendre {
  std::vector<double> x, w;
  explicit GaussLegendre(int n);
};

const GaussLegendre& gl_rule(int n);  // cached rules

// Composite Gauss-Legendre over [lo, hi] with the given panel count.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 int panels, int points = 24);

// Panels double until two successive estimates agree to rel_tol (abs floor
// for integrals near zero).
double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double rel_tol = 1e-12, int max_panels = 512);

// log Gamma on the right half plane via Lanczos (g = 7); branch jumps are
// irrelevant to callers that exponentiate differences.
std::complex<double> lgamma_complex(std::complex<double> z);

// Bessel J of integer order (Miller downward for small z, asymptotic J0/J1
// plus upward recurrence beyond) and of half-integer order n + 1/2 via the
// spherical Bessel functions.
double bessel_j_int(int n, double z);
double bessel_j_half(int n, double z);

// Dispatches on 2*nu being even or odd.
double bessel_j(double nu, double z);

}  // namespace apm
