#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace pngdet {

using Complex = std::complex<double>;

struct GaussLegendre {
    std::vector<double> nodes;    // on (-1,1)
    std::vector<double> weights;
};

// Newton iteration on P_n; cached per order.
const GaussLegendre& gauss_legendre(int n);

// integral of f over [a,b] with an n-point rule
double gl_integrate(const std::function<double(double)>& f, double a, double b, int n);

// nodes/weights mapped to [a,b]
void gl_nodes(int n, double a, double b, std::vector<double>& x, std::vector<double>& w);

// Trapezoid rule on the circle |z| = r: returns (1/2pi) * integral over
// theta of f(r e^{i theta}).  Spectrally accurate for analytic f.
Complex circle_average(const std::function<Complex(Complex)>& f, double r, int n_nodes);

// m-th Laurent coefficient (1/2pi i) * contour integral of f(z) / z^{m+1},
// with node doubling from n0 until |change| <= tol * max(1, |value|) or
// n_max is reached.  Throws on non-convergence.
Complex laurent_coefficient(const std::function<Complex(Complex)>& f, long long m, double r,
                            double tol = 1e-12, int n0 = 128, int n_max = 1 << 16);

// All Laurent coefficients m in [m_lo, m_hi] from shared samples of f on
// |z| = r, with the same doubling control applied to every coefficient.
std::vector<Complex> laurent_coefficients(const std::function<Complex(Complex)>& f, long long m_lo,
                                          long long m_hi, double r, double tol = 1e-12,
                                          int n0 = 128, int n_max = 1 << 16);

}  // namespace pngdet
