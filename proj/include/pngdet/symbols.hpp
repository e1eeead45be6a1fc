#pragma once

#include <complex>
#include <vector>

#include "pngdet/weight_field.hpp"

namespace pngdet {

using Complex = std::complex<double>;

// Rational symbol on an annulus around the unit circle, kept as an explicit
// Wiener-Hopf pair: the plus part is a constant times factors (1-gamma z)^e
// (no zeros/poles in |z| <= 1), the minus part a constant times factors
// (1-gamma/z)^e (none in |z| >= 1), all |gamma| < 1.  The split is exact by
// construction; nothing is ever factorized numerically.
class ScalarSymbol {
  public:
    struct Factor {
        double gamma;
        int exponent;
    };

    ScalarSymbol() = default;

    // (1-a) / (1-a z): one geometric up-step, pure plus part
    static ScalarSymbol geometric_a(double a);
    // (1-b) / (1-b/z): one geometric down-step, pure minus part
    static ScalarSymbol geometric_b(double b);

    ScalarSymbol& multiply_plus_factor(double gamma, int exponent);
    ScalarSymbol& multiply_minus_factor(double gamma, int exponent);
    ScalarSymbol& multiply_plus_constant(double c);
    ScalarSymbol& multiply_minus_constant(double c);
    ScalarSymbol operator*(const ScalarSymbol& o) const;

    Complex eval(Complex z) const { return eval_plus(z) * eval_minus(z); }
    Complex eval_plus(Complex z) const;
    Complex eval_minus(Complex z) const;

    // largest pole/zero modulus inside, smallest outside: the symbol is
    // analytic and zero-free on inner_radius < |z| < outer_radius
    double inner_radius() const;
    double outer_radius() const;

    // Fourier coefficient \hat f(k) by contour quadrature on |z| = r
    Complex fourier_coefficient(long long k, double tol = 1e-12) const;
    std::vector<Complex> fourier_coefficients(long long k_lo, long long k_hi,
                                              double tol = 1e-12) const;

    const std::vector<Factor>& plus_factors() const { return plus_; }
    const std::vector<Factor>& minus_factors() const { return minus_; }
    double plus_constant() const { return c_plus_; }
    double minus_constant() const { return c_minus_; }

  private:
    double c_plus_ = 1.0, c_minus_ = 1.0;
    std::vector<Factor> plus_, minus_;
};

// The time-indexed family f_r, r = -M..M-1, with products f_{r,s} and the
// total symbol a = f_{-M,M}.
struct SymbolSystem {
    int M = 0;
    std::vector<ScalarSymbol> f;  // f[r + M]

    const ScalarSymbol& at(int r) const { return f[static_cast<size_t>(r + M)]; }

    // f_{r,s} = prod_{l=r}^{s-1} f_l (empty product for r >= s)
    ScalarSymbol product(int r, int s) const;
    ScalarSymbol total() const { return product(-M, M); }

    // Multilayer PNG instance: M = 2N-1, odd slots carry the a-steps,
    // even slots the b-steps.
    static SymbolSystem png(const GeomParams& params, int N);
};

}  // namespace pngdet
