#include "pngdet/symbols.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pngdet/quadrature.hpp"

namespace pngdet {

ScalarSymbol ScalarSymbol::geometric_a(double a) {
    if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("geometric_a: need 0 <= a < 1");
    ScalarSymbol s;
    s.multiply_plus_constant(1.0 - a);
    if (a > 0.0) s.multiply_plus_factor(a, -1);
    return s;
}

ScalarSymbol ScalarSymbol::geometric_b(double b) {
    if (!(b >= 0.0 && b < 1.0)) throw std::invalid_argument("geometric_b: need 0 <= b < 1");
    ScalarSymbol s;
    s.multiply_minus_constant(1.0 - b);
    if (b > 0.0) s.multiply_minus_factor(b, -1);
    return s;
}

ScalarSymbol& ScalarSymbol::multiply_plus_factor(double gamma, int exponent) {
    if (!(std::abs(gamma) < 1.0)) throw std::invalid_argument("symbol factor needs |gamma| < 1");
    if (exponent != 0 && gamma != 0.0) plus_.push_back({gamma, exponent});
    return *this;
}

ScalarSymbol& ScalarSymbol::multiply_minus_factor(double gamma, int exponent) {
    if (!(std::abs(gamma) < 1.0)) throw std::invalid_argument("symbol factor needs |gamma| < 1");
    if (exponent != 0 && gamma != 0.0) minus_.push_back({gamma, exponent});
    return *this;
}

ScalarSymbol& ScalarSymbol::multiply_plus_constant(double c) {
    c_plus_ *= c;
    return *this;
}

ScalarSymbol& ScalarSymbol::multiply_minus_constant(double c) {
    c_minus_ *= c;
    return *this;
}

ScalarSymbol ScalarSymbol::operator*(const ScalarSymbol& o) const {
    ScalarSymbol s = *this;
    s.c_plus_ *= o.c_plus_;
    s.c_minus_ *= o.c_minus_;
    s.plus_.insert(s.plus_.end(), o.plus_.begin(), o.plus_.end());
    s.minus_.insert(s.minus_.end(), o.minus_.begin(), o.minus_.end());
    return s;
}

namespace {

// (1 - base)^e via exp(e log(.)); the base stays in the unit disk around 1
// for arguments inside the analyticity annulus, so the principal branch is
// continuous along any contour we use.
Complex factor_pow(Complex one_minus, int exponent) {
    if (exponent == 1) return one_minus;
    if (exponent == -1) return 1.0 / one_minus;
    return std::exp(static_cast<double>(exponent) * std::log(one_minus));
}

}  // namespace

Complex ScalarSymbol::eval_plus(Complex z) const {
    Complex v = c_plus_;
    for (const auto& f : plus_) v *= factor_pow(1.0 - f.gamma * z, f.exponent);
    return v;
}

Complex ScalarSymbol::eval_minus(Complex z) const {
    Complex v = c_minus_;
    for (const auto& f : minus_) v *= factor_pow(1.0 - f.gamma / z, f.exponent);
    return v;
}

double ScalarSymbol::inner_radius() const {
    double r = 0.0;
    for (const auto& f : minus_) r = std::max(r, std::abs(f.gamma));
    return r;
}

double ScalarSymbol::outer_radius() const {
    double r = std::numeric_limits<double>::infinity();
    for (const auto& f : plus_) r = std::min(r, 1.0 / std::abs(f.gamma));
    return r;
}

Complex ScalarSymbol::fourier_coefficient(long long k, double tol) const {
    return laurent_coefficient([this](Complex z) { return eval(z); }, k, 1.0, tol);
}

std::vector<Complex> ScalarSymbol::fourier_coefficients(long long k_lo, long long k_hi,
                                                        double tol) const {
    return laurent_coefficients([this](Complex z) { return eval(z); }, k_lo, k_hi, 1.0, tol);
}

ScalarSymbol SymbolSystem::product(int r, int s) const {
    ScalarSymbol p;
    for (int l = r; l < s; ++l) p = p * at(l);
    return p;
}

SymbolSystem SymbolSystem::png(const GeomParams& params, int N) {
    params.validate();
    if (N < 1) throw std::invalid_argument("SymbolSystem::png: N < 1");
    if (static_cast<int>(params.a.size()) < 2 * N - 1 || static_cast<int>(params.b.size()) < 2 * N - 1)
        throw std::invalid_argument("SymbolSystem::png: need a_1..a_{2N-1}, b_1..b_{2N-1}");
    SymbolSystem sys;
    sys.M = 2 * N - 1;
    sys.f.resize(static_cast<size_t>(2 * sys.M));
    for (int r = -sys.M; r < sys.M; ++r) {
        if (r & 1) {
            int j = (r + 1) / 2;  // r = 2j-1: up-steps with label a_{j+N}
            sys.f[static_cast<size_t>(r + sys.M)] = ScalarSymbol::geometric_a(params.a_at(j + N));
        } else {
            int j = r / 2;  // r = 2j: down-steps with label b_{N-j}
            sys.f[static_cast<size_t>(r + sys.M)] = ScalarSymbol::geometric_b(params.b_at(N - j));
        }
    }
    return sys;
}

}  // namespace pngdet
