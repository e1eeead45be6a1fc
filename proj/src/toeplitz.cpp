#include "pngdet/toeplitz.hpp"

#include <stdexcept>

#include "pngdet/quadrature.hpp"

namespace pngdet {

Eigen::MatrixXcd toeplitz_matrix(const ScalarSymbol& symbol, int n, double tol) {
    if (n < 1) throw std::invalid_argument("toeplitz_matrix: n < 1");
    auto coeff = symbol.fourier_coefficients(-(n - 1), n - 1, tol);
    Eigen::MatrixXcd t(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) t(j, k) = coeff[static_cast<size_t>(j - k + n - 1)];
    return t;
}

Eigen::MatrixXcd wiener_hopf_inverse_product(const ScalarSymbol& symbol, int n, double tol) {
    // 1/a_+ has only plus-type factors, 1/a_- only minus-type ones
    ScalarSymbol inv_plus, inv_minus;
    inv_plus.multiply_plus_constant(1.0 / symbol.plus_constant());
    for (const auto& f : symbol.plus_factors()) inv_plus.multiply_plus_factor(f.gamma, -f.exponent);
    inv_minus.multiply_minus_constant(1.0 / symbol.minus_constant());
    for (const auto& f : symbol.minus_factors()) inv_minus.multiply_minus_factor(f.gamma, -f.exponent);

    auto bp = inv_plus.fourier_coefficients(0, n - 1, tol);    // supported on k >= 0
    auto bm = inv_minus.fourier_coefficients(-(n - 1), 0, tol);  // supported on k <= 0

    // [T(b+) T(b-)]_{jk} = sum_{l=1..min(j,k)} (b+)_{j-l} (b-)_{l-k}, 1-based
    Eigen::MatrixXcd out(n, n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            Complex s = 0;
            for (int l = 1; l <= std::min(j, k); ++l)
                s += bp[static_cast<size_t>(j - l)] * bm[static_cast<size_t>(l - k + n - 1)];
            out(j - 1, k - 1) = s;
        }
    return out;
}

Complex finite_n_generating(const SymbolSystem& sys, int r, int s, Complex z, Complex w, int n,
                            double tol) {
    Eigen::MatrixXcd tn = toeplitz_matrix(sys.total(), n, tol);
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(tn);
    if (lu.determinant() == Complex(0, 0)) throw std::runtime_error("finite_n_generating: singular T_n");
    Eigen::MatrixXcd inv = lu.inverse();
    Complex sum = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            sum += std::pow(z, -static_cast<double>(i)) * inv(i - 1, j - 1) *
                   std::pow(w, static_cast<double>(j));
    ScalarSymbol frm = sys.product(r, sys.M);
    ScalarSymbol fms = sys.product(-sys.M, s);
    return (z / w) * frm.eval(1.0 / z) * fms.eval(1.0 / w) * sum;
}

Complex limit_kernel_G(const SymbolSystem& sys, int r, int s, Complex z, Complex w) {
    Complex num = 1, den = 1;
    for (int t = r; t < sys.M; ++t) num *= sys.at(t).eval_minus(1.0 / z);
    for (int t = -sys.M; t < s; ++t) num *= sys.at(t).eval_plus(1.0 / w);
    for (int t = -sys.M; t < r; ++t) den *= sys.at(t).eval_plus(1.0 / z);
    for (int t = s; t < sys.M; ++t) den *= sys.at(t).eval_minus(1.0 / w);
    return num / den;
}

Complex limit_ktilde(const SymbolSystem& sys, int r, int s, Complex z, Complex w) {
    if (z == w) throw std::invalid_argument("limit_ktilde: pole at z = w");
    return z / (z - w) * limit_kernel_G(sys, r, s, z, w);
}

double finite_n_error_bound(const SymbolSystem& sys, int r, int s, Complex z, Complex w, int n,
                            double decay) {
    double az = std::abs(z), aw = std::abs(w);
    if (!(az > 1.0 && aw < 1.0)) throw std::invalid_argument("finite_n_error_bound: need |w| < 1 < |z|");
    double pre = std::abs(sys.product(r, sys.M).eval(1.0 / z)) *
                 std::abs(sys.product(-sys.M, s).eval(1.0 / w)) / ((az - 1.0) * (1.0 - aw));
    return pre * (std::pow(n, -decay) + std::pow(aw, n / 2.0) + std::pow(az, -n / 2.0));
}

}  // namespace pngdet
