#pragma once

#include <Eigen/Dense>
#include <complex>

#include "pngdet/symbols.hpp"

namespace pngdet {

// (T_n)_{jk} = \hat a_{j-k}, Fourier coefficients by contour quadrature
Eigen::MatrixXcd toeplitz_matrix(const ScalarSymbol& symbol, int n, double tol = 1e-12);

// truncation of the one-sided product T(a_+^{-1}) T(a_-^{-1}); the inverse
// Wiener-Hopf factors are again symbols, so the entries come from exact
// coefficient sums
Eigen::MatrixXcd wiener_hopf_inverse_product(const ScalarSymbol& symbol, int n, double tol = 1e-12);

// finite-n generating function
//   (z/w) f_{r,M}(1/z) f_{-M,s}(1/w) sum_{i,j} z^{-i} [T_n^{-1}(a)]_{ij} w^j
Complex finite_n_generating(const SymbolSystem& sys, int r, int s, Complex z, Complex w, int n,
                            double tol = 1e-12);

// limit factor G(z,w) built from the Wiener-Hopf splits of the f_t
Complex limit_kernel_G(const SymbolSystem& sys, int r, int s, Complex z, Complex w);

// full limit generating function z/(z-w) G(z,w)
Complex limit_ktilde(const SymbolSystem& sys, int r, int s, Complex z, Complex w);

// explicit right side of the finite-n error bound, with Fourier decay
// exponent `decay` (any positive value is admissible for rational symbols)
double finite_n_error_bound(const SymbolSystem& sys, int r, int s, Complex z, Complex w, int n,
                            double decay = 1.0);

}  // namespace pngdet
