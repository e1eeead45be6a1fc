#pragma once

#include <vector>

#include "pngdet/airy_kernel.hpp"

namespace pngdet {

// Quadrature-discretized block Fredholm operator for the Airy process:
// block (k,l) samples the extended kernel at (tau_k, [xi_k, xi_k+L]) x
// (tau_l, [xi_l, xi_l+L]) with Gauss-Legendre nodes and symmetrized weights.
struct NystromOperator {
    std::vector<double> taus, xis;
    int m_q = 48;
    double L = 12.0;
    // assembled I - f^{1/2} A f^{1/2} determinant
    double determinant() const;
};

struct FddResult {
    double prob = 0;
    double tail_bound = 0;  // kernel mass left outside the truncation window
    int m_q = 0;
    double L = 0;
};

// P[A(tau_1) <= xi_1, ..., A(tau_m) <= xi_m]; inputs are sorted internally.
// Throws on quadrature instability (doubling m_q moves the value > 1e-6).
FddResult airy_fdd(std::vector<double> taus, std::vector<double> xis, int m_q = 48, double L = 12.0,
                   bool stability_check = false);

}  // namespace pngdet
