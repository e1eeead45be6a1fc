#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "pngdet/determinantal.hpp"
#include "pngdet/lattice.hpp"
#include "pngdet/symbols.hpp"

namespace pngdet {

// Homogeneous multilayer kernel parameters: a_i = b_i = alpha = sqrt(q).
struct PNGKernelParams {
    double alpha = 0;
    int N = 0;
    PngConstants consts{};

    static PNGKernelParams make(double q, int N);
    double n13() const;  // N^{1/3}
    double n23() const;
};

// Contour radii and quadrature control for the double integrals.  Radii 0
// select the defaults: a reciprocal pair 1/r1 = r2 = 1 + 1/(d N^{1/3}),
// clipped into (alpha, 1/alpha), which keeps the integrand conditioned at
// the saddle for large N.
struct ContourSpec {
    double r1 = 0, r2 = 0;
    int initial_nodes = 256;
    double tol = 1e-12;
    int max_nodes = 1 << 16;

    std::pair<double, double> radii(const PNGKernelParams& p) const;
};

// G(z,w) of the homogeneous kernel
Complex png_G(const PNGKernelParams& p, int u, int v, Complex z, Complex w);

// phi_{2u,2v}(x,y): trapezoid quadrature of the symbol integral; 0 for u >= v
double phi_uv(const PNGKernelParams& p, int u, int v, std::int64_t x, std::int64_t y,
              double tol = 1e-12);

// K_N(2u,x;2v,y) by the double contour integral; for u < v the swapped
// contour arrangement absorbs the residue term
double png_kernel(const PNGKernelParams& p, int u, std::int64_t x, int v, std::int64_t y,
                  const ContourSpec& spec = {});

// Ktilde with the z-contour outside regardless of u,v (for the residue
// -difference check)
double png_ktilde_outer(const PNGKernelParams& p, int u, std::int64_t x, int v, std::int64_t y,
                        const ContourSpec& spec = {});

// dense kernel block over height windows, via the coefficient series of the
// same contour integral
Eigen::MatrixXd png_kernel_block(const PNGKernelParams& p, int u, int v, std::int64_t x_lo,
                                 std::int64_t x_hi, std::int64_t y_lo, std::int64_t y_hi,
                                 const ContourSpec& spec = {});

// P[h_0(2 u_i, 2N-1) <= level_i for all i] = det(I - K) over the forbidden
// half-lines, truncated `window` sites above each level (0 = auto)
double png_gap_probability(const PNGKernelParams& p, const std::vector<int>& slices,
                           const std::vector<std::int64_t>& levels, int window = 0,
                           const ContourSpec& spec = {});

struct ScaledKernelValue {
    double kernel_side = 0;  // d N^{1/3} K_N at the rounded integer arguments
    double airy_side = 0;    // e^{(tau^3-tau'^3)/3 + xi' tau' - xi tau} A(tau,xi;tau',xi')
    std::int64_t u = 0, v = 0, x = 0, y = 0;
};

// Both sides of the scaled-kernel limit at the nearest admissible integers
ScaledKernelValue scaled_kernel_limit(const PNGKernelParams& p, double tau, double xi, double taup,
                                      double xip, const ContourSpec& spec = {});

// Finite-n transition system for the multilayer chain on the physical state
// space {h >= 1-n}, truncated above at h_max; transition entries are Fourier
// coefficients of the step symbols.
TransitionSystem png_transition_system(const GeomParams& params, int N, int n, std::int64_t h_max);

// det A by iterated symbol convolution on the floored grid
Complex png_partition_det(const GeomParams& params, int N, int n, std::int64_t h_max);

// closed form: prod_j (1-a_j)^n (1-b_j)^n / prod_{i+j<=2N} (1-a_i b_j)
double png_partition_closed_form(const GeomParams& params, int N, int n);

}  // namespace pngdet
