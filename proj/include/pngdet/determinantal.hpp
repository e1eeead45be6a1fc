#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

namespace pngdet {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// Finite reference measure: distinct support points with strictly positive
// weights.  Counting measure = all weights 1.
struct GridMeasure {
    std::vector<double> points;
    std::vector<double> weights;

    static GridMeasure counting(std::vector<double> pts);
    int size() const { return static_cast<int>(points.size()); }
    Eigen::VectorXd weight_vector() const;
    void validate() const;
};

// (phi * psi)(x,y) = sum_z phi(x,z) psi(z,y) mu(z); phi has g columns,
// psi has g rows, g = grid size.
CMatrix convolve(const CMatrix& phi, const CMatrix& psi, const GridMeasure& measure);

// Chain of transitions over slices r = -M..M with fixed boundary
// configurations baked into the first and last matrices.  All interior
// slices share one finite grid.
struct TransitionSystem {
    int M = 1;  // interior slices are r = -M+1..M-1 (2M-1 of them)
    int n = 1;  // particles per slice
    GridMeasure grid;
    CMatrix phi_first;               // n x g  : phi_{-M,-M+1}(x_i^{-M}, .)
    std::vector<CMatrix> phi_mid;    // g x g  : phi_{r,r+1}, r = -M+1..M-2
    CMatrix phi_last;                // g x n  : phi_{M-1,M}(., x_j^{M})

    int interior_slices() const { return 2 * M - 1; }
    void validate() const;

    // total configuration count g^{n(2M-1)}, guarded against overflow
    double config_count() const;
};

// A_ij = phi_{-M,M}(x_i^{-M}, x_j^{M}) by iterated convolution
CMatrix gram_matrix(const TransitionSystem& sys);

// det A; throws if the system is degenerate (det == 0 within roundoff)
Complex partition_function(const TransitionSystem& sys);

// Correlation kernel K(r,x;s,y) = Ktilde - phi_{r,s} with
// Ktilde(r,x;s,y) = sum_ij phi_{r,M}(x, x_i^M) (A^-1)_ij phi_{-M,s}(x_j^-M, y).
class BlockKernel {
  public:
    explicit BlockKernel(const TransitionSystem& sys, double max_condition = 1e12);

    int M() const { return M_; }
    int n() const { return n_; }
    const GridMeasure& grid() const { return grid_; }
    double condition() const { return condition_; }

    CMatrix ktilde(int r, int s) const;  // interior r, s
    CMatrix phi(int r, int s) const;     // zero matrix for r >= s
    CMatrix block(int r, int s) const;   // K = ktilde - phi
    Complex eval(int r, int ix, int s, int iy) const;

  private:
    int M_, n_;
    GridMeasure grid_;
    std::vector<CMatrix> suffix_;  // phi_{r,M}:  g x n, r = -M+1..M-1
    std::vector<CMatrix> prefix_;  // phi_{-M,s}: n x g, s = -M+1..M-1
    std::vector<CMatrix> mid_;     // copies of the one-step transitions
    CMatrix a_inv_;
    double condition_;
};

BlockKernel correlation_kernel(const TransitionSystem& sys);

// One site = (time slice r, grid index).
struct Site {
    int r;
    int ix;
};

// Direct summation of Eq-(0.2)-style sums.  Guarded: throws if the total
// configuration count exceeds `guard`.
Complex brute_force_partition(const TransitionSystem& sys, double guard = 1e7);
Complex brute_force_correlation(const TransitionSystem& sys, const std::vector<Site>& sites,
                                double guard = 1e7);
// E[prod_j (1+g(r, x_j^r))] by enumeration
Complex brute_force_expectation(const TransitionSystem& sys,
                                const std::function<Complex(int, int)>& g, double guard = 1e7);

// Correlation at the given sites from the kernel (block determinant)
Complex kernel_correlation(const BlockKernel& kernel, const std::vector<Site>& sites);

// Fredholm expansion sum_{m<=max_order} (1/m!) int det(K(x_i,x_j)) d^m mu.
// With max_order >= grid size this is det(I + K diag(mu)) exactly.
Complex fredholm_det_expansion(const CMatrix& kernel, const GridMeasure& measure, int max_order);

// det(I + g K) on the product space (interior slices) x grid
Complex gap_probability(const TransitionSystem& sys, const std::function<Complex(int, int)>& g);
Complex gap_probability(const BlockKernel& kernel, const std::function<Complex(int, int)>& g);

// Both sides of the product-rule identity
//   det(I + w sum_{j=1..m} z^j psi^{*(j-1)} * a) = det(I - z psi + z w a)
// with psi = g phi_{u,v}, a = g Ktilde, m = 2M-1.
std::pair<Complex, Complex> product_rule_check(const TransitionSystem& sys,
                                               const std::function<Complex(int, int)>& g, Complex z,
                                               Complex w);

}  // namespace pngdet
