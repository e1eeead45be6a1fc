#include "pngdet/determinantal.hpp"

#include <cmath>
#include <stdexcept>

namespace pngdet {

GridMeasure GridMeasure::counting(std::vector<double> pts) {
    GridMeasure g;
    g.weights.assign(pts.size(), 1.0);
    g.points = std::move(pts);
    return g;
}

Eigen::VectorXd GridMeasure::weight_vector() const {
    return Eigen::Map<const Eigen::VectorXd>(weights.data(), static_cast<long>(weights.size()));
}

void GridMeasure::validate() const {
    if (points.size() != weights.size()) throw std::invalid_argument("GridMeasure: size mismatch");
    for (double w : weights)
        if (!(w > 0.0)) throw std::invalid_argument("GridMeasure: weights must be positive");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw std::invalid_argument("GridMeasure: duplicate points");
}

CMatrix convolve(const CMatrix& phi, const CMatrix& psi, const GridMeasure& measure) {
    if (phi.cols() != measure.size() || psi.rows() != measure.size())
        throw std::invalid_argument("convolve: grid mismatch");
    return phi * measure.weight_vector().asDiagonal() * psi;
}

void TransitionSystem::validate() const {
    grid.validate();
    int g = grid.size();
    if (M < 1 || n < 1) throw std::invalid_argument("TransitionSystem: M, n >= 1 required");
    if (phi_first.rows() != n || phi_first.cols() != g)
        throw std::invalid_argument("TransitionSystem: phi_first shape");
    if (static_cast<int>(phi_mid.size()) != 2 * M - 2)
        throw std::invalid_argument("TransitionSystem: need 2M-2 interior transitions");
    for (const auto& m : phi_mid)
        if (m.rows() != g || m.cols() != g) throw std::invalid_argument("TransitionSystem: phi_mid shape");
    if (phi_last.rows() != g || phi_last.cols() != n)
        throw std::invalid_argument("TransitionSystem: phi_last shape");
}

double TransitionSystem::config_count() const {
    return std::pow(static_cast<double>(grid.size()), static_cast<double>(n) * (2 * M - 1));
}

CMatrix gram_matrix(const TransitionSystem& sys) {
    sys.validate();
    CMatrix acc = sys.phi_first;
    for (const auto& step : sys.phi_mid) acc = convolve(acc, step, sys.grid);
    return convolve(acc, sys.phi_last, sys.grid);
}

Complex partition_function(const TransitionSystem& sys) {
    CMatrix a = gram_matrix(sys);
    Complex det = a.partialPivLu().determinant();
    double scale = a.cwiseAbs().maxCoeff();
    if (std::abs(det) <= 1e-14 * std::pow(std::max(scale, 1.0), a.rows()))
        throw std::runtime_error("partition_function: det A vanishes (degenerate system)");
    return det;
}

BlockKernel::BlockKernel(const TransitionSystem& sys, double max_condition)
    : M_(sys.M), n_(sys.n), grid_(sys.grid), mid_(sys.phi_mid) {
    sys.validate();
    CMatrix a = gram_matrix(sys);
    Eigen::PartialPivLU<CMatrix> lu(a);
    Complex det = lu.determinant();
    if (det == Complex(0, 0)) throw std::runtime_error("correlation_kernel: singular A");
    a_inv_ = lu.inverse();
    condition_ = a.cwiseAbs().rowwise().sum().maxCoeff() *
                 a_inv_.cwiseAbs().rowwise().sum().maxCoeff();
    if (!(condition_ <= max_condition))
        throw std::runtime_error("correlation_kernel: A condition number exceeds threshold");

    int s = sys.interior_slices();
    suffix_.resize(s);
    prefix_.resize(s);
    // suffix_[i] = phi_{r,M} at r = -M+1+i ; prefix_[j] = phi_{-M,s} at s = -M+1+j
    suffix_[s - 1] = sys.phi_last;
    for (int i = s - 2; i >= 0; --i) suffix_[i] = convolve(sys.phi_mid[i], suffix_[i + 1], grid_);
    prefix_[0] = sys.phi_first;
    for (int i = 1; i < s; ++i) prefix_[i] = convolve(prefix_[i - 1], sys.phi_mid[i - 1], grid_);
}

CMatrix BlockKernel::ktilde(int r, int s) const {
    int i = r + M_ - 1, j = s + M_ - 1;
    if (i < 0 || i >= static_cast<int>(suffix_.size()) || j < 0 || j >= static_cast<int>(prefix_.size()))
        throw std::invalid_argument("BlockKernel::ktilde: slice outside interior window");
    return suffix_[static_cast<size_t>(i)] * a_inv_ * prefix_[static_cast<size_t>(j)];
}

CMatrix BlockKernel::phi(int r, int s) const {
    int g = grid_.size();
    if (r >= s) return CMatrix::Zero(g, g);
    // product phi_{r,r+1} * ... * phi_{s-1,s} over interior transitions
    CMatrix acc = mid_[static_cast<size_t>(r + M_ - 1)];
    for (int t = r + 1; t < s; ++t) acc = convolve(acc, mid_[static_cast<size_t>(t + M_ - 1)], grid_);
    return acc;
}

CMatrix BlockKernel::block(int r, int s) const { return ktilde(r, s) - phi(r, s); }

Complex BlockKernel::eval(int r, int ix, int s, int iy) const { return block(r, s)(ix, iy); }

BlockKernel correlation_kernel(const TransitionSystem& sys) { return BlockKernel(sys); }

namespace {

// iterate over all index tuples (one grid index per free coordinate)
template <typename F>
void for_each_tuple(int coords, int g, F&& body) {
    std::vector<int> idx(static_cast<size_t>(coords), 0);
    for (;;) {
        body(idx);
        int k = 0;
        while (k < coords) {
            if (++idx[static_cast<size_t>(k)] < g) break;
            idx[static_cast<size_t>(k)] = 0;
            ++k;
        }
        if (k == coords) return;
    }
}

double factorial(int n) {
    double r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

// weight w_{n,M}(xbar) = prod_r det(phi_{r,r+1}(x_i^r, x_j^{r+1})), with the
// grid indices of slice r in cfg[r] (r = 0..2M-2 mapped from -M+1..M-1)
Complex config_weight(const TransitionSystem& sys, const std::vector<std::vector<int>>& cfg) {
    int n = sys.n, s = sys.interior_slices();
    CMatrix d(n, n);
    Complex w = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d(i, j) = sys.phi_first(i, cfg[0][static_cast<size_t>(j)]);
    w *= d.determinant();
    for (int r = 0; r + 1 < s; ++r) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d(i, j) = sys.phi_mid[static_cast<size_t>(r)](cfg[static_cast<size_t>(r)][static_cast<size_t>(i)],
                                                              cfg[static_cast<size_t>(r + 1)][static_cast<size_t>(j)]);
        w *= d.determinant();
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d(i, j) = sys.phi_last(cfg[static_cast<size_t>(s - 1)][static_cast<size_t>(i)], j);
    w *= d.determinant();
    return w;
}

}  // namespace

Complex brute_force_partition(const TransitionSystem& sys, double guard) {
    sys.validate();
    if (sys.config_count() > guard) throw std::runtime_error("brute force size guard exceeded");
    int n = sys.n, s = sys.interior_slices(), g = sys.grid.size();
    std::vector<std::vector<int>> cfg(static_cast<size_t>(s), std::vector<int>(static_cast<size_t>(n)));
    Complex total = 0;
    for_each_tuple(n * s, g, [&](const std::vector<int>& idx) {
        double mu = 1;
        for (int r = 0; r < s; ++r)
            for (int i = 0; i < n; ++i) {
                int ii = idx[static_cast<size_t>(r * n + i)];
                cfg[static_cast<size_t>(r)][static_cast<size_t>(i)] = ii;
                mu *= sys.grid.weights[static_cast<size_t>(ii)];
            }
        total += mu * config_weight(sys, cfg);
    });
    return total / std::pow(factorial(n), s);
}

Complex brute_force_correlation(const TransitionSystem& sys, const std::vector<Site>& sites,
                                double guard) {
    sys.validate();
    int n = sys.n, s = sys.interior_slices(), g = sys.grid.size();
    std::vector<std::vector<int>> fixed(static_cast<size_t>(s));
    for (const auto& site : sites) {
        int r = site.r + sys.M - 1;
        if (r < 0 || r >= s) throw std::invalid_argument("brute_force_correlation: site time outside window");
        fixed[static_cast<size_t>(r)].push_back(site.ix);
        if (static_cast<int>(fixed[static_cast<size_t>(r)].size()) > n)
            throw std::invalid_argument("brute_force_correlation: more sites than particles at one time");
    }
    int free_coords = 0;
    for (int r = 0; r < s; ++r) free_coords += n - static_cast<int>(fixed[static_cast<size_t>(r)].size());
    if (std::pow(static_cast<double>(g), free_coords) > guard)
        throw std::runtime_error("brute force size guard exceeded");

    Complex z = brute_force_partition(sys, guard);
    std::vector<std::vector<int>> cfg(static_cast<size_t>(s), std::vector<int>(static_cast<size_t>(n)));
    Complex total = 0;
    for_each_tuple(free_coords, g, [&](const std::vector<int>& idx) {
        double mu = 1;
        int pos = 0;
        for (int r = 0; r < s; ++r) {
            const auto& fx = fixed[static_cast<size_t>(r)];
            for (int i = 0; i < n; ++i) {
                int ii;
                if (i < static_cast<int>(fx.size())) {
                    ii = fx[static_cast<size_t>(i)];  // fixed sites: no measure factor
                } else {
                    ii = idx[static_cast<size_t>(pos++)];
                    mu *= sys.grid.weights[static_cast<size_t>(ii)];
                }
                cfg[static_cast<size_t>(r)][static_cast<size_t>(i)] = ii;
            }
        }
        total += mu * config_weight(sys, cfg);
    });
    double sym = 1;
    for (int r = 0; r < s; ++r) {
        int k = static_cast<int>(fixed[static_cast<size_t>(r)].size());
        sym *= factorial(n) / factorial(n - k);
    }
    return total * sym / (std::pow(factorial(n), s) * z);
}

Complex brute_force_expectation(const TransitionSystem& sys,
                                const std::function<Complex(int, int)>& g, double guard) {
    sys.validate();
    if (sys.config_count() > guard) throw std::runtime_error("brute force size guard exceeded");
    int n = sys.n, s = sys.interior_slices(), gs = sys.grid.size();
    Complex z = brute_force_partition(sys, guard);
    std::vector<std::vector<int>> cfg(static_cast<size_t>(s), std::vector<int>(static_cast<size_t>(n)));
    Complex total = 0;
    for_each_tuple(n * s, gs, [&](const std::vector<int>& idx) {
        double mu = 1;
        Complex fac = 1;
        for (int r = 0; r < s; ++r)
            for (int i = 0; i < n; ++i) {
                int ii = idx[static_cast<size_t>(r * n + i)];
                cfg[static_cast<size_t>(r)][static_cast<size_t>(i)] = ii;
                mu *= sys.grid.weights[static_cast<size_t>(ii)];
                fac *= Complex(1, 0) + g(r - sys.M + 1, ii);
            }
        total += mu * fac * config_weight(sys, cfg);
    });
    return total / (std::pow(factorial(n), s) * z);
}

Complex kernel_correlation(const BlockKernel& kernel, const std::vector<Site>& sites) {
    int k = static_cast<int>(sites.size());
    CMatrix d(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            d(i, j) = kernel.block(sites[static_cast<size_t>(i)].r, sites[static_cast<size_t>(j)].r)(
                sites[static_cast<size_t>(i)].ix, sites[static_cast<size_t>(j)].ix);
    }
    return d.determinant();
}

Complex fredholm_det_expansion(const CMatrix& kernel, const GridMeasure& measure, int max_order) {
    if (kernel.rows() != measure.size() || kernel.cols() != measure.size())
        throw std::invalid_argument("fredholm_det_expansion: kernel/measure mismatch");
    CMatrix b = kernel * measure.weight_vector().asDiagonal();
    // partial sums of the characteristic polynomial via eigenvalues:
    // det(I + B) truncated = sum_{m<=max_order} e_m(lambda)
    Eigen::ComplexEigenSolver<CMatrix> es(b, false);
    const auto& lam = es.eigenvalues();
    int g = static_cast<int>(lam.size());
    int top = std::min(max_order, g);
    std::vector<Complex> e(static_cast<size_t>(top + 1), Complex(0, 0));
    e[0] = 1;
    for (int i = 0; i < g; ++i)
        for (int m = std::min(top, i + 1); m >= 1; --m) e[static_cast<size_t>(m)] += lam[i] * e[static_cast<size_t>(m - 1)];
    Complex sum = 0;
    for (int m = 0; m <= top; ++m) sum += e[static_cast<size_t>(m)];
    return sum;
}

namespace {

// big matrix over the product space (interior slice, grid point); kernel row
// weighting by g and column weighting by mu gives det(I + g K) directly.
CMatrix big_gk(const BlockKernel& kernel, const std::function<Complex(int, int)>& g) {
    int s = 2 * kernel.M() - 1, gs = kernel.grid().size();
    int dim = s * gs;
    CMatrix b(dim, dim);
    for (int r = 0; r < s; ++r) {
        for (int t = 0; t < s; ++t) {
            CMatrix blk = kernel.block(r - kernel.M() + 1, t - kernel.M() + 1);
            for (int x = 0; x < gs; ++x)
                for (int y = 0; y < gs; ++y)
                    b(r * gs + x, t * gs + y) = g(r - kernel.M() + 1, x) * blk(x, y) *
                                                kernel.grid().weights[static_cast<size_t>(y)];
        }
    }
    return b;
}

}  // namespace

Complex gap_probability(const BlockKernel& kernel, const std::function<Complex(int, int)>& g) {
    int dim = (2 * kernel.M() - 1) * kernel.grid().size();
    CMatrix b = big_gk(kernel, g);
    return (CMatrix::Identity(dim, dim) + b).partialPivLu().determinant();
}

Complex gap_probability(const TransitionSystem& sys, const std::function<Complex(int, int)>& g) {
    return gap_probability(BlockKernel(sys), g);
}

std::pair<Complex, Complex> product_rule_check(const TransitionSystem& sys,
                                               const std::function<Complex(int, int)>& g, Complex z,
                                               Complex w) {
    BlockKernel kernel(sys);
    int s = 2 * sys.M - 1, gs = sys.grid.size();
    int dim = s * gs;
    Eigen::VectorXd mu = sys.grid.weight_vector();

    // operator matrices (kernel * diag(measure)) on the product space
    CMatrix psi = CMatrix::Zero(dim, dim);  // g(u,t) phi_{u,v}(t,s)
    CMatrix amat = CMatrix::Zero(dim, dim); // g(u,t) Ktilde(u,t;v,s)
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < s; ++v) {
            CMatrix ph = kernel.phi(u - sys.M + 1, v - sys.M + 1);
            CMatrix kt = kernel.ktilde(u - sys.M + 1, v - sys.M + 1);
            for (int x = 0; x < gs; ++x)
                for (int y = 0; y < gs; ++y) {
                    Complex gx = g(u - sys.M + 1, x);
                    psi(u * gs + x, v * gs + y) = gx * ph(x, y) * mu[y];
                    amat(u * gs + x, v * gs + y) = gx * kt(x, y) * mu[y];
                }
        }

    int m = 2 * sys.M - 1;
    CMatrix lhs_sum = CMatrix::Zero(dim, dim);
    CMatrix psi_pow = CMatrix::Identity(dim, dim);  // psi^{*(j-1)}, j = 1 first
    Complex zj = z;
    for (int j = 1; j <= m; ++j) {
        lhs_sum += zj * psi_pow * amat;
        psi_pow = psi_pow * psi;
        zj *= z;
    }
    CMatrix eye = CMatrix::Identity(dim, dim);
    Complex lhs = (eye + w * lhs_sum).partialPivLu().determinant();
    Complex rhs = (eye - z * psi + z * w * amat).partialPivLu().determinant();
    return {lhs, rhs};
}

}  // namespace pngdet
