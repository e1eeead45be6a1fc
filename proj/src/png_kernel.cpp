#include "pngdet/png_kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pngdet/airy_kernel.hpp"
#include "pngdet/quadrature.hpp"

namespace pngdet {

PNGKernelParams PNGKernelParams::make(double q, int N) {
    PNGKernelParams p;
    p.consts = png_constants(q);
    p.alpha = p.consts.alpha;
    p.N = N;
    if (N < 1) throw std::invalid_argument("PNGKernelParams: N < 1");
    return p;
}

double PNGKernelParams::n13() const { return std::cbrt(static_cast<double>(N)); }
double PNGKernelParams::n23() const { return n13() * n13(); }

std::pair<double, double> ContourSpec::radii(const PNGKernelParams& p) const {
    double lo = p.alpha, hi = 1.0 / p.alpha;
    if (r1 != 0.0 || r2 != 0.0) {
        if (!(lo < r1 && r1 < 1.0 && 1.0 < r2 && r2 < hi))
            throw std::invalid_argument("ContourSpec: need alpha < r1 < 1 < r2 < 1/alpha");
        return {r1, r2};
    }
    double out = 1.0 + 1.0 / (p.consts.d * p.n13());
    out = std::min(out, 0.5 * (1.0 + hi));
    return {1.0 / out, out};
}

namespace {

// z-side and w-side analytic factors of G
Complex g_factor(const PNGKernelParams& p, int u, Complex z) {
    double a = p.alpha;
    return std::exp(static_cast<double>(p.N + u) * std::log(1.0 - a / z) -
                    static_cast<double>(p.N - u) * std::log(1.0 - a * z));
}
Complex h_factor(const PNGKernelParams& p, int v, Complex w) {
    double a = p.alpha;
    return std::exp(static_cast<double>(p.N - v) * std::log(1.0 - a * w) -
                    static_cast<double>(p.N + v) * std::log(1.0 - a / w));
}

// integer power by exp-log (safe: bases stay in the right half-plane)
Complex ipow(Complex z, std::int64_t k) {
    if (k == 0) return 1.0;
    return std::exp(static_cast<double>(k) * std::log(z));
}

// Laurent coefficients with a per-sign radius choice: index j is extracted
// on the circle where the quadrature noise floor ~ ulp * max|f| * r^{-j}
// shrinks instead of exploding.
std::vector<Complex> laurent_split(const std::function<Complex(Complex)>& f, long long m_lo,
                                   long long m_hi, double r_inner, double r_outer, double tol,
                                   int n0, int n_max) {
    std::vector<Complex> out;
    out.reserve(static_cast<size_t>(m_hi - m_lo + 1));
    if (m_lo < 0) {
        auto neg = laurent_coefficients(f, m_lo, std::min(m_hi, -1LL), r_inner, tol, n0, n_max);
        out.insert(out.end(), neg.begin(), neg.end());
    }
    if (m_hi >= 0) {
        auto pos = laurent_coefficients(f, std::max(m_lo, 0LL), m_hi, r_outer, tol, n0, n_max);
        out.insert(out.end(), pos.begin(), pos.end());
    }
    return out;
}

// tensor-product trapezoid double contour
double tensor_contour(const PNGKernelParams& p, int u, std::int64_t x, int v, std::int64_t y,
                      double rz, double rw, const ContourSpec& spec) {
    double pref = std::pow(1.0 - p.alpha, 2.0 * (v - u));
    auto value = [&](int n) {
        std::vector<Complex> az(static_cast<size_t>(n)), bw(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) {
            double th = 2.0 * std::numbers::pi * k / n;
            Complex z = std::polar(rz, th);
            Complex w = std::polar(rw, th);
            az[static_cast<size_t>(k)] = ipow(z, 1 - x) * g_factor(p, u, z);
            bw[static_cast<size_t>(k)] = ipow(w, y) * h_factor(p, v, w);
        }
        Complex acc = 0;
        for (int k = 0; k < n; ++k) {
            Complex zk = std::polar(rz, 2.0 * std::numbers::pi * k / n);
            for (int l = 0; l < n; ++l) {
                Complex wl = std::polar(rw, 2.0 * std::numbers::pi * l / n);
                acc += az[static_cast<size_t>(k)] * bw[static_cast<size_t>(l)] / (zk - wl);
            }
        }
        return acc / static_cast<double>(n) / static_cast<double>(n);
    };
    Complex prev = value(spec.initial_nodes);
    for (int n = 2 * spec.initial_nodes; n <= spec.max_nodes; n *= 2) {
        Complex cur = value(n);
        if (std::abs(cur - prev) <= spec.tol * std::max(1.0, std::abs(cur)))
            return pref * cur.real();
        prev = cur;
    }
    throw std::runtime_error("png_kernel: contour quadrature did not converge");
}

}  // namespace

Complex png_G(const PNGKernelParams& p, int u, int v, Complex z, Complex w) {
    return std::pow(1.0 - p.alpha, 2.0 * (v - u)) * g_factor(p, u, z) * h_factor(p, v, w);
}

double phi_uv(const PNGKernelParams& p, int u, int v, std::int64_t x, std::int64_t y, double tol) {
    if (u >= v) return 0.0;
    double pref = std::pow(1.0 - p.alpha, 2.0 * (v - u));
    auto value = [&](int n) {
        // symbol (1+alpha^2-2 alpha cos t)^{-(v-u)}, Fourier mode y-x
        double acc = 0;
        for (int k = 0; k < n; ++k) {
            double th = 2.0 * std::numbers::pi * k / n - std::numbers::pi;
            double base = 1.0 + p.alpha * p.alpha - 2.0 * p.alpha * std::cos(th);
            acc += std::cos(static_cast<double>(y - x) * th) * std::pow(base, -(v - u));
        }
        return acc / n;
    };
    double prev = value(128);
    for (int n = 256; n <= (1 << 16); n *= 2) {
        double cur = value(n);
        if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return pref * cur;
        prev = cur;
    }
    throw std::runtime_error("phi_uv: quadrature did not converge");
}

double png_kernel(const PNGKernelParams& p, int u, std::int64_t x, int v, std::int64_t y,
                  const ContourSpec& spec) {
    if (std::abs(u) >= p.N || std::abs(v) >= p.N)
        throw std::invalid_argument("png_kernel: need |u|, |v| < N");
    auto [r1, r2] = spec.radii(p);
    // z outside for u >= v; swapped for u < v (picks up the residue = -phi)
    return (u >= v) ? tensor_contour(p, u, x, v, y, r2, r1, spec)
                    : tensor_contour(p, u, x, v, y, r1, r2, spec);
}

double png_ktilde_outer(const PNGKernelParams& p, int u, std::int64_t x, int v, std::int64_t y,
                        const ContourSpec& spec) {
    auto [r1, r2] = spec.radii(p);
    return tensor_contour(p, u, x, v, y, r2, r1, spec);
}

Eigen::MatrixXd png_kernel_block(const PNGKernelParams& p, int u, int v, std::int64_t x_lo,
                                 std::int64_t x_hi, std::int64_t y_lo, std::int64_t y_hi,
                                 const ContourSpec& spec) {
    auto [r1, r2] = spec.radii(p);
    double pref = std::pow(1.0 - p.alpha, 2.0 * (v - u));
    long nx = static_cast<long>(x_hi - x_lo + 1), ny = static_cast<long>(y_hi - y_lo + 1);
    Eigen::MatrixXd out(nx, ny);
    // series tail length from the contour ratio
    int tail = static_cast<int>(std::ceil(42.0 / (2.0 * std::log(r2)))) + 8;

    auto gz = [&](Complex z) { return g_factor(p, u, z); };
    auto hw = [&](Complex w) { return h_factor(p, v, w); };

    if (u >= v) {
        // K(x,y) = pref * sum_{k>=0} P(x+k) Q(y+k); P at the outer radius,
        // Q at the inner one
        auto pc = laurent_split(gz, x_lo, x_hi + tail, r1, r2, spec.tol, spec.initial_nodes,
                                spec.max_nodes);
        // Q(m) = coefficient of w^{-m}  <=>  Laurent coefficient -m
        auto qc = laurent_split(hw, -(y_hi + tail), -y_lo, r1, r2, spec.tol, spec.initial_nodes,
                                spec.max_nodes);
        for (long i = 0; i < nx; ++i)
            for (long j = 0; j < ny; ++j) {
                double s = 0;
                for (int k = 0; k <= tail; ++k) {
                    Complex pk = pc[static_cast<size_t>(i + k)];
                    Complex qk = qc[static_cast<size_t>(y_hi + tail - (y_lo + j + k))];
                    s += (pk * qk).real();
                }
                out(i, j) = pref * s;
            }
    } else {
        // K(x,y) = -pref * sum_{k>=0} P(x-1-k) Q(y-1-k); P inner, Q outer
        auto pc = laurent_split(gz, x_lo - 1 - tail, x_hi - 1, r1, r2, spec.tol,
                                spec.initial_nodes, spec.max_nodes);
        auto qc = laurent_split(hw, -(y_hi - 1), -(y_lo - 1 - tail), r1, r2, spec.tol,
                                spec.initial_nodes, spec.max_nodes);
        for (long i = 0; i < nx; ++i)
            for (long j = 0; j < ny; ++j) {
                double s = 0;
                for (int k = 0; k <= tail; ++k) {
                    Complex pk = pc[static_cast<size_t>(i - k + tail)];      // index of x-1-k
                    Complex qk = qc[static_cast<size_t>(ny - 1 - j + k)];    // index of -(y-1-k)
                    s += (pk * qk).real();
                }
                out(i, j) = -pref * s;
            }
    }
    return out;
}

double png_gap_probability(const PNGKernelParams& p, const std::vector<int>& slices,
                           const std::vector<std::int64_t>& levels, int window,
                           const ContourSpec& spec) {
    if (slices.size() != levels.size() || slices.empty())
        throw std::invalid_argument("png_gap_probability: size mismatch");
    int m = static_cast<int>(slices.size());
    int w = window > 0 ? window : static_cast<int>(std::ceil(12.0 * p.consts.d * p.n13())) + 24;
    std::vector<long> offset(static_cast<size_t>(m) + 1, 0);
    for (int k = 0; k < m; ++k) offset[static_cast<size_t>(k + 1)] = offset[static_cast<size_t>(k)] + w;
    long dim = offset[static_cast<size_t>(m)];
    Eigen::MatrixXd big(dim, dim);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Eigen::MatrixXd blk = png_kernel_block(
                p, slices[static_cast<size_t>(a)], slices[static_cast<size_t>(b)],
                levels[static_cast<size_t>(a)] + 1, levels[static_cast<size_t>(a)] + w,
                levels[static_cast<size_t>(b)] + 1, levels[static_cast<size_t>(b)] + w, spec);
            big.block(offset[static_cast<size_t>(a)], offset[static_cast<size_t>(b)], w, w) = blk;
        }
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
    return (id - big).partialPivLu().determinant();
}

ScaledKernelValue scaled_kernel_limit(const PNGKernelParams& p, double tau, double xi, double taup,
                                      double xip, const ContourSpec& spec) {
    const auto& c = p.consts;
    ScaledKernelValue r;
    r.u = std::llround(c.c * tau * p.n23());
    r.v = std::llround(c.c * taup * p.n23());
    r.x = std::llround(c.a_star * p.N + (xi - tau * tau) * c.d * p.n13());
    r.y = std::llround(c.a_star * p.N + (xip - taup * taup) * c.d * p.n13());
    if (std::llabs(r.u) >= p.N || std::llabs(r.v) >= p.N)
        throw std::invalid_argument("scaled_kernel_limit: N too small for the requested times");
    r.kernel_side = c.d * p.n13() *
                    png_kernel(p, static_cast<int>(r.u), r.x, static_cast<int>(r.v), r.y, spec);
    double conj = std::exp((tau * tau * tau - taup * taup * taup) / 3.0 + xip * taup - xi * tau);
    r.airy_side = conj * extended_airy_kernel(tau, xi, taup, xip);
    return r;
}

TransitionSystem png_transition_system(const GeomParams& params, int N, int n, std::int64_t h_max) {
    params.validate();
    if (n < N) throw std::invalid_argument("png_transition_system: need n >= N curves");
    SymbolSystem sys = SymbolSystem::png(params, N);
    int M = sys.M;
    std::int64_t h_min = 1 - n;
    if (h_max < 1) throw std::invalid_argument("png_transition_system: h_max too small");
    long g = static_cast<long>(h_max - h_min + 1);

    std::vector<double> pts(static_cast<size_t>(g));
    for (long k = 0; k < g; ++k) pts[static_cast<size_t>(k)] = static_cast<double>(h_min + k);

    TransitionSystem out;
    out.M = M;
    out.n = n;
    out.grid = GridMeasure::counting(pts);

    auto step_matrix = [&](int r, long rows, long cols, bool from_boundary, bool to_boundary) {
        // Fourier coefficients of f_r over every displacement we can meet
        auto coeffs = sys.at(r).fourier_coefficients(-(g - 1), g - 1);
        CMatrix mtx(rows, cols);
        for (long i = 0; i < rows; ++i)
            for (long j = 0; j < cols; ++j) {
                std::int64_t xi_ = from_boundary ? -(i) : h_min + i;  // boundary x_i = 1-(i+1) = -i
                std::int64_t yj = to_boundary ? -(j) : h_min + j;
                std::int64_t d = yj - xi_;
                mtx(i, j) = (std::llabs(d) <= g - 1) ? coeffs[static_cast<size_t>(d + g - 1)] : 0.0;
            }
        return mtx;
    };

    out.phi_first = step_matrix(-M, n, g, true, false);
    for (int r = -M + 1; r <= M - 2; ++r) out.phi_mid.push_back(step_matrix(r, g, g, false, false));
    out.phi_last = step_matrix(M - 1, g, n, false, true);
    return out;
}

Complex png_partition_det(const GeomParams& params, int N, int n, std::int64_t h_max) {
    return partition_function(png_transition_system(params, N, n, h_max));
}

double png_partition_closed_form(const GeomParams& params, int N, int n) {
    double z = 1.0;
    for (int j = 1; j <= 2 * N - 1; ++j)
        z *= std::pow((1.0 - params.a_at(j)) * (1.0 - params.b_at(j)), n);
    for (int i = 1; i <= 2 * N - 1; ++i)
        for (int j = 1; i + j <= 2 * N; ++j) z /= (1.0 - params.a_at(i) * params.b_at(j));
    return z;
}

}  // namespace pngdet
