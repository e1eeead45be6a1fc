#include "pngdet/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace pngdet {

static GaussLegendre compute_gl(int n) {
    GaussLegendre r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Tricomi-style initial guess, then Newton on P_n
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p0 = 0, p1 = 0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

const GaussLegendre& gauss_legendre(int n) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
    return it->second;
}

void gl_nodes(int n, double a, double b, std::vector<double>& x, std::vector<double>& w) {
    const auto& gl = gauss_legendre(n);
    x.resize(n);
    w.resize(n);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        x[i] = mid + half * gl.nodes[i];
        w[i] = half * gl.weights[i];
    }
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, int n) {
    std::vector<double> x, w;
    gl_nodes(n, a, b, x, w);
    double s = 0;
    for (int i = 0; i < n; ++i) s += w[i] * f(x[i]);
    return s;
}

Complex circle_average(const std::function<Complex(Complex)>& f, double r, int n_nodes) {
    Complex s = 0;
    for (int k = 0; k < n_nodes; ++k) {
        double th = 2.0 * std::numbers::pi * k / n_nodes;
        s += f(Complex(r * std::cos(th), r * std::sin(th)));
    }
    return s / static_cast<double>(n_nodes);
}

Complex laurent_coefficient(const std::function<Complex(Complex)>& f, long long m, double r,
                            double tol, int n0, int n_max) {
    auto value = [&](int n) {
        Complex s = 0;
        for (int k = 0; k < n; ++k) {
            double th = 2.0 * std::numbers::pi * k / n;
            Complex z(r * std::cos(th), r * std::sin(th));
            s += f(z) * std::polar(1.0, -th * static_cast<double>(m));
        }
        return s / static_cast<double>(n) * std::pow(r, static_cast<double>(-m));
    };
    Complex prev = value(n0);
    for (int n = 2 * n0; n <= n_max; n *= 2) {
        Complex cur = value(n);
        if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    throw std::runtime_error("laurent_coefficient: quadrature did not converge");
}

std::vector<Complex> laurent_coefficients(const std::function<Complex(Complex)>& f, long long m_lo,
                                          long long m_hi, double r, double tol, int n0, int n_max) {
    if (m_hi < m_lo) return {};
    auto values = [&](int n) {
        std::vector<Complex> fs(n);
        for (int k = 0; k < n; ++k) {
            double th = 2.0 * std::numbers::pi * k / n;
            fs[k] = f(Complex(r * std::cos(th), r * std::sin(th)));
        }
        std::vector<Complex> out(static_cast<size_t>(m_hi - m_lo + 1));
        for (long long m = m_lo; m <= m_hi; ++m) {
            Complex s = 0;
            for (int k = 0; k < n; ++k) {
                double th = 2.0 * std::numbers::pi * k / n;
                s += fs[k] * std::polar(1.0, -th * static_cast<double>(m));
            }
            out[static_cast<size_t>(m - m_lo)] =
                s / static_cast<double>(n) * std::pow(r, static_cast<double>(-m));
        }
        return out;
    };
    std::vector<Complex> prev = values(n0);
    for (int n = 2 * n0; n <= n_max; n *= 2) {
        std::vector<Complex> cur = values(n);
        double worst = 0;
        for (size_t i = 0; i < cur.size(); ++i)
            worst = std::max(worst, std::abs(cur[i] - prev[i]) / std::max(1.0, std::abs(cur[i])));
        if (worst <= tol) return cur;
        prev.swap(cur);
    }
    throw std::runtime_error("laurent_coefficients: quadrature did not converge");
}

}  // namespace pngdet
