#include "pngdet/airy_fdd.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pngdet/airy.hpp"
#include "pngdet/quadrature.hpp"

namespace pngdet {

namespace {

// Shared lambda-grid for all blocks: panels of Gauss-Legendre nodes on
// (0, cut).  Every block entry is then a weighted dot product of
// precomputed Airy values, one column per lambda node.
struct LambdaGrid {
    std::vector<double> nodes, weights;
};

LambdaGrid lambda_grid(double cut, double width, int per_panel) {
    LambdaGrid g;
    std::vector<double> xs, ws;
    for (double a = 0; a < cut; a += width) {
        double b = std::min(a + width, cut);
        gl_nodes(per_panel, a, b, xs, ws);
        g.nodes.insert(g.nodes.end(), xs.begin(), xs.end());
        g.weights.insert(g.weights.end(), ws.begin(), ws.end());
    }
    return g;
}

double block_determinant(const std::vector<double>& taus, const std::vector<double>& xis, int m_q,
                         double L) {
    int m = static_cast<int>(taus.size());
    double dt_max = 0;
    for (int k = 0; k + 1 < m; ++k) dt_max = std::max(dt_max, taus[static_cast<size_t>(k + 1)] - taus[static_cast<size_t>(k)]);
    double cut = 42.0 + 3.0 * dt_max * dt_max;
    LambdaGrid lam = lambda_grid(cut, 0.75, 16);
    size_t nl = lam.nodes.size();

    // spatial nodes per block and Airy values Ai(x_i + lambda_t)
    std::vector<std::vector<double>> xs(static_cast<size_t>(m)), ws(static_cast<size_t>(m));
    std::vector<Eigen::MatrixXd> ai(static_cast<size_t>(m));  // m_q x nl
    for (int k = 0; k < m; ++k) {
        gl_nodes(m_q, xis[static_cast<size_t>(k)], xis[static_cast<size_t>(k)] + L, xs[static_cast<size_t>(k)], ws[static_cast<size_t>(k)]);
        ai[static_cast<size_t>(k)].resize(m_q, static_cast<long>(nl));
        for (int i = 0; i < m_q; ++i)
            for (size_t t = 0; t < nl; ++t)
                ai[static_cast<size_t>(k)](i, static_cast<long>(t)) =
                    airy_fn(xs[static_cast<size_t>(k)][static_cast<size_t>(i)] + lam.nodes[t]).ai;
    }

    int dim = m * m_q;
    Eigen::MatrixXd big(dim, dim);
    for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
            double dt = taus[static_cast<size_t>(k)] - taus[static_cast<size_t>(l)];
            // Atilde part: integral over (0,inf) with weight e^{-lambda dt}
            Eigen::VectorXd wexp(static_cast<long>(nl));
            for (size_t t = 0; t < nl; ++t)
                wexp(static_cast<long>(t)) = lam.weights[t] * std::exp(-lam.nodes[t] * dt);
            Eigen::MatrixXd blk = ai[static_cast<size_t>(k)] * wexp.asDiagonal() *
                                  ai[static_cast<size_t>(l)].transpose();
            if (dt < 0) {
                // A = Atilde - phi for tau_k < tau_l
                for (int i = 0; i < m_q; ++i)
                    for (int j = 0; j < m_q; ++j)
                        blk(i, j) -= phi_gaussian(taus[static_cast<size_t>(k)], taus[static_cast<size_t>(l)],
                                                  xs[static_cast<size_t>(k)][static_cast<size_t>(i)],
                                                  xs[static_cast<size_t>(l)][static_cast<size_t>(j)]);
            }
            for (int i = 0; i < m_q; ++i)
                for (int j = 0; j < m_q; ++j)
                    big(k * m_q + i, l * m_q + j) =
                        -std::sqrt(ws[static_cast<size_t>(k)][static_cast<size_t>(i)] *
                                   ws[static_cast<size_t>(l)][static_cast<size_t>(j)]) *
                        blk(i, j);
        }
    }
    big += Eigen::MatrixXd::Identity(dim, dim);
    return big.partialPivLu().determinant();
}

}  // namespace

double NystromOperator::determinant() const { return block_determinant(taus, xis, m_q, L); }

FddResult airy_fdd(std::vector<double> taus, std::vector<double> xis, int m_q, double L,
                   bool stability_check) {
    if (taus.size() != xis.size() || taus.empty()) throw std::invalid_argument("airy_fdd: size mismatch");
    if (m_q < 30 || L < 8.0) throw std::invalid_argument("airy_fdd: need m_q >= 30, L >= 8");
    // sort by time; stationarity makes only differences matter
    std::vector<size_t> order(taus.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return taus[a] < taus[b]; });
    std::vector<double> ts, ls;
    for (size_t i : order) {
        ts.push_back(taus[i]);
        ls.push_back(xis[i]);
    }
    for (size_t i = 0; i + 1 < ts.size(); ++i)
        if (ts[i] == ts[i + 1]) throw std::invalid_argument("airy_fdd: times must be distinct");

    FddResult res;
    res.prob = block_determinant(ts, ls, m_q, L);
    res.m_q = m_q;
    res.L = L;
    // mass beyond the window: one-point density of the Airy process at the
    // far edge, integrated (it decays like Ai^2)
    double tail = 0;
    for (size_t k = 0; k < ts.size(); ++k) {
        double edge = ls[k] + L;
        tail += airy_kernel_classic(edge, edge);
    }
    res.tail_bound = tail;
    if (stability_check) {
        double again = block_determinant(ts, ls, 2 * m_q, L + 2.0);
        if (std::abs(again - res.prob) > 1e-6)
            throw std::runtime_error("airy_fdd: quadrature instability (doubling m_q moved the value)");
    }
    return res;
}

}  // namespace pngdet
