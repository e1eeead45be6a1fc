#include "pngdet/tracy_widom.hpp"

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <stdexcept>

#include "pngdet/airy.hpp"
#include "pngdet/airy_kernel.hpp"
#include "pngdet/quadrature.hpp"

namespace pngdet {

namespace {

using State = std::array<double, 5>;  // q, q', J1, J2, J3

State rhs(double x, const State& y) {
    return {y[1], x * y[0] + 2.0 * y[0] * y[0] * y[0], -y[0], -y[0] * y[0], -x * y[0] * y[0]};
}

// Dormand-Prince 5(4) step with error estimate
State dp45(double x, const State& y, double h, double& err) {
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                        b6 = 11.0 / 84;
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
    auto axpy = [](const State& base, std::initializer_list<std::pair<double, const State*>> terms,
                   double h_) {
        State r = base;
        for (auto& [c, k] : terms)
            for (int i = 0; i < 5; ++i) r[static_cast<size_t>(i)] += h_ * c * (*k)[static_cast<size_t>(i)];
        return r;
    };
    State k1 = rhs(x, y);
    State k2 = rhs(x + c2 * h, axpy(y, {{a21, &k1}}, h));
    State k3 = rhs(x + c3 * h, axpy(y, {{a31, &k1}, {a32, &k2}}, h));
    State k4 = rhs(x + c4 * h, axpy(y, {{a41, &k1}, {a42, &k2}, {a43, &k3}}, h));
    State k5 = rhs(x + c5 * h, axpy(y, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}, h));
    State k6 = rhs(x + h, axpy(y, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}, h));
    State y5 = axpy(y, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}}, h);
    State k7 = rhs(x + h, y5);
    err = 0;
    for (int i = 0; i < 5; ++i) {
        double e = h * (e1 * k1[static_cast<size_t>(i)] + e3 * k3[static_cast<size_t>(i)] +
                        e4 * k4[static_cast<size_t>(i)] + e5 * k5[static_cast<size_t>(i)] +
                        e6 * k6[static_cast<size_t>(i)] + e7 * k7[static_cast<size_t>(i)]);
        err = std::max(err, std::abs(e));
    }
    return y5;
}

// integrate from x0 to x1 (x1 < x0) with local error control
State integrate_to(double x0, State y, double x1, double tol) {
    double x = x0;
    double h = -0.05;
    while (x > x1 + 1e-13) {
        if (x + h < x1) h = x1 - x;
        double err;
        State y_new = dp45(x, y, h, err);
        if (err <= tol || std::abs(h) < 1e-10) {
            x += h;
            y = y_new;
            if (y[0] < -1e-8 || y[0] > 10.0)
                throw std::runtime_error("painleve_hastings_mcleod: q left [0,10] (blow-up)");
            if (err > 0) h *= std::min(2.0, 0.9 * std::pow(tol / err, 0.2));
        } else {
            h *= std::max(0.2, 0.9 * std::pow(tol / err, 0.2));
        }
    }
    return y;
}

double airy_tail(int which, double x0) {
    // int_{x0}^{40} of Ai, Ai^2, x Ai^2; beyond 40 everything is below 1e-100
    auto f = [&](double x) {
        double a = airy_fn(x).ai;
        if (which == 1) return a;
        if (which == 2) return a * a;
        return x * a * a;
    };
    double s = 0;
    for (double a = x0; a < 40.0; a += 1.0) s += gl_integrate(f, a, std::min(a + 1.0, 40.0), 24);
    return s;
}

}  // namespace

TWTables TWTables::build(double x_min, double x_max) {
    if (x_max < 8.0) throw std::invalid_argument("TWTables: x_max >= 8 required");
    TWTables t;
    t.x_min_ = x_min;
    t.x_max_ = x_max;
    t.step_ = 0.02;
    int n = static_cast<int>(std::round((x_max - x_min) / t.step_)) + 1;
    t.q_.resize(static_cast<size_t>(n));
    t.qp_.resize(static_cast<size_t>(n));
    t.j1_.resize(static_cast<size_t>(n));
    t.j2_.resize(static_cast<size_t>(n));
    t.j3_.resize(static_cast<size_t>(n));

    AiryPair a = airy_fn(x_max);
    State y{a.ai, a.aip, airy_tail(1, x_max), airy_tail(2, x_max), airy_tail(3, x_max)};
    double xcur = x_max;
    for (int k = n - 1; k >= 0; --k) {
        double target = x_min + k * t.step_;
        y = integrate_to(xcur, y, target, 1e-10);
        xcur = target;
        t.q_[static_cast<size_t>(k)] = y[0];
        t.qp_[static_cast<size_t>(k)] = y[1];
        t.j1_[static_cast<size_t>(k)] = y[2];
        t.j2_[static_cast<size_t>(k)] = y[3];
        t.j3_[static_cast<size_t>(k)] = y[4];
    }
    return t;
}

double TWTables::interp(const std::vector<double>& v, double x) const {
    if (x < x_min_ || x > x_max_) throw std::out_of_range("TWTables: x outside table");
    double s = (x - x_min_) / step_;
    int k = std::min(static_cast<int>(s), static_cast<int>(v.size()) - 2);
    double u = s - k;
    // cubic Hermite on the cell using finite-difference slopes would lose
    // accuracy; all stored quantities have analytic derivatives
    auto deriv = [&](int idx) {
        double xx = x_min_ + idx * step_;
        double qq = q_[static_cast<size_t>(idx)];
        if (&v == &q_) return qp_[static_cast<size_t>(idx)];
        if (&v == &qp_) return xx * qq + 2 * qq * qq * qq;
        if (&v == &j1_) return -qq;
        if (&v == &j2_) return -qq * qq;
        return -xx * qq * qq;
    };
    double y0 = v[static_cast<size_t>(k)], y1 = v[static_cast<size_t>(k + 1)];
    double d0 = deriv(k) * step_, d1 = deriv(k + 1) * step_;
    double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * d0 + (-2 * u3 + 3 * u2) * y1 +
           (u3 - u2) * d1;
}

double TWTables::q(double x) const { return interp(q_, x); }

double TWTables::f2(double xi) const { return std::exp(-(interp(j3_, xi) - xi * interp(j2_, xi))); }

double TWTables::f1(double xi) const {
    return std::sqrt(f2(xi)) * std::exp(-0.5 * interp(j1_, xi));
}

const TWTables& tw_tables() {
    static const TWTables t = TWTables::build(-10.0, 10.0);
    return t;
}

double tw2_painleve(double xi) { return tw_tables().f2(xi); }

double tw2_nystrom(double xi, int m_q, double L) {
    std::vector<double> xs, ws;
    gl_nodes(m_q, xi, xi + L, xs, ws);
    Eigen::MatrixXd m(m_q, m_q);
    for (int i = 0; i < m_q; ++i)
        for (int j = 0; j < m_q; ++j)
            m(i, j) = (i == j ? 1.0 : 0.0) - std::sqrt(ws[static_cast<size_t>(i)] * ws[static_cast<size_t>(j)]) *
                                                airy_kernel_classic(xs[static_cast<size_t>(i)], xs[static_cast<size_t>(j)]);
    return m.partialPivLu().determinant();
}

double tw2(double xi) {
    if (xi < -10.0 || xi > 10.0) throw std::invalid_argument("tw2: xi outside [-10,10]");
    double a = tw2_painleve(xi);
    double b = tw2_nystrom(xi);
    if (std::abs(a - b) > 1e-6) throw std::runtime_error("tw2: Painleve and Nystrom routes disagree");
    return a;
}

double tw1(double xi) {
    if (xi < -10.0 || xi > 10.0) throw std::invalid_argument("tw1: xi outside [-10,10]");
    return tw_tables().f1(xi);
}

}  // namespace pngdet
