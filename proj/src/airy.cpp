#include "pngdet/airy.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace pngdet {

namespace {

// Ai(0), Ai'(0), Bi(0), Bi'(0)
constexpr double kAi0 = 0.3550280538878172392600632;
constexpr double kAip0 = -0.2588194037928067984051836;
constexpr double kBi0 = 0.6149266274460007351509224;
constexpr double kBip0 = 0.4482883573538263579148237;

// u_k, v_k of the asymptotic expansions, u_0 = v_0 = 1,
// u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / (216 k (2k-1)), v_k = -u_k (6k+1)/(6k-1)
struct AsymCoeffs {
    std::array<double, 64> u{}, v{};
    AsymCoeffs() {
        u[0] = v[0] = 1.0;
        for (int k = 1; k < 64; ++k) {
            u[k] = u[k - 1] * (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) /
                   (216.0 * k * (2.0 * k - 1));
            v[k] = -u[k] * (6.0 * k + 1) / (6.0 * k - 1);
        }
    }
};
const AsymCoeffs kAsym;

// optimally truncated sum of c_k / zeta^k with alternating signs baked into `sign`
double asym_sum(const std::array<double, 64>& c, double zeta, int sign_flip) {
    double sum = 0, term_prev = 1e300;
    double zk = 1.0;
    for (int k = 0; k < 64; ++k) {
        double term = c[static_cast<size_t>(k)] * zk;
        if (std::abs(term) > term_prev) break;  // past the optimal truncation
        sum += (sign_flip && (k & 1)) ? -term : term;
        term_prev = std::abs(term);
        zk /= zeta;
    }
    return sum;
}

// Ai, Ai' for x >= asymptotic crossover
AiryPair ai_asym_pos(double x) {
    double sx = std::sqrt(x);
    double zeta = 2.0 / 3.0 * x * sx;
    double pre = std::exp(-zeta) / (2.0 * std::sqrt(std::numbers::pi));
    if (pre == 0.0) return {0.0, 0.0};  // underflow deep in the right tail
    double s_ai = asym_sum(kAsym.u, zeta, 1);
    double s_aip = asym_sum(kAsym.v, zeta, 1);
    return {pre / std::sqrt(sx) * s_ai, -pre * std::sqrt(sx) * s_aip};
}

BiPair bi_asym_pos(double x) {
    double sx = std::sqrt(x);
    double zeta = 2.0 / 3.0 * x * sx;
    double pre = std::exp(zeta) / std::sqrt(std::numbers::pi);
    double s_bi = asym_sum(kAsym.u, zeta, 0);
    double s_bip = asym_sum(kAsym.v, zeta, 0);
    return {pre / std::sqrt(sx) * s_bi, pre * std::sqrt(sx) * s_bip};
}

// oscillatory side, x <= -crossover; t = -x
AiryPair ai_asym_neg(double x) {
    double t = -x;
    double st = std::sqrt(t);
    double zeta = 2.0 / 3.0 * t * st;
    double ang = zeta + 0.25 * std::numbers::pi;
    double se = 0, so = 0, de = 0, dn = 0;  // even/odd partial sums for u and v
    double z2 = zeta * zeta;
    double zk_var = 1.0;
    double prev = 1e300;
    for (int k = 0; 2 * k + 1 < 64; ++k) {
        double ue = kAsym.u[static_cast<size_t>(2 * k)] * zk_var;
        if (std::abs(ue) > prev) break;
        double uo = kAsym.u[static_cast<size_t>(2 * k + 1)] * zk_var / zeta;
        double ve = kAsym.v[static_cast<size_t>(2 * k)] * zk_var;
        double vo = kAsym.v[static_cast<size_t>(2 * k + 1)] * zk_var / zeta;
        double sgn = (k & 1) ? -1.0 : 1.0;
        se += sgn * ue;
        so += sgn * uo;
        de += sgn * ve;
        dn += sgn * vo;
        prev = std::abs(ue);
        zk_var /= z2;
    }
    double pre = 1.0 / (std::sqrt(std::numbers::pi) * std::sqrt(st));
    double ai = pre * (std::sin(ang) * se - std::cos(ang) * so);
    double aip = -std::sqrt(st) / std::sqrt(std::numbers::pi) *
                 (std::cos(ang) * de + std::sin(ang) * dn);
    return {ai, aip};
}

BiPair bi_asym_neg(double x) {
    double t = -x;
    double st = std::sqrt(t);
    double zeta = 2.0 / 3.0 * t * st;
    double ang = zeta + 0.25 * std::numbers::pi;
    double se = 0, so = 0, de = 0, dn = 0;
    double z2 = zeta * zeta;
    double zk = 1.0;
    double prev = 1e300;
    for (int k = 0; 2 * k + 1 < 64; ++k) {
        double ue = kAsym.u[static_cast<size_t>(2 * k)] * zk;
        if (std::abs(ue) > prev) break;
        double uo = kAsym.u[static_cast<size_t>(2 * k + 1)] * zk / zeta;
        double ve = kAsym.v[static_cast<size_t>(2 * k)] * zk;
        double vo = kAsym.v[static_cast<size_t>(2 * k + 1)] * zk / zeta;
        double sgn = (k & 1) ? -1.0 : 1.0;
        se += sgn * ue;
        so += sgn * uo;
        de += sgn * ve;
        dn += sgn * vo;
        prev = std::abs(ue);
        zk /= z2;
    }
    double bi = (std::cos(ang) * se + std::sin(ang) * so) / (std::sqrt(std::numbers::pi) * std::sqrt(st));
    double bip = std::sqrt(st) / std::sqrt(std::numbers::pi) *
                 (std::sin(ang) * de - std::cos(ang) * dn);
    return {bi, bip};
}

// Maclaurin series of the two standard solutions f, g (y'' = x y)
void maclaurin_fg(double x, double& f, double& fp, double& g, double& gp) {
    // f = sum x^{3k} prod, recurrences: f_{k} = f_{k-1} x^3 / ((3k)(3k-1)),
    // g_k = g_{k-1} x^3 / ((3k+1)(3k))
    if (x == 0.0) {
        f = 1.0;
        fp = 0.0;
        g = 0.0;
        gp = 1.0;
        return;
    }
    double x3 = x * x * x;
    double tf = 1.0, tg = x;
    double tfp = 0.0, tgp = 1.0;  // derivative terms: d/dx x^{3k} = 3k x^{3k-1}
    f = tf;
    g = tg;
    fp = 0.0;
    gp = 1.0;
    for (int k = 1; k < 60; ++k) {
        tf *= x3 / ((3.0 * k) * (3.0 * k - 1));
        tg *= x3 / ((3.0 * k + 1) * (3.0 * k));
        f += tf;
        g += tg;
        tfp = tf * (3.0 * k) / x;
        tgp = tg * (3.0 * k + 1) / x;
        fp += tfp;
        gp += tgp;
        if (std::abs(tf) < 1e-18 * std::abs(f) && std::abs(tg) < 1e-18 * std::abs(g)) break;
    }
}

struct Pair {
    double y, yp;
};

// one Taylor step of y'' = x y from x0 (coefficients by recurrence)
Pair taylor_step(double x0, Pair s, double h, int order) {
    std::vector<double> c(static_cast<size_t>(order + 2), 0.0);
    c[0] = s.y;
    c[1] = s.yp;
    for (int k = 0; k + 2 <= order + 1; ++k) {
        double prev = (k >= 1) ? c[static_cast<size_t>(k - 1)] : 0.0;
        c[static_cast<size_t>(k + 2)] = (x0 * c[static_cast<size_t>(k)] + prev) /
                                        ((k + 1.0) * (k + 2.0));
    }
    double y = 0, yp = 0;
    for (int k = order + 1; k >= 1; --k) {
        y = (y + c[static_cast<size_t>(k)]) * h;
        yp = (yp + k * c[static_cast<size_t>(k)]) * h;
    }
    y += c[0];
    yp = yp / h;
    return {y, yp};
}

Pair march(double from, Pair s, double to, double step, int order) {
    double x = from;
    double dir = (to >= from) ? 1.0 : -1.0;
    while (std::abs(to - x) > 1e-14) {
        double h = dir * std::min(step, std::abs(to - x));
        s = taylor_step(x, s, h, order);
        x += h;
    }
    return s;
}

}  // namespace

AiryPair AiryEval::ai(double x) const {
    if (std::abs(x) > x_max) throw std::invalid_argument("airy: |x| out of range");
    if (x >= asymptotic_crossover) return ai_asym_pos(x);
    if (x <= -asymptotic_crossover) return ai_asym_neg(x);
    if (std::abs(x) <= series_crossover) {
        double f, fp, g, gp;
        maclaurin_fg(x, f, fp, g, gp);
        return {kAi0 * f + kAip0 * g, kAi0 * fp + kAip0 * gp};
    }
    if (x > 0) {
        // march left from the asymptotic anchor (stable direction for Ai)
        AiryPair a = ai_asym_pos(asymptotic_crossover);
        Pair s = march(asymptotic_crossover, {a.ai, a.aip}, x, march_step, taylor_order);
        return {s.y, s.yp};
    }
    // negative middle zone: march left from the series anchor
    double f, fp, g, gp;
    maclaurin_fg(-series_crossover, f, fp, g, gp);
    Pair s{kAi0 * f + kAip0 * g, kAi0 * fp + kAip0 * gp};
    s = march(-series_crossover, s, x, march_step, taylor_order);
    return {s.y, s.yp};
}

BiPair AiryEval::bi(double x) const {
    if (x > 100.0 || x < -x_max) throw std::invalid_argument("airy_bi: x out of range");
    if (x >= asymptotic_crossover + 6.0) return bi_asym_pos(x);
    if (x <= -asymptotic_crossover) return bi_asym_neg(x);
    // Bi is the dominant solution to the right: marching rightward from the
    // origin is stable; leftward from 0 is harmless (oscillatory side)
    Pair s{kBi0, kBip0};
    s = march(0.0, s, x, march_step, taylor_order);
    return {s.y, s.yp};
}

AiryPair airy_fn(double x) {
    static const AiryEval eval;
    return eval.ai(x);
}

BiPair airy_bi_fn(double x) {
    static const AiryEval eval;
    return eval.bi(x);
}

}  // namespace pngdet
