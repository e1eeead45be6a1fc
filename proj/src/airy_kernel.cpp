#include "pngdet/airy_kernel.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "pngdet/airy.hpp"
#include "pngdet/quadrature.hpp"

namespace pngdet {

void ExtendedAiryKernelSpec::validate() const {
    if (lambda_cut < 30.0) throw std::invalid_argument("ExtendedAiryKernelSpec: lambda_cut < 30");
    if (panel_nodes < 8 || panel_width <= 0) throw std::invalid_argument("ExtendedAiryKernelSpec: bad panels");
}

double extended_airy_kernel_tilde(double tau, double xi, double taup, double xip,
                                  const ExtendedAiryKernelSpec& spec) {
    spec.validate();
    double dt = tau - taup;
    // integrand e^{-lambda dt} Ai(xi+lambda) Ai(xip+lambda) on (0,inf);
    // superexponential Airy decay beats any e^{|dt| lambda}
    double cut = spec.lambda_cut + 3.0 * dt * dt;  // keep the e^{-dt l} hump inside
    double sum = 0;
    std::vector<double> xs, ws;
    for (double a = 0; a < cut; a += spec.panel_width) {
        double b = std::min(a + spec.panel_width, cut);
        gl_nodes(spec.panel_nodes, a, b, xs, ws);
        for (int i = 0; i < spec.panel_nodes; ++i)
            sum += ws[static_cast<size_t>(i)] * std::exp(-xs[static_cast<size_t>(i)] * dt) *
                   airy_fn(xi + xs[static_cast<size_t>(i)]).ai *
                   airy_fn(xip + xs[static_cast<size_t>(i)]).ai;
    }
    // decay certificate at the cut
    double tail = std::exp(-cut * dt) * std::abs(airy_fn(xi + cut).ai * airy_fn(xip + cut).ai);
    if (!(tail < spec.tail_tol)) throw std::runtime_error("extended_airy_kernel_tilde: tail not certified");
    return sum;
}

double extended_airy_kernel(double tau, double xi, double taup, double xip,
                            const ExtendedAiryKernelSpec& spec) {
    spec.validate();
    double dt = tau - taup;
    if (dt >= 0) return extended_airy_kernel_tilde(tau, xi, taup, xip, spec);
    // tau < tau': integral over (-infty, 0); substitute mu = -lambda so the
    // damping is e^{-mu (tau'-tau)} against oscillatory Airy factors
    double delta = -dt;
    double cut = std::max(spec.lambda_cut, spec.lambda_cut / delta);
    double sum = 0;
    std::vector<double> xs, ws;
    for (double a = 0; a < cut; a += spec.panel_width) {
        double b = std::min(a + spec.panel_width, cut);
        gl_nodes(spec.panel_nodes, a, b, xs, ws);
        for (int i = 0; i < spec.panel_nodes; ++i)
            sum += ws[static_cast<size_t>(i)] * std::exp(-xs[static_cast<size_t>(i)] * delta) *
                   airy_fn(xi - xs[static_cast<size_t>(i)]).ai *
                   airy_fn(xip - xs[static_cast<size_t>(i)]).ai;
    }
    // oscillatory tail: |Ai| envelopes ~ (mu)^{-1/4}/sqrt(pi) each
    double tail = std::exp(-cut * delta) / (std::numbers::pi * std::sqrt(cut)) / delta;
    if (!(tail < spec.tail_tol)) throw std::runtime_error("extended_airy_kernel: tail not certified (Lambda too small)");
    // the tau < tau' branch carries a minus sign, so that A = Atilde - phi
    return -sum;
}

double phi_gaussian(double tau, double taup, double xi, double xip) {
    if (tau >= taup) return 0.0;
    double dt = taup - tau;
    double e = -(xi - xip) * (xi - xip) / (4.0 * dt) - dt * (xi + xip) / 2.0 + dt * dt * dt / 12.0;
    return std::exp(e) / std::sqrt(4.0 * std::numbers::pi * dt);
}

double extended_airy_double_integral(double tau, double xi, double taup, double xip, double eta,
                                     double eta_p, int panel_nodes) {
    if (!(eta > 0) || !(eta_p > 0))
        throw std::invalid_argument("extended_airy_double_integral: need eta, eta' > 0");
    using C = std::complex<double>;
    const C I(0, 1);
    double denom_re = taup - tau - (eta + eta_p);
    double denom_re_alt = taup - tau;  // sign of (taup-tau+i(z+w)) real part
    (void)denom_re_alt;
    if (std::abs(denom_re) < 1e-12)
        throw std::invalid_argument("extended_airy_double_integral: contour touches the singularity");

    // 1-d node tables along Im z = eta: z(t) = t + i eta, weight w(t)
    auto build_axis = [&](double etac, double xic) {
        //整 e^{i xi z + i z^3/3} factor evaluated on the nodes
        double t_cut = std::sqrt(34.0 / etac) + std::abs(xic) / 10.0 + 4.0;
        std::vector<double> xs, ws;
        std::vector<C> nodes;
        std::vector<C> vals;
        double pos = -t_cut;
        while (pos < t_cut) {
            double freq = std::max(1.0, pos * pos);  // local phase rate from z^3/3
            double width = std::min(0.5, 2.0 * std::numbers::pi / freq * (panel_nodes / 8.0));
            double end = std::min(pos + width, t_cut);
            gl_nodes(panel_nodes, pos, end, xs, ws);
            for (int i = 0; i < panel_nodes; ++i) {
                C z(xs[static_cast<size_t>(i)], etac);
                C ph = I * xic * z + I * z * z * z / 3.0;
                nodes.push_back(z);
                vals.push_back(ws[static_cast<size_t>(i)] * std::exp(ph));
            }
            pos = end;
        }
        return std::pair(nodes, vals);
    };

    auto [zn, zv] = build_axis(eta, xi);
    auto [wn, wv] = build_axis(eta_p, xip);
    C acc(0, 0);
    for (size_t a = 0; a < zn.size(); ++a) {
        C za = zn[a];
        C fa = zv[a];
        for (size_t b = 0; b < wn.size(); ++b) acc += fa * wv[b] / (taup - tau + I * (za + wn[b]));
    }
    acc *= -1.0 / (4.0 * std::numbers::pi * std::numbers::pi);
    return acc.real();
}

double airy_kernel_classic(double x, double y) {
    AiryPair a = airy_fn(x), b = airy_fn(y);
    if (std::abs(x - y) < 1e-7) {
        double m = 0.5 * (x + y);
        AiryPair c = airy_fn(m);
        return c.aip * c.aip - m * c.ai * c.ai;
    }
    return (a.ai * b.aip - a.aip * b.ai) / (x - y);
}

}  // namespace pngdet
