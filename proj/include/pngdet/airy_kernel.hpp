#pragma once

#include <vector>

namespace pngdet {

// Controls for the lambda-integral form of the extended Airy kernel.
struct ExtendedAiryKernelSpec {
    double lambda_cut = 40.0;   // base truncation; stretched by 1/|dtau| on the oscillatory branch
    int panel_nodes = 24;
    double panel_width = 0.5;
    double tail_tol = 1e-10;

    void validate() const;
};

// A(tau,xi;tau',xi'): lambda integral over (0,inf) for tau >= tau', over
// (-inf,0) for tau < tau'.  Throws if the truncated tail cannot be certified
// below spec.tail_tol.
double extended_airy_kernel(double tau, double xi, double taup, double xip,
                            const ExtendedAiryKernelSpec& spec = {});

// modified kernel: the (0,inf) integral regardless of the sign of tau-tau'
double extended_airy_kernel_tilde(double tau, double xi, double taup, double xip,
                                  const ExtendedAiryKernelSpec& spec = {});

// double-integral form over horizontal lines Im z = eta, Im w = eta_p;
// eta+eta'+tau-tau' < 0 selects A when tau' > tau, > 0 selects the tilde kernel
double extended_airy_double_integral(double tau, double xi, double taup, double xip, double eta,
                                     double eta_p, int panel_nodes = 24);

// Gaussian residue term: zero for tau >= tau', else
// (4 pi dt)^{-1/2} exp(-(xi-xi')^2/(4 dt) - dt (xi+xi')/2 + dt^3/12)
double phi_gaussian(double tau, double taup, double xi, double xip);

// classic (equal-time) Airy kernel with the confluent diagonal
double airy_kernel_classic(double x, double y);

}  // namespace pngdet
