#pragma once

#include <complex>
#include <vector>

#include "pngdet/determinantal.hpp"

namespace pngdet {

// Nonintersecting simple walks on Z_N (steps +1 with prob p, 0 with prob q),
// periodic in time with half-width M; an odd number of particles.
struct CircleWalkParams {
    int n_sites = 5;
    int n_particles = 3;  // odd, < n_sites
    double p_step = 0.5;
    int time_half_width = 2;  // M

    double q_step() const { return 1.0 - p_step; }
    int nu() const { return (n_particles - 1) / 2; }
    void validate() const;  // flags the degenerate p = q with even N case
};

// densely packed reference configuration alpha = (0, 1, .., nu, N-nu, .., N-1)
std::vector<int> packed_configuration(const CircleWalkParams& params);

// kernel on the infinite cylinder (M -> infinity, top Fourier sector)
Complex cylinder_kernel(const CircleWalkParams& params, int r, int x, int s, int y);

// N -> infinity limit at density rho (discrete-sine type kernel)
Complex circle_limit_kernel(double rho, double p_step, int r, int x, int s, int y,
                            int panel_nodes = 32);

// per-sector objects at finite M: k is an ordered configuration in Z_N^n
Complex sector_partition(const CircleWalkParams& params, const std::vector<int>& k);
Complex sector_kernel(const CircleWalkParams& params, const std::vector<int>& k, int r, int x,
                      int s, int y);

// all ordered n-point configurations on Z_N
std::vector<std::vector<int>> ordered_configurations(int n_sites, int n_particles);

// finite-M space-time correlation: mixture over Fourier sectors of the
// sector block determinants
Complex finite_cylinder_correlation(const CircleWalkParams& params, const std::vector<Site>& sites);

// brute-force correlation by enumerating all periodic nonintersecting path
// families (the per-step weights are the Karlin-McGregor determinants)
Complex brute_force_cylinder_correlation(const CircleWalkParams& params,
                                         const std::vector<Site>& sites, double guard = 1e7);

struct TopLabelReport {
    std::vector<int> half_widths;     // the M values probed
    std::vector<double> alpha_ratio;  // Z(alpha)/sum Z at each M
    double off_ratio_last = 0;        // |Z(k)/sum Z| of a non-top sector at the largest M
    bool selects_top = false;         // ratios increase towards 1, others decay
};

// checks that the packed sector dominates as M grows
TopLabelReport top_label_selection_check(const CircleWalkParams& params,
                                         const std::vector<int>& half_widths = {2, 4, 8});

}  // namespace pngdet
