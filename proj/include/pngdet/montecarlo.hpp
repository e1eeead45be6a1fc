#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pngdet/stats.hpp"

namespace pngdet {

enum class Observable { PointG, PointToLineG, TwoTimeHeights, TransversalArgmax };

std::string observable_name(Observable o);
Observable observable_from_name(const std::string& name);

struct ExperimentConfig {
    int N = 16;
    double q = 0.25;
    int sample_count = 1000;
    std::uint64_t seed = 1;
    Observable observable = Observable::PointG;
    std::vector<double> xi_grid;  // evaluation grid for CDF comparisons
    double tau = 1.0, xi1 = 0.0, xi2 = 0.0;  // two-time settings
    int workers = 1;

    void validate() const;
};

// raw per-replica draws of the rescaled observable; order = replica index
std::vector<double> run_ensemble_raw(const ExperimentConfig& cfg);
EmpiricalStats run_ensemble(const ExperimentConfig& cfg);

// one replica worth of anti-diagonal data (exposed for the exact two-time
// comparisons): G(N+K, N-K) for K = -N+1..N-1
std::vector<std::int64_t> sample_antidiagonal(int N, double q, std::uint64_t replica_seed);
std::int64_t sample_point_g(int N, double q, std::uint64_t replica_seed);

struct CdfReport {
    ExperimentConfig cfg;
    std::vector<double> grid;        // xi values
    std::vector<double> empirical;   // ECDF of the rescaled observable
    std::vector<double> reference;   // limit law at the grid
    std::vector<double> ci3;         // 3-sigma binomial half-widths
    double ks = 0;                   // against the primary reference
    double ks_alt = 0;               // against the other TW law (diagnostic)
};

// rescaled G(N,N) against F2
CdfReport g_point_vs_tw2(const ExperimentConfig& cfg);
// rescaled G_pl against F1 (ks_alt carries the F2 distance on the same data)
CdfReport gpl_vs_tw1(const ExperimentConfig& cfg);

struct TwoTimeReport {
    ExperimentConfig cfg;
    std::int64_t level1 = 0, level2 = 0;  // integer thresholds actually used
    std::int64_t u = 0;                   // slice offset actually used
    double tau_eff = 0, xi1_eff = 0, xi2_eff = 0;
    double empirical = 0, sigma = 0;
    double reference = 0;  // airy_fdd at the effective arguments
    double gap_sigmas = 0;
};

TwoTimeReport two_time_vs_airy(const ExperimentConfig& cfg, double tau, double xi1, double xi2);

struct TransversalReport {
    ExperimentConfig cfg;
    std::vector<double> thresholds;      // T values
    std::vector<double> tail_fractions;  // P[|K_N| > T]
    std::vector<double> ci3;
    double mean = 0, stderr_mean = 0;
    double duplicate_fraction = 0;  // replicas with a tied maximum
    EmpiricalStats::Histogram hist;
};

TransversalReport transversal_histogram(const ExperimentConfig& cfg);

}  // namespace pngdet
