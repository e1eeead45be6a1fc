#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace pngdet {

// Sorted-sample container with the empirical CDF, Kolmogorov-Smirnov
// distances and simple histogram support.
class EmpiricalStats {
  public:
    explicit EmpiricalStats(std::vector<double> samples);

    size_t size() const { return samples_.size(); }
    const std::vector<double>& sorted() const { return samples_; }

    double ecdf(double x) const;  // P_hat[X <= x]
    double mean() const;
    double stderr_of_mean() const;

    // two-sided sup distance against a continuous reference CDF
    double ks_distance(const std::function<double(double)>& ref) const;

    // fraction of samples with |X| > t
    double tail_fraction(double t) const;

    struct Histogram {
        double lo = 0, width = 0;
        std::vector<std::size_t> counts;
    };
    Histogram histogram(double lo, double hi, int bins) const;

  private:
    std::vector<double> samples_;  // sorted
};

// half-width of a z-sigma binomial confidence interval for a proportion
double binomial_ci_halfwidth(double p_hat, std::size_t n, double z = 3.0);

}  // namespace pngdet
