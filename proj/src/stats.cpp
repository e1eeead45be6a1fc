#include "pngdet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pngdet {

EmpiricalStats::EmpiricalStats(std::vector<double> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) throw std::invalid_argument("EmpiricalStats: no samples");
    std::sort(samples_.begin(), samples_.end());
}

double EmpiricalStats::ecdf(double x) const {
    auto it = std::upper_bound(samples_.begin(), samples_.end(), x);
    return static_cast<double>(it - samples_.begin()) / static_cast<double>(samples_.size());
}

double EmpiricalStats::mean() const {
    double s = 0;
    for (double v : samples_) s += v;
    return s / static_cast<double>(samples_.size());
}

double EmpiricalStats::stderr_of_mean() const {
    double m = mean(), s = 0;
    for (double v : samples_) s += (v - m) * (v - m);
    size_t n = samples_.size();
    return std::sqrt(s / (static_cast<double>(n - 1) * static_cast<double>(n)));
}

double EmpiricalStats::ks_distance(const std::function<double(double)>& ref) const {
    // sup over the staircase: compare F at each sample against the CDF value
    // just before and just after the jump(s) there
    double n = static_cast<double>(samples_.size());
    double worst = 0;
    size_t i = 0;
    while (i < samples_.size()) {
        size_t j = i;
        while (j < samples_.size() && samples_[j] == samples_[i]) ++j;
        double f = ref(samples_[i]);
        worst = std::max(worst, std::abs(static_cast<double>(i) / n - f));
        worst = std::max(worst, std::abs(static_cast<double>(j) / n - f));
        i = j;
    }
    return worst;
}

double EmpiricalStats::tail_fraction(double t) const {
    size_t c = 0;
    for (double v : samples_)
        if (std::abs(v) > t) ++c;
    return static_cast<double>(c) / static_cast<double>(samples_.size());
}

EmpiricalStats::Histogram EmpiricalStats::histogram(double lo, double hi, int bins) const {
    if (bins < 1 || !(hi > lo)) throw std::invalid_argument("histogram: bad bins");
    Histogram h;
    h.lo = lo;
    h.width = (hi - lo) / bins;
    h.counts.assign(static_cast<size_t>(bins), 0);
    for (double v : samples_) {
        if (v < lo || v >= hi) continue;
        int b = static_cast<int>((v - lo) / h.width);
        h.counts[static_cast<size_t>(std::min(b, bins - 1))]++;
    }
    return h;
}

double binomial_ci_halfwidth(double p_hat, std::size_t n, double z) {
    double v = std::max(p_hat * (1.0 - p_hat), 1e-12);
    return z * std::sqrt(v / static_cast<double>(n));
}

}  // namespace pngdet
