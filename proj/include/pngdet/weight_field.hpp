#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pngdet/rng.hpp"

namespace pngdet {

// Parameters of the geometric disorder: w(i,j) ~ Geom(a_i * b_j).
// Entries live in [0,1); every product a_i*b_j must be < 1.  The homogeneous
// model a_i = b_j = sqrt(q) is the common case.
struct GeomParams {
    std::vector<double> a;  // a[i-1] holds a_i
    std::vector<double> b;

    static GeomParams homogeneous(double q, int len_a, int len_b);

    void validate() const;
    double a_at(int i) const { return i <= static_cast<int>(a.size()) ? a[i - 1] : 0.0; }
    double b_at(int j) const { return j <= static_cast<int>(b.size()) ? b[j - 1] : 0.0; }
};

// Nonnegative integer disorder on a rectangle, 1-based (i,j).  The growth
// disorder omega(x,t) is the same data in rotated coordinates,
// (i,j) = ((t+x+1)/2, (t-x+1)/2); omega vanishes off the odd sublattice.
class WeightField {
  public:
    WeightField() : rows_(0), cols_(0) {}
    WeightField(int rows, int cols) : rows_(rows), cols_(cols), w_(static_cast<size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int64_t operator()(int i, int j) const {
        if (i < 1 || j < 1 || i > rows_ || j > cols_) return 0;
        return w_[static_cast<size_t>(i - 1) * cols_ + (j - 1)];
    }
    std::int64_t& at(int i, int j) {
        if (i < 1 || j < 1 || i > rows_ || j > cols_)
            throw std::out_of_range("WeightField::at index outside stored rectangle");
        return w_[static_cast<size_t>(i - 1) * cols_ + (j - 1)];
    }

    // omega(x,t): zero unless t-x is odd, |x| <= t and (i,j) in the rectangle
    std::int64_t omega(std::int64_t x, std::int64_t t) const {
        if (((t - x) & 1) == 0) return 0;
        std::int64_t i2 = t + x + 1, j2 = t - x + 1;
        if (i2 <= 0 || j2 <= 0 || (i2 & 1) || (j2 & 1)) return 0;
        return (*this)(static_cast<int>(i2 / 2), static_cast<int>(j2 / 2));
    }

    std::int64_t total() const {
        std::int64_t s = 0;
        for (auto v : w_) s += v;
        return s;
    }

    // true if w(i,j) = 0 whenever i+j > bound
    bool supported_in_antidiagonal(int bound) const;

    // zero-padded copy of the given size (values outside are dropped only if zero)
    WeightField padded(int rows, int cols) const;
    WeightField transposed() const;

    bool operator==(const WeightField& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
    }

    // CSV: one "# I J q seed" header line, then rows of comma-separated ints
    void write_csv(std::ostream& os, double q, std::uint64_t seed) const;
    static WeightField read_csv(std::istream& is);

  private:
    int rows_, cols_;
    std::vector<std::int64_t> w_;
};

// i.i.d. geometric field, deterministic in the seed
WeightField sample_weight_field(const GeomParams& params, int rows, int cols, std::uint64_t seed);

}  // namespace pngdet
