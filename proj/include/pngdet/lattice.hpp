#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pngdet/weight_field.hpp"

namespace pngdet {

// Heights h(x,t), 0 <= t <= T, stored on the window |x| <= T; everything
// outside the light cone is an implicit zero.
class HeightEvolution {
  public:
    HeightEvolution() : T_(0) {}
    explicit HeightEvolution(int T)
        : T_(T), h_(static_cast<size_t>(T + 1) * (2 * T + 1), 0) {}

    int final_time() const { return T_; }

    std::int64_t at(std::int64_t x, int t) const {
        if (t < 0 || t > T_ || x < -t + 1 || x > t) return 0;
        return h_[idx(x, t)];
    }
    void set(std::int64_t x, int t, std::int64_t v) { h_[idx(x, t)] = v; }

    void write_csv(std::ostream& os) const;  // rows (t, x, h)

  private:
    size_t idx(std::int64_t x, int t) const {
        return static_cast<size_t>(t) * (2 * T_ + 1) + static_cast<size_t>(x + T_);
    }
    int T_;
    std::vector<std::int64_t> h_;
};

// h(x,t+1) = max(h(x-1,t), h(x,t), h(x+1,t)) + omega(x,t+1), h(.,0) = 0
HeightEvolution evolve_png(const WeightField& field, int T);

struct LastPassageTable {
    int rows = 0, cols = 0;
    std::vector<std::int64_t> g;  // g[(i-1)*cols + (j-1)], 1-based access below

    std::int64_t at(int i, int j) const {
        if (i < 1 || j < 1) return 0;
        if (i > rows || j > cols) throw std::out_of_range("LastPassageTable::at");
        return g[static_cast<size_t>(i - 1) * cols + (j - 1)];
    }
};

// G(i,j) = max(G(i-1,j), G(i,j-1)) + w(i,j), zero on the boundary
LastPassageTable lpp_table(const WeightField& field);

// max over the anti-diagonal i+j = 2N of the point-to-point times
std::int64_t point_to_line(const LastPassageTable& table, int N);

// Jumps at time t, defined on {x : t-x odd}: eta+ = h(x)-h(x-1),
// eta- = h(x)-h(x+1).  Stored densely over x in [-t, t] with stride 2.
struct JumpProfile {
    int t = 0;
    std::int64_t x_min = 0;  // smallest x with t-x odd in the window
    std::vector<std::int64_t> up;    // eta+ at x_min, x_min+2, ...
    std::vector<std::int64_t> down;  // eta- likewise

    std::int64_t eta_plus(std::int64_t x) const;
    std::int64_t eta_minus(std::int64_t x) const;
};

JumpProfile jumps(const HeightEvolution& evo, int t);

// Collision operator: (Tw)(i,j) = min(eta+(x+1,t-1), eta-(x-1,t-1)) in
// rotated coordinates.  Shrinks the support by one row and one column.
WeightField t_operator(const WeightField& field);

// Nonintersecting curves h_k(., 2N-1), layer k driven by T^k w started from
// height -k.  The ledger holds the total jump-label exponents at the final
// time, one integer per a_i / b_j, used by the conservation check.
struct MultiLayerConfig {
    int N = 0;
    // curves[k][x + (2N-1)] = h_k(x, 2N-1), x in [-(2N-1), 2N-1]
    std::vector<std::vector<std::int64_t>> curves;
    std::vector<std::int64_t> exp_a;  // exp_a[i-1] = exponent of a_i, i = 1..2N
    std::vector<std::int64_t> exp_b;

    std::int64_t height(int k, std::int64_t x) const;  // flat layers implicit
    bool nonintersecting() const;
};

MultiLayerConfig multilayer(const WeightField& field, int N);

// Inverse of the multilayer map: recovers w(i,j) for i+j <= 2N exactly.
// Throws std::runtime_error if the inverse recursion produces a negative
// jump or weight (corrupted configuration).
WeightField reconstruct_weights(const MultiLayerConfig& cfg);

// Rescaled top-curve process t -> H_N(t) on the grid t_j = j / (c N^{2/3}),
// with values read off G(N+u, N-u) = h(2u, 2N-1); linear interpolation
// between grid points.
struct RescaledPath {
    int N = 0;
    double q = 0, alpha = 0;
    double a_star = 0, d = 0, d_prime = 0, c = 0;
    std::vector<double> times;   // t_u for u = -N+1..N-1
    std::vector<double> values;  // H_N(t_u)
    bool linear_interpolation = true;

    double eval(double t) const;
};

struct PngConstants {
    double alpha, a_star, d, d_prime, c;
};
PngConstants png_constants(double q);

RescaledPath rescale_height(const HeightEvolution& evo, double q, int N);

// Leftmost grid time attaining the supremum (the infimum convention)
double transversal_argmax(const RescaledPath& path);

}  // namespace pngdet
