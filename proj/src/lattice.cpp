#include "pngdet/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace pngdet {

void HeightEvolution::write_csv(std::ostream& os) const {
    os << "t,x,h\n";
    for (int t = 0; t <= T_; ++t)
        for (std::int64_t x = -t + 1; x <= t; ++x) os << t << "," << x << "," << at(x, t) << "\n";
}

HeightEvolution evolve_png(const WeightField& field, int T) {
    if (T < 0) throw std::invalid_argument("evolve_png: T < 0");
    HeightEvolution evo(T);
    for (int t = 1; t <= T; ++t) {
        for (std::int64_t x = -t + 1; x <= t; ++x) {
            std::int64_t m = std::max({evo.at(x - 1, t - 1), evo.at(x, t - 1), evo.at(x + 1, t - 1)});
            evo.set(x, t, m + field.omega(x, t));
        }
    }
    return evo;
}

LastPassageTable lpp_table(const WeightField& field) {
    LastPassageTable tab;
    tab.rows = field.rows();
    tab.cols = field.cols();
    tab.g.assign(static_cast<size_t>(tab.rows) * tab.cols, 0);
    for (int i = 1; i <= tab.rows; ++i)
        for (int j = 1; j <= tab.cols; ++j)
            tab.g[static_cast<size_t>(i - 1) * tab.cols + (j - 1)] =
                std::max(tab.at(i - 1, j), tab.at(i, j - 1)) + field(i, j);
    return tab;
}

std::int64_t point_to_line(const LastPassageTable& table, int N) {
    if (table.rows < 2 * N - 1 || table.cols < 2 * N - 1)
        throw std::invalid_argument("point_to_line: table does not cover the anti-diagonal i+j = 2N");
    std::int64_t best = table.at(N, N);
    for (int K = -N + 1; K <= N - 1; ++K) best = std::max(best, table.at(N + K, N - K));
    return best;
}

std::int64_t JumpProfile::eta_plus(std::int64_t x) const {
    std::int64_t k = x - x_min;
    if (k < 0 || (k & 1) || k / 2 >= static_cast<std::int64_t>(up.size())) return 0;
    return up[static_cast<size_t>(k / 2)];
}

std::int64_t JumpProfile::eta_minus(std::int64_t x) const {
    std::int64_t k = x - x_min;
    if (k < 0 || (k & 1) || k / 2 >= static_cast<std::int64_t>(down.size())) return 0;
    return down[static_cast<size_t>(k / 2)];
}

JumpProfile jumps(const HeightEvolution& evo, int t) {
    if (t < 0 || t > evo.final_time()) throw std::invalid_argument("jumps: t outside evolution");
    JumpProfile p;
    p.t = t;
    p.x_min = -t - 1;  // t - (-t-1) = 2t+1 is odd for every t
    for (std::int64_t x = p.x_min; x <= t + 1; x += 2) {
        p.up.push_back(evo.at(x, t) - evo.at(x - 1, t));
        p.down.push_back(evo.at(x, t) - evo.at(x + 1, t));
    }
    return p;
}

WeightField t_operator(const WeightField& field) {
    int rows = field.rows(), cols = field.cols();
    int T = rows + cols - 1;
    HeightEvolution evo = evolve_png(field, T);
    std::vector<JumpProfile> js;
    js.reserve(T);
    for (int t = 0; t < T; ++t) js.push_back(jumps(evo, t));
    WeightField out(rows, cols);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) {
            // (x,t) = (i-j, i+j-1); Tw(i,j) = min(eta+(x+1,t-1), eta-(x-1,t-1))
            std::int64_t x = i - j;
            int t = i + j - 1;
            std::int64_t v = std::min(js[t - 1].eta_plus(x + 1), js[t - 1].eta_minus(x - 1));
            if (v != 0) out.at(i, j) = v;
        }
    return out;
}

std::int64_t MultiLayerConfig::height(int k, std::int64_t x) const {
    int M = 2 * N - 1;
    if (x < -M || x > M || k >= static_cast<int>(curves.size())) return -k;
    return curves[static_cast<size_t>(k)][static_cast<size_t>(x + M)];
}

bool MultiLayerConfig::nonintersecting() const {
    int M = 2 * N - 1;
    int t = M;  // odd
    for (int k = 0; k + 1 <= N; ++k) {
        for (std::int64_t x = -M; x <= M; ++x) {
            bool t_minus_x_odd = ((t - x) & 1) != 0;
            if (t_minus_x_odd) {
                if (!(height(k + 1, x) < height(k, x - 1))) return false;
            } else {
                if (!(height(k + 1, x - 1) < height(k, x))) return false;
            }
        }
    }
    return true;
}

MultiLayerConfig multilayer(const WeightField& field, int N) {
    if (N < 1) throw std::invalid_argument("multilayer: N < 1");
    if (!field.supported_in_antidiagonal(2 * N))
        throw std::invalid_argument("multilayer: field not supported in i+j <= 2N");
    int M = 2 * N - 1;

    MultiLayerConfig cfg;
    cfg.N = N;
    cfg.exp_a.assign(2 * N, 0);
    cfg.exp_b.assign(2 * N, 0);

    WeightField disorder = field;
    for (int k = 0; k < N; ++k) {
        HeightEvolution evo = evolve_png(disorder, M);
        std::vector<std::int64_t> curve(2 * M + 1);
        for (std::int64_t x = -M; x <= M; ++x)
            curve[static_cast<size_t>(x + M)] = evo.at(x, M) - k;
        cfg.curves.push_back(std::move(curve));

        JumpProfile jp = jumps(evo, M);  // layer offset -k cancels in differences
        for (std::int64_t m = -N + 1; m <= N - 1; ++m) {
            cfg.exp_a[static_cast<size_t>(m + N - 1)] += jp.eta_plus(2 * m);    // label a_{m+N}
            cfg.exp_b[static_cast<size_t>(N - m - 1)] += jp.eta_minus(2 * m);   // label b_{N-m}
        }
        if (k + 1 < N) disorder = t_operator(disorder);
    }
    assert(cfg.nonintersecting());
    return cfg;
}

WeightField reconstruct_weights(const MultiLayerConfig& cfg) {
    int N = cfg.N;
    int M = 2 * N - 1;
    if (N < 1 || static_cast<int>(cfg.curves.size()) != N)
        throw std::invalid_argument("reconstruct_weights: malformed configuration");
    for (int k = 0; k < N; ++k)
        if (cfg.height(k, -M) != -k || cfg.height(k, M) != -k)
            throw std::runtime_error("reconstruct_weights: boundary heights differ from -k");
    if (!cfg.nonintersecting())
        throw std::runtime_error("reconstruct_weights: curves intersect (corrupted configuration)");

    // Jump fields per layer at the current time; layer N is flat (all zero).
    // Backward recursion, time M down to 1:
    //   omega_k(x,t)   = min(eta+_k(x,t), eta-_k(x,t))
    //   eta+_k(x,t-1)  = eta+_k(x-1,t) - omega_k(x-1,t) + omega_{k+1}(x-1,t)
    //   eta-_k(x,t-1)  = eta-_k(x+1,t) - omega_k(x+1,t) + omega_{k+1}(x+1,t)
    // where omega_k = T^k omega.  Any negative intermediate flags corruption.
    struct Jumps {
        std::vector<std::int64_t> up, down;  // indexed by x + M+1 over x in [-M-1, M+1]
    };
    auto at = [M](const std::vector<std::int64_t>& v, std::int64_t x) -> std::int64_t {
        std::int64_t k = x + M + 1;
        if (k < 0 || k >= static_cast<std::int64_t>(v.size())) return 0;
        return v[static_cast<size_t>(k)];
    };

    std::vector<Jumps> cur(static_cast<size_t>(N + 1));
    for (int k = 0; k <= N; ++k) {
        cur[k].up.assign(static_cast<size_t>(2 * M + 3), 0);
        cur[k].down.assign(static_cast<size_t>(2 * M + 3), 0);
    }
    for (int k = 0; k < N; ++k)
        for (std::int64_t x = -M; x <= M + 1; ++x) {
            if (((M - x) & 1) == 0) continue;  // jumps live on t-x odd
            std::int64_t up = cfg.height(k, x) - cfg.height(k, x - 1);
            std::int64_t dn = cfg.height(k, x) - cfg.height(k, x + 1);
            if (up < 0 || dn < 0) throw std::runtime_error("reconstruct_weights: negative jump at final time");
            cur[k].up[static_cast<size_t>(x + M + 1)] = up;
            cur[k].down[static_cast<size_t>(x + M + 1)] = dn;
        }

    WeightField out(M, M);  // i+j <= 2N allows i, j up to 2N-1
    std::vector<std::vector<std::int64_t>> omega(static_cast<size_t>(N + 1));

    for (int t = M; t >= 1; --t) {
        for (int k = 0; k <= N; ++k) {
            omega[k].assign(static_cast<size_t>(2 * M + 3), 0);
            for (std::int64_t x = -t; x <= t; ++x) {
                if (((t - x) & 1) == 0) continue;
                std::int64_t v = std::min(at(cur[k].up, x), at(cur[k].down, x));
                if (v < 0) throw std::runtime_error("reconstruct_weights: negative weight recovered");
                omega[k][static_cast<size_t>(x + M + 1)] = v;
            }
        }
        // record the layer-0 disorder at this time
        for (std::int64_t x = -t; x <= t; ++x) {
            if (((t - x) & 1) == 0) continue;
            std::int64_t v = at(omega[0], x);
            std::int64_t i2 = t + x + 1, j2 = t - x + 1;
            int i = static_cast<int>(i2 / 2), j = static_cast<int>(j2 / 2);
            if (v != 0) out.at(i, j) = v;
        }
        // step all layers back one unit of time
        std::vector<Jumps> prev(static_cast<size_t>(N + 1));
        for (int k = 0; k <= N; ++k) {
            prev[k].up.assign(static_cast<size_t>(2 * M + 3), 0);
            prev[k].down.assign(static_cast<size_t>(2 * M + 3), 0);
            if (k == N) continue;  // layer N stays flat
            for (std::int64_t x = -(t - 1); x <= t - 1; ++x) {
                if (((t - 1 - x) & 1) == 0) continue;
                std::int64_t up = at(cur[k].up, x - 1) - at(omega[k], x - 1) + at(omega[k + 1], x - 1);
                std::int64_t dn = at(cur[k].down, x + 1) - at(omega[k], x + 1) + at(omega[k + 1], x + 1);
                if (up < 0 || dn < 0)
                    throw std::runtime_error("reconstruct_weights: negative jump in inverse recursion");
                prev[k].up[static_cast<size_t>(x + M + 1)] = up;
                prev[k].down[static_cast<size_t>(x + M + 1)] = dn;
            }
        }
        cur.swap(prev);
    }
    // the flat start has no jumps left over
    for (int k = 0; k <= N; ++k)
        for (auto v : cur[k].up)
            if (v != 0) throw std::runtime_error("reconstruct_weights: nonzero jumps at time zero");
    return out;
}

PngConstants png_constants(double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("png_constants: need 0 < q < 1");
    PngConstants c{};
    c.alpha = std::sqrt(q);
    c.a_star = 2.0 * c.alpha / (1.0 - c.alpha);
    c.d = std::cbrt(c.alpha * (1.0 + c.alpha)) / (1.0 - c.alpha);
    c.d_prime = (1.0 - c.alpha) / (1.0 + c.alpha) * c.d;
    c.c = 1.0 / c.d_prime;
    return c;
}

double RescaledPath::eval(double t) const {
    if (times.empty()) throw std::runtime_error("RescaledPath::eval: empty path");
    if (t <= times.front()) return values.front();
    if (t >= times.back()) return values.back();
    auto it = std::upper_bound(times.begin(), times.end(), t);
    size_t hi = static_cast<size_t>(it - times.begin());
    size_t lo = hi - 1;
    double w = (t - times[lo]) / (times[hi] - times[lo]);
    return (1.0 - w) * values[lo] + w * values[hi];
}

RescaledPath rescale_height(const HeightEvolution& evo, double q, int N) {
    if (evo.final_time() < 2 * N - 1)
        throw std::invalid_argument("rescale_height: evolution does not reach time 2N-1");
    PngConstants k = png_constants(q);
    RescaledPath p;
    p.N = N;
    p.q = q;
    p.alpha = k.alpha;
    p.a_star = k.a_star;
    p.d = k.d;
    p.d_prime = k.d_prime;
    p.c = k.c;
    double n13 = std::cbrt(static_cast<double>(N));
    double n23 = n13 * n13;
    for (int u = -N + 1; u <= N - 1; ++u) {
        p.times.push_back(u / (k.c * n23));
        p.values.push_back((evo.at(2 * u, 2 * N - 1) - k.a_star * N) / (k.d * n13));
    }
    return p;
}

double transversal_argmax(const RescaledPath& path) {
    if (path.values.empty()) throw std::runtime_error("transversal_argmax: empty path");
    size_t best = 0;
    for (size_t i = 1; i < path.values.size(); ++i)
        if (path.values[i] > path.values[best]) best = i;
    return path.times[best];
}

}  // namespace pngdet
