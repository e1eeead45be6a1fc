#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pngdet/lattice.hpp"
#include "pngdet/rng.hpp"
#include "pngdet/rsk.hpp"
#include "pngdet/weight_field.hpp"

using namespace pngdet;

namespace {

WeightField make_field(const std::vector<std::vector<std::int64_t>>& rows) {
    WeightField f(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) f.at(static_cast<int>(i + 1), static_cast<int>(j + 1)) = rows[i][j];
    return f;
}

// independent oracle: maximum over all up/right paths by recursion
std::int64_t lpp_brute(const WeightField& f, int i, int j) {
    if (i < 1 || j < 1) return 0;
    if (i == 1 && j == 1) return f(1, 1);
    std::int64_t best = 0;
    if (i > 1) best = std::max(best, lpp_brute(f, i - 1, j));
    if (j > 1) best = std::max(best, lpp_brute(f, i, j - 1));
    return best + f(i, j);
}

WeightField random_field(Rng& rng, int rows, int cols, int max_entry) {
    WeightField f(rows, cols);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) f.at(i, j) = rng.uniform_int(0, max_entry);
    return f;
}

}  // namespace

TEST_CASE("geometric sampling") {
    SUBCASE("q = 0 gives the all-zero field") {
        auto f = sample_weight_field(GeomParams::homogeneous(0.0, 6, 6), 6, 6, 1);
        for (int i = 1; i <= 6; ++i)
            for (int j = 1; j <= 6; ++j) CHECK(f(i, j) == 0);
    }
    SUBCASE("sample mean within 3 sigma of q/(1-q)") {
        const double q = 0.25;
        const int n = 100000;
        auto f = sample_weight_field(GeomParams::homogeneous(q, 1000, 100), 1000, 100, 99);
        double mean = static_cast<double>(f.total()) / n;
        double var = q / ((1 - q) * (1 - q));
        double sigma = std::sqrt(var / n);
        CHECK(std::abs(mean - q / (1 - q)) < 3 * sigma);
    }
    SUBCASE("deterministic in the seed") {
        auto p = GeomParams::homogeneous(0.25, 4, 4);
        CHECK(sample_weight_field(p, 4, 4, 7) == sample_weight_field(p, 4, 4, 7));
        CHECK_FALSE(sample_weight_field(p, 4, 4, 7) == sample_weight_field(p, 4, 4, 8));
    }
    SUBCASE("rejects a_i b_j >= 1") {
        GeomParams p;
        p.a = {0.999, 1.2};
        p.b = {0.5};
        CHECK_THROWS(sample_weight_field(p, 2, 1, 0));
    }
}

TEST_CASE("png evolution") {
    SUBCASE("zero disorder stays flat") {
        WeightField f(3, 3);
        auto evo = evolve_png(f, 5);
        for (int t = 0; t <= 5; ++t)
            for (int x = -6; x <= 6; ++x) CHECK(evo.at(x, t) == 0);
    }
    SUBCASE("single nucleation") {
        WeightField f(1, 1);
        f.at(1, 1) = 2;  // omega(0,1) = 2
        auto evo = evolve_png(f, 1);
        CHECK(evo.at(0, 1) == 2);
        CHECK(evo.at(-1, 1) == 0);
        CHECK(evo.at(1, 1) == 0);
    }
    SUBCASE("h(0,3) equals G(2,2) on the 2x2 example") {
        auto f = make_field({{1, 2}, {3, 4}});
        auto evo = evolve_png(f, 3);
        CHECK(evo.at(0, 3) == 8);
        CHECK(lpp_brute(f, 2, 2) == 8);
    }
    SUBCASE("heights are monotone in t") {
        Rng rng(11);
        auto f = random_field(rng, 4, 4, 3);
        auto evo = evolve_png(f, 7);
        for (int t = 0; t < 7; ++t)
            for (int x = -7; x <= 7; ++x) CHECK(evo.at(x, t) <= evo.at(x, t + 1));
    }
}

TEST_CASE("last passage tables") {
    SUBCASE("single cell") { CHECK(lpp_table(make_field({{3}})).at(1, 1) == 3); }
    SUBCASE("2x2 example") { CHECK(lpp_table(make_field({{1, 2}, {3, 4}})).at(2, 2) == 8); }
    SUBCASE("random 5x5 equals path enumeration") {
        Rng rng(3);
        for (int rep = 0; rep < 5; ++rep) {
            auto f = random_field(rng, 5, 5, 4);
            auto tab = lpp_table(f);
            for (int i = 1; i <= 5; ++i)
                for (int j = 1; j <= 5; ++j) CHECK(tab.at(i, j) == lpp_brute(f, i, j));
        }
    }
    SUBCASE("table agrees with heights (Prop 3.1 special case)") {
        Rng rng(5);
        auto f = random_field(rng, 4, 4, 4);
        auto tab = lpp_table(f);
        auto evo = evolve_png(f, 7);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) CHECK(tab.at(i, j) == evo.at(i - j, i + j - 1));
    }
}

TEST_CASE("point to line") {
    SUBCASE("N=1 is the corner value") {
        auto tab = lpp_table(make_field({{5}}));
        CHECK(point_to_line(tab, 1) == 5);
    }
    SUBCASE("padded 2x2 example") {
        auto f = make_field({{1, 2}, {3, 4}}).padded(3, 3);
        auto tab = lpp_table(f);
        CHECK(point_to_line(tab, 2) == std::max({tab.at(3, 1), tab.at(2, 2), tab.at(1, 3)}));
        CHECK(point_to_line(tab, 2) == 8);
    }
    SUBCASE("dominates the point-to-point time") {
        Rng rng(17);
        for (int rep = 0; rep < 10; ++rep) {
            auto f = random_field(rng, 5, 5, 4);
            auto tab = lpp_table(f);
            CHECK(point_to_line(tab, 3) >= tab.at(3, 3));
        }
    }
    SUBCASE("table too small") {
        auto tab = lpp_table(make_field({{1}}));
        CHECK_THROWS(point_to_line(tab, 2));
    }
}

TEST_CASE("jumps") {
    SUBCASE("flat profile has no jumps") {
        WeightField f(2, 2);
        auto evo = evolve_png(f, 3);
        auto jp = jumps(evo, 3);
        for (std::int64_t x = -4; x <= 4; ++x) {
            CHECK(jp.eta_plus(x) == 0);
            CHECK(jp.eta_minus(x) == 0);
        }
    }
    SUBCASE("single nucleation is a step of size m") {
        WeightField f(1, 1);
        f.at(1, 1) = 4;
        auto jp = jumps(evolve_png(f, 1), 1);
        CHECK(jp.eta_plus(0) == 4);
        CHECK(jp.eta_minus(0) == 4);
    }
    SUBCASE("nonnegativity and the jump evolution equations") {
        Rng rng(23);
        for (int rep = 0; rep < 100; ++rep) {
            auto f = random_field(rng, 3, 3, 3);
            int T = 5;
            auto evo = evolve_png(f, T);
            for (int t = 0; t <= T; ++t) {
                auto jp = jumps(evo, t);
                for (auto v : jp.up) CHECK(v >= 0);
                for (auto v : jp.down) CHECK(v >= 0);
            }
            // eta+-(x+1,t+1) = max(+-(eta+(x+2,t)-eta-(x,t)),0) + omega(x+1,t+1)
            for (int t = 1; t + 1 <= T; ++t) {
                auto cur = jumps(evo, t), nxt = jumps(evo, t + 1);
                for (std::int64_t x = -t - 1; x <= t + 1; ++x) {
                    if (((t - x) & 1) == 0) continue;
                    std::int64_t diff = cur.eta_plus(x + 2) - cur.eta_minus(x);
                    CHECK(nxt.eta_plus(x + 1) == std::max<std::int64_t>(diff, 0) + f.omega(x + 1, t + 1));
                    CHECK(nxt.eta_minus(x + 1) == std::max<std::int64_t>(-diff, 0) + f.omega(x + 1, t + 1));
                }
            }
        }
    }
}

TEST_CASE("collision operator") {
    SUBCASE("single nucleation annihilates") {
        WeightField f(3, 3);
        f.at(1, 1) = 5;
        auto tw = t_operator(f);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) CHECK(tw(i, j) == 0);
    }
    SUBCASE("2x2 all ones collides once at (2,2)") {
        auto tw = t_operator(make_field({{1, 1}, {1, 1}}));
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) CHECK(tw(i, j) == (i == 2 && j == 2 ? 1 : 0));
    }
    SUBCASE("support shrinks by one row and one column") {
        Rng rng(31);
        for (int rep = 0; rep < 20; ++rep) {
            WeightField f(5, 5);
            for (int i = 2; i <= 5; ++i)
                for (int j = 2; j <= 5; ++j) f.at(i, j) = rng.uniform_int(0, 3);
            auto tw = t_operator(f);
            for (int i = 1; i <= 5; ++i)
                for (int j = 1; j <= 5; ++j)
                    if (i <= 2 || j <= 2) CHECK(tw(i, j) == 0);
        }
    }
    SUBCASE("nilpotence: T^N w vanishes on i+j <= 2N") {
        Rng rng(37);
        for (int rep = 0; rep < 10; ++rep) {
            int N = 3;
            auto f = random_field(rng, N, N, 3);
            WeightField w = f.padded(2 * N, 2 * N);
            for (int k = 0; k < N; ++k) w = t_operator(w);
            for (int i = 1; i <= 2 * N; ++i)
                for (int j = 1; j <= 2 * N; ++j)
                    if (i + j <= 2 * N) CHECK(w(i, j) == 0);
        }
    }
}

TEST_CASE("multilayer lift") {
    SUBCASE("zero disorder gives flat layers") {
        WeightField f(2, 2);
        auto cfg = multilayer(f, 2);
        for (int k = 0; k < 2; ++k)
            for (std::int64_t x = -3; x <= 3; ++x) CHECK(cfg.height(k, x) == -k);
    }
    SUBCASE("single weight only lifts the top layer") {
        WeightField f(1, 1);
        f.at(1, 1) = 3;
        auto cfg = multilayer(f.padded(2, 2), 2);
        CHECK(cfg.height(0, 0) == 3);
        CHECK(cfg.height(1, 0) == -1);
    }
    SUBCASE("boundary values and nonintersection") {
        Rng rng(41);
        for (int rep = 0; rep < 50; ++rep) {
            int N = 4;
            auto f = random_field(rng, N, N, 4);
            auto cfg = multilayer(f.padded(2 * N, 2 * N), N);
            CHECK(cfg.nonintersecting());
            for (int k = 0; k < N; ++k) {
                CHECK(cfg.height(k, -(2 * N - 1)) == -k);
                CHECK(cfg.height(k, 2 * N - 1) == -k);
            }
        }
    }
    SUBCASE("Prop 3.1: anti-diagonal of G equals the top curve") {
        Rng rng(43);
        for (int rep = 0; rep < 50; ++rep) {
            int N = 4;
            auto f = random_field(rng, 2 * N - 1, 2 * N - 1, 3);
            // zero out i+j > 2N to stay inside the multilayer window
            for (int i = 1; i <= 2 * N - 1; ++i)
                for (int j = 1; j <= 2 * N - 1; ++j)
                    if (i + j > 2 * N) f.at(i, j) = 0;
            auto tab = lpp_table(f);
            auto cfg = multilayer(f, N);
            for (int K = -N + 1; K <= N - 1; ++K)
                CHECK(tab.at(N + K, N - K) == cfg.height(0, 2 * K));
        }
    }
    SUBCASE("Prop 3.2: layer heights match the RSK oracle") {
        Rng rng(47);
        for (int rep = 0; rep < 50; ++rep) {
            int N = 4;
            auto f = random_field(rng, N, N, 3);
            auto cfg = multilayer(f.padded(2 * N, 2 * N), N);
            for (int K = 0; K < N; ++K) {
                auto lam_rows = rsk_shape(f, N - K, N);            // lambda(N-K, N)
                auto lam_cols = rsk_shape(f.transposed(), N - K, N);  // lambda(N, N-K)
                for (int j = 1; j <= N; ++j) {
                    CHECK(lam_rows.part(j) == cfg.height(j - 1, -2 * K) + j - 1);
                    CHECK(lam_cols.part(j) == cfg.height(j - 1, 2 * K) + j - 1);
                }
            }
        }
    }
    SUBCASE("Claim 3.09: exponent ledger equals row/column sums") {
        Rng rng(53);
        for (int rep = 0; rep < 50; ++rep) {
            int N = 3;
            auto f = random_field(rng, 2 * N - 1, 2 * N - 1, 3);
            for (int i = 1; i <= 2 * N - 1; ++i)
                for (int j = 1; j <= 2 * N - 1; ++j)
                    if (i + j > 2 * N) f.at(i, j) = 0;
            auto cfg = multilayer(f, N);
            for (int i = 1; i <= 2 * N; ++i) {
                std::int64_t row = 0;
                for (int j = 1; j <= 2 * N; ++j) row += f(i, j);
                CHECK(cfg.exp_a[static_cast<size_t>(i - 1)] == row);
            }
            for (int j = 1; j <= 2 * N; ++j) {
                std::int64_t col = 0;
                for (int i = 1; i <= 2 * N; ++i) col += f(i, j);
                CHECK(cfg.exp_b[static_cast<size_t>(j - 1)] == col);
            }
        }
    }
}

TEST_CASE("weight reconstruction") {
    SUBCASE("zero field round trip") {
        WeightField f(3, 3);
        auto back = reconstruct_weights(multilayer(f.padded(4, 4), 2));
        CHECK(back.total() == 0);
    }
    SUBCASE("random 3x3 round trips exactly") {
        Rng rng(59);
        for (int rep = 0; rep < 100; ++rep) {
            int N = 3;
            auto f = random_field(rng, N, N, 4);
            auto cfg = multilayer(f.padded(2 * N, 2 * N), N);
            auto back = reconstruct_weights(cfg);
            CHECK(back.padded(2 * N, 2 * N) == f.padded(2 * N, 2 * N));
        }
    }
    SUBCASE("corrupted configuration is rejected") {
        Rng rng(61);
        auto f = random_field(rng, 3, 3, 3);
        auto cfg = multilayer(f.padded(6, 6), 3);
        cfg.curves[1][static_cast<size_t>(0 + 5)] = cfg.curves[0][static_cast<size_t>(0 + 5)] + 2;
        CHECK_THROWS_AS(reconstruct_weights(cfg), std::runtime_error);
    }
}

TEST_CASE("rsk oracle basics") {
    CHECK(rsk_shape(make_field({{1}}), 1, 1) == Partition{{1}});
    CHECK(rsk_shape(make_field({{1, 0}, {0, 1}}), 2, 2) == Partition{{2}});
    CHECK(rsk_shape(make_field({{0, 1}, {1, 0}}), 2, 2) == Partition{{1, 1}});
    SUBCASE("first row equals the last passage time") {
        Rng rng(67);
        for (int rep = 0; rep < 30; ++rep) {
            auto f = random_field(rng, 4, 4, 4);
            CHECK(rsk_shape(f, 4, 4).part(1) == lpp_table(f).at(4, 4));
        }
    }
}

TEST_CASE("monotone coupling") {
    Rng rng(71);
    for (int rep = 0; rep < 20; ++rep) {
        auto f = random_field(rng, 4, 4, 3);
        auto base = lpp_table(f);
        int i0 = static_cast<int>(rng.uniform_int(1, 4)), j0 = static_cast<int>(rng.uniform_int(1, 4));
        auto g = f;
        g.at(i0, j0) += 1;
        auto bumped = lpp_table(g);
        for (int i = i0; i <= 4; ++i)
            for (int j = j0; j <= 4; ++j) CHECK(bumped.at(i, j) >= base.at(i, j));
    }
}

TEST_CASE("rescaled path") {
    SUBCASE("constants at q = 0.25") {
        auto k = png_constants(0.25);
        CHECK(k.a_star == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(k.d == doctest::Approx(std::cbrt(0.75) / 0.5).epsilon(1e-14));
        CHECK(k.d_prime == doctest::Approx(k.d / 3.0).epsilon(1e-14));
        CHECK(k.c == doctest::Approx(3.0 / k.d).epsilon(1e-14));
    }
    SUBCASE("centering: G(N,N) = a*N gives H_N(0) = 0") {
        int N = 2;
        WeightField f(3, 3);
        f.at(1, 1) = 4;  // G(2,2) = 4 = a* N for q = 0.25
        auto evo = evolve_png(f, 2 * N - 1);
        REQUIRE(evo.at(0, 2 * N - 1) == 4);
        auto path = rescale_height(evo, 0.25, N);
        CHECK(path.eval(0.0) == doctest::Approx(0.0).epsilon(1e-14));
    }
    SUBCASE("linear interpolation at the midpoint") {
        RescaledPath p;
        p.times = {0.0, 1.0};
        p.values = {2.0, 4.0};
        CHECK(p.eval(0.5) == doctest::Approx(3.0));
    }
}

TEST_CASE("transversal argmax") {
    RescaledPath p;
    SUBCASE("strict peak") {
        p.times = {-1, 0, 1};
        p.values = {0, 5, 1};
        CHECK(transversal_argmax(p) == doctest::Approx(0.0));
    }
    SUBCASE("tie goes left") {
        p.times = {-1, 0, 1};
        p.values = {3, 1, 3};
        CHECK(transversal_argmax(p) == doctest::Approx(-1.0));
    }
    SUBCASE("constant path picks the left endpoint") {
        p.times = {-2, 0, 2};
        p.values = {1, 1, 1};
        CHECK(transversal_argmax(p) == doctest::Approx(-2.0));
    }
}

TEST_CASE("weight field csv round trip") {
    Rng rng(73);
    auto f = random_field(rng, 3, 5, 9);
    std::stringstream ss;
    f.write_csv(ss, 0.25, 42);
    auto back = WeightField::read_csv(ss);
    CHECK(back == f);
}
