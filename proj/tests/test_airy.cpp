#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pngdet/airy.hpp"
#include "pngdet/airy_fdd.hpp"
#include "pngdet/airy_kernel.hpp"
#include "pngdet/quadrature.hpp"

using namespace pngdet;

TEST_CASE("airy function values") {
    SUBCASE("exact values at the origin") {
        // Ai(0) = 3^{-2/3}/Gamma(2/3), Ai'(0) = -3^{-1/3}/Gamma(1/3)
        double ai0 = std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0);
        double aip0 = -std::pow(3.0, -1.0 / 3.0) / std::tgamma(1.0 / 3.0);
        auto a = airy_fn(0.0);
        CHECK(std::abs(a.ai - ai0) < 1e-13);
        CHECK(std::abs(a.aip - aip0) < 1e-13);
    }
    SUBCASE("superexponential right tail") {
        CHECK(airy_fn(10.0).ai < 1e-9);
        CHECK(airy_fn(10.0).ai > 0.0);
        CHECK(airy_fn(150.0).ai < 1e-300);
    }
    SUBCASE("Wronskian Ai Bi' - Ai' Bi = 1/pi across all method regions") {
        for (double x : {-150.0, -30.0, -9.5, -7.0, -4.0, -1.0, 0.0, 1.3, 4.49, 4.51, 6.0, 8.0,
                         9.5, 20.0, 80.0}) {
            CAPTURE(x);
            auto a = airy_fn(x);
            auto b = airy_bi_fn(x);
            double w = a.ai * b.bip - a.aip * b.bi;
            CHECK(std::abs(w - 1.0 / std::numbers::pi) < 2e-12 * std::max(1.0, std::abs(b.bi)));
        }
    }
    SUBCASE("crossover overlap: series vs marching vs asymptotics") {
        AiryEval lo;   // default crossovers
        AiryEval hi;
        hi.series_crossover = 3.0;       // forces marching where `lo` used the series
        hi.asymptotic_crossover = 11.0;  // forces marching where `lo` used asymptotics
        for (double x : {-10.5, -8.0, -5.0, -3.5, 3.5, 5.0, 8.0, 10.5}) {
            CAPTURE(x);
            auto a = lo.ai(x), b = hi.ai(x);
            CHECK(std::abs(a.ai - b.ai) < 1e-11);
            CHECK(std::abs(a.aip - b.aip) < 1e-11 * std::max(1.0, std::abs(b.aip)));
        }
    }
    SUBCASE("out of range") { CHECK_THROWS(airy_fn(201.0)); }
}

TEST_CASE("extended airy kernel, lambda form") {
    SUBCASE("equal-time diagonal at 0: int Ai^2 = Ai'(0)^2") {
        double expect = airy_fn(0.0).aip * airy_fn(0.0).aip;
        CHECK(std::abs(extended_airy_kernel(0, 0, 0, 0) - expect) < 1e-11);
        CHECK(expect == doctest::Approx(0.06699).epsilon(2e-4));
    }
    SUBCASE("equal times reduce to the classic Airy kernel") {
        for (double x : {-2.0, -0.5, 0.0, 1.0})
            for (double y : {-1.5, 0.3, 2.0}) {
                CAPTURE(x);
                CAPTURE(y);
                CHECK(std::abs(extended_airy_kernel(0.7, x, 0.7, y) - airy_kernel_classic(x, y)) < 1e-10);
            }
    }
    SUBCASE("dependence on time differences only") {
        double v1 = extended_airy_kernel(0.4, 0.1, -0.3, -0.2);
        double v2 = extended_airy_kernel(1.4, 0.1, 0.7, -0.2);
        CHECK(std::abs(v1 - v2) < 1e-11);
        double v3 = extended_airy_kernel(-0.3, -0.2, 0.4, 0.1);
        double v4 = extended_airy_kernel(0.7, -0.2, 1.4, 0.1);
        CHECK(std::abs(v3 - v4) < 1e-11);
    }
}

TEST_CASE("gaussian residue term phi") {
    SUBCASE("vanishes for tau >= tau'") {
        CHECK(phi_gaussian(1.0, 1.0, 0.3, 0.4) == 0.0);
        CHECK(phi_gaussian(2.0, 1.0, 0.3, 0.4) == 0.0);
    }
    SUBCASE("closed form at unit separation") {
        double expect = std::exp(1.0 / 12.0) / std::sqrt(4.0 * std::numbers::pi);
        CHECK(std::abs(phi_gaussian(0.0, 1.0, 0.0, 0.0) - expect) < 1e-14);
    }
    SUBCASE("equals the bilateral lambda integral") {
        ExtendedAiryKernelSpec spec;
        for (double dt : {0.6, 1.0, 1.7}) {
            for (double xi : {-0.8, 0.4})
                for (double xip : {-0.3, 1.1}) {
                    CAPTURE(dt);
                    double atilde = extended_airy_kernel_tilde(0.0, xi, dt, xip, spec);
                    double a = extended_airy_kernel(0.0, xi, dt, xip, spec);
                    CHECK(std::abs((atilde - a) - phi_gaussian(0.0, dt, xi, xip)) < 1e-8);
                }
        }
    }
}

TEST_CASE("double integral representation") {
    SUBCASE("matches the lambda form on a 3x3x3 grid") {
        for (double dt : {-1.0, 0.0, 1.0}) {  // dt = tau - tau'
            for (double xi : {-1.0, 0.0, 1.0})
                for (double xip : {-1.0, 0.0, 1.0}) {
                    CAPTURE(dt);
                    CAPTURE(xi);
                    CAPTURE(xip);
                    double lam = extended_airy_kernel(dt, xi, 0.0, xip);
                    // branch condition: eta+eta'+tau-tau' < 0 when tau' > tau
                    double eta = (dt < 0) ? 0.2 : 1.0;
                    double dbl = extended_airy_double_integral(dt, xi, 0.0, xip, eta, eta, 24);
                    CHECK(std::abs(lam - dbl) < 1e-8);
                }
        }
    }
    SUBCASE("tilde branch via the contour condition") {
        // same contour family, eta+eta' > tau'-tau picks the tilde kernel
        double dt = -1.0;
        double tilde = extended_airy_kernel_tilde(dt, 0.3, 0.0, -0.2);
        double dbl = extended_airy_double_integral(dt, 0.3, 0.0, -0.2, 0.8, 0.8, 24);
        CHECK(std::abs(tilde - dbl) < 1e-8);
    }
    SUBCASE("symmetric under swapping (xi,tau) pairs at equal times") {
        double v1 = extended_airy_double_integral(0.0, 0.7, 0.0, -0.4, 1.0, 1.0, 24);
        double v2 = extended_airy_double_integral(0.0, -0.4, 0.0, 0.7, 1.0, 1.0, 24);
        CHECK(std::abs(v1 - v2) < 1e-10);
    }
    SUBCASE("branch condition violations are rejected") {
        CHECK_THROWS(extended_airy_double_integral(0.0, 0.0, 1.0, 0.0, 0.5, 0.5, 16));
        CHECK_THROWS(extended_airy_double_integral(0.0, 0.0, 1.0, 0.0, -0.1, 0.5, 16));
    }
}
