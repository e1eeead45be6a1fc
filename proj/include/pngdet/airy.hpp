#pragma once

namespace pngdet {

struct AiryPair {
    double ai, aip;  // Ai(x), Ai'(x)
};
struct BiPair {
    double bi, bip;
};

// Method selection for the Airy evaluator: Maclaurin series around 0,
// asymptotic expansions beyond |x| = asymptotic_crossover, and Taylor-ODE
// marching (in the stable direction) across the gap.
struct AiryEval {
    double series_crossover = 4.5;
    double asymptotic_crossover = 9.0;
    double march_step = 0.375;
    int taylor_order = 26;
    double x_max = 200.0;

    AiryPair ai(double x) const;
    BiPair bi(double x) const;  // |x| <= 100 on the growing side
};

// default evaluator; absolute error <= 1e-12 for x >= -20, envelope-relative
// 1e-10 in the oscillatory tail
AiryPair airy_fn(double x);
BiPair airy_bi_fn(double x);

}  // namespace pngdet
