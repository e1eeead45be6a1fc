#pragma once

#include <vector>

namespace pngdet {

// Hastings-McLeod solution of Painleve II (q'' = x q + 2 q^3, q ~ Ai at
// +inf) with its cumulative integrals, tabulated once on [x_min, x_max].
class TWTables {
  public:
    static TWTables build(double x_min = -10.0, double x_max = 10.0);

    double q(double x) const;
    double f2(double xi) const;  // exp(-int (x-xi) q^2)
    double f1(double xi) const;  // sqrt(F2) exp(-1/2 int q)
    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }

  private:
    double x_min_ = 0, x_max_ = 0, step_ = 0;
    // grid values of (q, q', J1 = int q, J2 = int q^2, J3 = int x q^2),
    // integrals taken from x to +inf
    std::vector<double> q_, qp_, j1_, j2_, j3_;
    double interp(const std::vector<double>& v, double x) const;
};

// shared tables, built on first use
const TWTables& tw_tables();

// F2 by the Painleve representation (tabulated)
double tw2_painleve(double xi);
// F2 by a Nystrom determinant of the classic Airy kernel
double tw2_nystrom(double xi, int m_q = 48, double L = 14.0);
// cross-validated F2: errors if the two routes disagree beyond 1e-6
double tw2(double xi);
// GOE law F1 = sqrt(F2) exp(-1/2 int_xi q)
double tw1(double xi);

}  // namespace pngdet
