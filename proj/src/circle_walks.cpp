#include "pngdet/circle_walks.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "pngdet/quadrature.hpp"

namespace pngdet {

namespace {

const Complex kI(0, 1);

Complex unit_root(int n_sites, long long k) {
    double th = 2.0 * std::numbers::pi * static_cast<double>(k) / n_sites;
    return std::polar(1.0, th);
}

// f(l) = q + p z^l with z = e^{2 pi i / N}
Complex step_symbol(const CircleWalkParams& p, long long l) {
    return p.q_step() + p.p_step * unit_root(p.n_sites, l);
}

}  // namespace

void CircleWalkParams::validate() const {
    if (n_particles % 2 == 0 || n_particles >= n_sites || n_particles < 1)
        throw std::invalid_argument("CircleWalkParams: need odd n_particles < n_sites");
    if (!(p_step >= 0 && p_step <= 1)) throw std::invalid_argument("CircleWalkParams: p outside [0,1]");
    if (p_step == q_step() && n_sites % 2 == 0)
        throw std::invalid_argument("CircleWalkParams: p = q with even N is degenerate (ties)");
    if (time_half_width < 1) throw std::invalid_argument("CircleWalkParams: M >= 1");
}

std::vector<int> packed_configuration(const CircleWalkParams& params) {
    std::vector<int> alpha;
    for (int i = 0; i <= params.nu(); ++i) alpha.push_back(i);
    for (int i = params.nu(); i >= 1; --i) alpha.push_back(params.n_sites - i);
    return alpha;  // ordered: 0,1,..,nu, N-nu,..,N-1
}

Complex cylinder_kernel(const CircleWalkParams& params, int r, int x, int s, int y) {
    params.validate();
    int n_sites = params.n_sites, nu = params.nu();
    Complex first = 0;
    for (int j = -nu; j <= nu; ++j) {
        Complex f = params.q_step() + params.p_step * unit_root(n_sites, j);
        first += std::pow(f, s - r) * unit_root(n_sites, static_cast<long long>(j) * (x - y));
    }
    Complex second = 0;
    if (r < s) {
        for (int j = -nu; j <= n_sites - nu - 1; ++j) {
            Complex f = params.q_step() + params.p_step * unit_root(n_sites, j);
            second += std::pow(f, s - r) * unit_root(n_sites, static_cast<long long>(j) * (x - y));
        }
    }
    return (first - second) / static_cast<double>(n_sites);
}

Complex circle_limit_kernel(double rho, double p_step, int r, int x, int s, int y,
                            int panel_nodes) {
    if (!(rho > 0 && rho < 1)) throw std::invalid_argument("circle_limit_kernel: need 0 < rho < 1");
    double q_step = 1.0 - p_step;
    auto integrand = [&](double th) {
        Complex f = q_step + p_step * std::polar(1.0, 2.0 * std::numbers::pi * th);
        return std::pow(f, s - r) * std::polar(1.0, 2.0 * std::numbers::pi * th * (x - y));
    };
    auto integrate = [&](double a, double b) {
        Complex acc = 0;
        std::vector<double> xs, ws;
        int panels = 24;
        for (int k = 0; k < panels; ++k) {
            gl_nodes(panel_nodes, a + (b - a) * k / panels, a + (b - a) * (k + 1) / panels, xs, ws);
            for (int i = 0; i < panel_nodes; ++i) acc += ws[static_cast<size_t>(i)] * integrand(xs[static_cast<size_t>(i)]);
        }
        return acc;
    };
    if (r >= s) return integrate(-rho / 2, rho / 2);
    return -integrate(rho / 2, 1.0 - rho / 2);
}

Complex sector_partition(const CircleWalkParams& params, const std::vector<int>& k) {
    // Z(k) = N^n prod_i f(N - k_i)^{2M-2}
    Complex z = std::pow(static_cast<double>(params.n_sites), static_cast<double>(params.n_particles));
    for (int ki : k)
        z *= std::pow(step_symbol(params, params.n_sites - ki), 2 * params.time_half_width - 2);
    return z;
}

Complex sector_kernel(const CircleWalkParams& params, const std::vector<int>& k, int r, int x,
                      int s, int y) {
    // Ktilde_n(k) - phi_{r,s}; the tilde part is M-independent
    Complex kt = 0;
    for (int ki : k)
        kt += std::pow(step_symbol(params, params.n_sites - ki), s - r) *
              unit_root(params.n_sites, static_cast<long long>(ki) * (y - x));
    kt /= static_cast<double>(params.n_sites);
    if (r < s) {
        Complex phi = 0;
        for (int l = 0; l < params.n_sites; ++l)
            phi += std::pow(step_symbol(params, l), s - r) *
                   unit_root(params.n_sites, static_cast<long long>(l) * (y - x));
        kt -= phi / static_cast<double>(params.n_sites);
    }
    return kt;
}

std::vector<std::vector<int>> ordered_configurations(int n_sites, int n_particles) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == n_particles) {
            out.push_back(cur);
            return;
        }
        int need = n_particles - static_cast<int>(cur.size());
        for (int v = next; v <= n_sites - need; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

Complex finite_cylinder_correlation(const CircleWalkParams& params, const std::vector<Site>& sites) {
    params.validate();
    auto configs = ordered_configurations(params.n_sites, params.n_particles);
    Complex zsum = 0;
    for (const auto& k : configs) zsum += sector_partition(params, k);
    Complex acc = 0;
    int m = static_cast<int>(sites.size());
    for (const auto& k : configs) {
        CMatrix d(m, m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                d(a, b) = sector_kernel(params, k, sites[static_cast<size_t>(a)].r,
                                        sites[static_cast<size_t>(a)].ix, sites[static_cast<size_t>(b)].r,
                                        sites[static_cast<size_t>(b)].ix);
        acc += sector_partition(params, k) * d.determinant();
    }
    return acc / zsum;
}

Complex brute_force_cylinder_correlation(const CircleWalkParams& params,
                                         const std::vector<Site>& sites, double guard) {
    params.validate();
    int n = params.n_particles, n_sites = params.n_sites, M = params.time_half_width;
    int slices = 2 * M - 1;   // r = -M+1..M-1, the last identified with the first
    int free_slices = slices - 1;
    auto configs = ordered_configurations(n_sites, n);
    double total_count = std::pow(static_cast<double>(configs.size()), free_slices);
    if (total_count > guard) throw std::runtime_error("brute force size guard exceeded");

    auto step_det = [&](const std::vector<int>& a, const std::vector<int>& b) {
        CMatrix d(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int diff = (b[static_cast<size_t>(j)] - a[static_cast<size_t>(i)] + n_sites) % n_sites;
                d(i, j) = (diff == 0) ? params.q_step() : (diff == 1 ? params.p_step : 0.0);
            }
        return d.determinant();
    };

    // occupation indicator per configuration
    auto occupies = [&](const std::vector<int>& cfg, int site) {
        for (int v : cfg)
            if (v == site) return true;
        return false;
    };

    Complex num = 0, den = 0;
    std::vector<size_t> idx(static_cast<size_t>(free_slices), 0);
    for (;;) {
        // path: slices -M+1..M-2 free, slice M-1 = slice -M+1
        Complex w = 1;
        for (int rr = 0; rr + 1 < free_slices; ++rr)
            w *= step_det(configs[idx[static_cast<size_t>(rr)]], configs[idx[static_cast<size_t>(rr + 1)]]);
        w *= step_det(configs[idx[static_cast<size_t>(free_slices - 1)]], configs[idx[0]]);
        den += w;
        bool all = true;
        for (const auto& site : sites) {
            int rel = site.r + M - 1;  // 0-based slice; slice M-1 wraps to 0
            if (rel == slices - 1) rel = 0;
            if (rel < 0 || rel >= free_slices) throw std::invalid_argument("site outside time window");
            if (!occupies(configs[idx[static_cast<size_t>(rel)]], site.ix)) {
                all = false;
                break;
            }
        }
        if (all) num += w;
        size_t d = 0;
        while (d < idx.size() && ++idx[d] == configs.size()) idx[d++] = 0;
        if (d == idx.size()) break;
    }
    return num / den;
}

TopLabelReport top_label_selection_check(const CircleWalkParams& params,
                                         const std::vector<int>& half_widths) {
    TopLabelReport rep;
    rep.half_widths = half_widths;
    auto alpha = packed_configuration(params);
    auto configs = ordered_configurations(params.n_sites, params.n_particles);
    double prev = 0;
    bool monotone = true;
    for (int m : half_widths) {
        CircleWalkParams q = params;
        q.time_half_width = m;
        Complex zsum = 0, zoff = 0;
        for (const auto& k : configs) {
            Complex z = sector_partition(q, k);
            zsum += z;
            if (k != alpha) zoff = z;  // remember some non-top sector
        }
        double ratio = (sector_partition(q, alpha) / zsum).real();
        rep.alpha_ratio.push_back(ratio);
        if (ratio < prev - 1e-12) monotone = false;
        prev = ratio;
        rep.off_ratio_last = std::abs(zoff / zsum);
    }
    rep.selects_top = monotone && rep.alpha_ratio.back() > 0.9;
    return rep;
}

}  // namespace pngdet
