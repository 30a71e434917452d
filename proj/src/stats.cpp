#include "bbmfront/stats.hpp"

#include <algorithm>
#include <cmath>

#include "bbmfront/bbm.hpp"
#include "bbmfront/errors.hpp"

namespace bbmfront {

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.size() < 10 || b.size() < 10)
        throw parameter_error("ks_two_sample: both samples need at least 10 points");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());

    KsResult res;
    res.n1 = a.size();
    res.n2 = b.size();
    const double inv1 = 1.0 / static_cast<double>(a.size());
    const double inv2 = 1.0 / static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double f1 = 0.0, f2 = 0.0, d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) f1 = static_cast<double>(++i) * inv1;
        while (j < b.size() && b[j] <= x) f2 = static_cast<double>(++j) * inv2;
        d = std::max(d, std::abs(f1 - f2));
    }
    res.statistic = d;

    const double n_eff = static_cast<double>(res.n1) * static_cast<double>(res.n2) /
                         static_cast<double>(res.n1 + res.n2);
    const double lambda = std::sqrt(n_eff) * res.statistic;
    res.p_approx = 1.0 - kolmogorov_cdf(lambda);
    return res;
}

double kolmogorov_cdf(double x) {
    if (x <= 0.0) return 0.0;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * x * x);
        sum += (k % 2 == 1 ? term : -term);
        if (term < 1e-16) break;
    }
    return std::clamp(1.0 - 2.0 * sum, 0.0, 1.0);
}

double ks_critical_value(double alpha, double n_eff) {
    if (!(alpha > 0.0 && alpha < 1.0) || !(n_eff > 0.0))
        throw parameter_error("ks_critical_value: bad arguments");
    double lo = 0.0, hi = 4.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (1.0 - kolmogorov_cdf(mid) > alpha)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi) / std::sqrt(n_eff);
}

SlopeFit fit_power_law(const std::vector<double>& s, const std::vector<double>& h) {
    if (s.size() != h.size() || s.size() < 3)
        throw parameter_error("fit_power_law: need matching samples of size >= 3");
    std::vector<double> xs(s.size()), ys(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(s[i] > 0.0) || !(h[i] > 0.0))
            throw parameter_error("fit_power_law: inputs must be positive");
        xs[i] = std::log(s[i]);
        ys[i] = std::log(h[i]);
    }
    const double n = static_cast<double>(s.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (!(sxx > 0.0)) throw parameter_error("fit_power_law: degenerate abscissa");

    SlopeFit fit;
    fit.n = s.size();
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return fit;
}

namespace {

bool tree_covers(const BbmTree& tree, const std::vector<double>& x, double radius) {
    const double r2 = radius * radius;
    for (std::int64_t leaf : tree.leaf_ids()) {
        auto pos = tree.final_position(leaf);
        double d2 = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double d = pos[j] - x[j];
            d2 += d * d;
            if (d2 > r2) break;
        }
        if (d2 <= r2) return true;
    }
    return false;
}

}  // namespace

OccupancyEstimate estimate_occupancy(int dim, double t, const std::vector<double>& x,
                                     double radius, std::size_t replicas,
                                     const RngStream& rng, std::int64_t particle_cap) {
    auto curve = occupancy_curve(dim, t, {x}, radius, replicas, rng, particle_cap);
    return curve.front();
}

std::vector<OccupancyEstimate> occupancy_curve(int dim, double t,
                                               const std::vector<std::vector<double>>& xs,
                                               double radius, std::size_t replicas,
                                               const RngStream& rng,
                                               std::int64_t particle_cap) {
    if (replicas == 0) throw parameter_error("occupancy: replicas must be >= 1");
    for (const auto& x : xs)
        if (static_cast<int>(x.size()) != dim)
            throw parameter_error("occupancy: query point dimension mismatch");

    std::vector<std::size_t> hits(xs.size(), 0);
    for (std::size_t r = 0; r < replicas; ++r) {
        const BbmTree tree = simulate_bbm(dim, t, rng.derive(r), particle_cap);
        for (std::size_t q = 0; q < xs.size(); ++q)
            if (tree_covers(tree, xs[q], radius)) ++hits[q];
    }

    std::vector<OccupancyEstimate> out;
    out.reserve(xs.size());
    for (std::size_t q = 0; q < xs.size(); ++q) {
        OccupancyEstimate est;
        est.t = t;
        est.x = xs[q];
        est.radius = radius;
        est.replicas = replicas;
        est.probability = static_cast<double>(hits[q]) / static_cast<double>(replicas);
        est.stderr_est = std::sqrt(est.probability * (1.0 - est.probability) /
                                   static_cast<double>(replicas));
        out.push_back(std::move(est));
    }
    return out;
}

SlopeFit exponent_report(const std::vector<FrontSurface>& ensembles, double s_lo,
                         double s_hi) {
    if (ensembles.empty()) throw parameter_error("exponent_report: no ensembles");
    const auto& s_grid = ensembles.front().s_grid;
    for (const auto& surf : ensembles)
        if (surf.s_grid != s_grid)
            throw parameter_error("exponent_report: ensembles must share the s grid");

    std::vector<double> ss, hs;
    std::vector<double> pool;
    for (std::size_t si = 0; si < s_grid.size(); ++si) {
        const double s = s_grid[si];
        if (s < s_lo || s > s_hi) continue;
        pool.clear();
        for (const auto& surf : ensembles)
            for (std::size_t ti = 0; ti < surf.theta_count(); ++ti)
                pool.push_back(surf.height(si, ti));
        const double med = median(pool);
        if (med > 0.0) {
            ss.push_back(s);
            hs.push_back(med);
        }
    }
    if (ss.size() < 3) throw parameter_error("exponent_report: window has fewer than 3 usable s");
    return fit_power_law(ss, hs);
}

double gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw parameter_error("gamma_p: bad arguments");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) {
        // Series expansion.
        double term = 1.0 / a, sum = term;
        for (int n = 1; n < 500; ++n) {
            term *= x / (a + n);
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-15) break;
        }
        return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    // Continued fraction for Q(a, x), modified Lentz.
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    const double q = h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    return 1.0 - q;
}

double chi_square_gof_pvalue(const std::vector<double>& observed,
                             const std::vector<double>& expected, double min_expected) {
    if (observed.size() != expected.size() || observed.empty())
        throw parameter_error("chi_square_gof: size mismatch");

    // Pool small-expectation cells into their neighbors from both ends.
    std::vector<double> obs, exp;
    double o_acc = 0.0, e_acc = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        o_acc += observed[i];
        e_acc += expected[i];
        if (e_acc >= min_expected) {
            obs.push_back(o_acc);
            exp.push_back(e_acc);
            o_acc = e_acc = 0.0;
        }
    }
    if (e_acc > 0.0 && !exp.empty()) {
        obs.back() += o_acc;
        exp.back() += e_acc;
    }
    if (obs.size() < 2) throw parameter_error("chi_square_gof: too few usable cells");

    double stat = 0.0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        const double d = obs[i] - exp[i];
        stat += d * d / exp[i];
    }
    const double dof = static_cast<double>(obs.size() - 1);
    return 1.0 - gamma_p(dof / 2.0, stat / 2.0);
}

double median(std::vector<double> v) {
    if (v.empty()) throw parameter_error("median: empty sample");
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    double hi = v[mid];
    if (v.size() % 2 == 1) return hi;
    const double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lo + hi);
}

}  // namespace bbmfront
