#include <doctest.h>

#include <cmath>

#include "bbmfront/rho.hpp"
#include "bbmfront/stats.hpp"

using namespace bbmfront;

namespace {

SigmaGridSpec quick_spec() {
    SigmaGridSpec spec;
    spec.points_per_decade = 16;
    return spec;
}

double initial_horizon(double s_max) {
    const SigmaGridSpec spec;
    const double c = spec.escape_factor * std::max(s_max, 0.5) / 1.6;
    return 0.5 * c * c;
}

}  // namespace

TEST_CASE("transform supremum: base cases and exhaustive-scan agreement") {
    PathGrid flat(TimeGrid({0.0, 1.0, 2.0}), 1);  // identically zero path
    const LegendreResult at0 = legendre_sup(flat, 0.0);
    CHECK(at0.value == 0.0);
    CHECK(at0.argmax == 0.0);
    const LegendreResult at1 = legendre_sup(flat, 1.0);
    CHECK(at1.value == 2.0);  // grid-truncated linear growth
    CHECK(at1.argmax == 2.0);
    CHECK_THROWS_AS(legendre_sup(flat, -0.5), parameter_error);

    RngStream rng(91);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<double> pts{0.0};
        double t = 0.0;
        for (int i = 0; i < 19; ++i) pts.push_back(t += rng.uniform(0.1, 0.8));
        PathGrid path(TimeGrid(pts), 1);
        for (std::size_t i = 1; i < path.size(); ++i) path.values[i] = rng.uniform(0.0, 2.5);
        for (double s : {0.0, 0.7, 1.9}) {
            const LegendreResult got = legendre_sup(path, s);
            double ref = 0.0, arg = 0.0;
            for (std::size_t i = 0; i < path.size(); ++i) {
                const double sigma = path.grid[i];
                const double term = sigma * (s - path.values[i]);
                if (term > ref) {
                    ref = term;
                    arg = sigma;
                }
            }
            CHECK(got.value == ref);
            CHECK(got.argmax == arg);
        }
    }
}

TEST_CASE("profile samples: zero at zero, monotone, exactly midpoint-convex squared") {
    std::vector<double> s_grid;
    for (int i = 0; i <= 32; ++i) s_grid.push_back(0.125 * i);
    RngStream root(92);
    for (std::size_t r = 0; r < 50; ++r) {
        RngStream rng = root.derive(r);
        const RhoSample sample = sample_rho(s_grid, initial_horizon(4.0), quick_spec(), rng);
        CHECK(sample.rho.front() == 0.0);
        for (std::size_t i = 1; i < sample.rho.size(); ++i) {
            CHECK(sample.rho[i] >= sample.rho[i - 1]);
            CHECK(sample.rho[i] >= 0.0);
        }
        for (std::size_t i = 1; i + 1 < sample.rho.size(); ++i) {
            const double mid = sample.rho[i] * sample.rho[i];
            const double avg = 0.5 * (sample.rho[i - 1] * sample.rho[i - 1] +
                                      sample.rho[i + 1] * sample.rho[i + 1]);
            CHECK(mid <= avg + 1e-12 * std::max(1.0, mid));
        }
    }
}

TEST_CASE("profile is positive for positive s") {
    RngStream root(93);
    std::size_t positive = 0;
    const std::size_t n = 2000;
    for (std::size_t r = 0; r < n; ++r) {
        RngStream rng = root.derive(r);
        positive += sample_rho({1.0}, initial_horizon(1.0), quick_spec(), rng).rho[0] > 0.0;
    }
    CHECK(positive == n);
}

TEST_CASE("self-similarity smoke: rho(2)/2^(3/2) vs rho(1)") {
    const std::size_t n = 400;
    std::vector<double> a(n), b(n);
    RngStream ra(94), rb(95);
    for (std::size_t r = 0; r < n; ++r) {
        RngStream s1 = ra.derive(r), s2 = rb.derive(r);
        a[r] = sample_rho({2.0}, initial_horizon(2.0), quick_spec(), s1).rho[0] /
               std::pow(2.0, 1.5);
        b[r] = sample_rho({1.0}, initial_horizon(1.0), quick_spec(), s2).rho[0];
    }
    const KsResult ks = ks_two_sample(a, b);
    CHECK(ks.statistic < ks_critical_value(0.01, static_cast<double>(n) / 2.0));
}

TEST_CASE("sample determinism and recorded optimizer") {
    std::vector<double> s_grid{0.0, 0.5, 1.0};
    RngStream a(96), b(96);
    const RhoSample s1 = sample_rho(s_grid, initial_horizon(1.0), quick_spec(), a);
    const RhoSample s2 = sample_rho(s_grid, initial_horizon(1.0), quick_spec(), b);
    CHECK(s1.rho == s2.rho);
    CHECK(s1.argmax_sigma == s2.argmax_sigma);
    CHECK(s1.sigma_grid == s2.sigma_grid);
    for (double arg : s1.argmax_sigma)
        CHECK(std::binary_search(s1.sigma_grid.begin(), s1.sigma_grid.end(), arg));
}

TEST_CASE("revolved surface is constant in theta") {
    RngStream rng(97);
    const RhoSample sample =
        sample_rho({0.0, 1.0, 2.0}, initial_horizon(2.0), quick_spec(), rng);
    const std::vector<double> thetas = make_theta_set(2, 0);
    const FrontSurface surf = revolve_surface(sample, thetas, 2);
    CHECK(surf.theta_count() == 2);  // {+1, -1}
    for (std::size_t si = 0; si < surf.s_grid.size(); ++si) {
        CHECK(surf.height(si, 0) == sample.rho[si]);
        CHECK(surf.height(si, 1) == sample.rho[si]);
    }
    CHECK(surf.heights.size() == surf.s_grid.size() * surf.theta_count());
}
