#pragma once

#include <cstdint>
#include <vector>

#include "bbmfront/front.hpp"
#include "bbmfront/rng.hpp"

namespace bbmfront {

struct KsResult {
    double statistic = 0.0;  // sup distance between empirical CDFs, in [0,1]
    double p_approx = 0.0;   // asymptotic Kolmogorov tail at the effective size
    std::size_t n1 = 0;
    std::size_t n2 = 0;
};

// Exact sup-distance between the two empirical CDFs; the p-value uses the
// asymptotic Kolmogorov series at effective size n1*n2/(n1+n2). Both samples
// need at least 10 points.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

// P(K <= x) for the Kolmogorov distribution.
double kolmogorov_cdf(double x);

// Critical sup-distance at level alpha for effective size n_eff: the test
// rejects when statistic > ks_critical_value(alpha, n_eff).
double ks_critical_value(double alpha, double n_eff);

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t n = 0;
};

// Least squares of log h on log s; all inputs must be positive.
SlopeFit fit_power_law(const std::vector<double>& s, const std::vector<double>& h);

struct OccupancyEstimate {
    double t = 0.0;
    std::vector<double> x;
    double radius = 0.25;
    double probability = 0.0;
    double stderr_est = 0.0;
    std::size_t replicas = 0;
};

// Monte Carlo probability that some particle at time t lies within `radius`
// of x. Replica r uses derive_stream(rng, r).
OccupancyEstimate estimate_occupancy(int dim, double t, const std::vector<double>& x,
                                     double radius, std::size_t replicas, const RngStream& rng,
                                     std::int64_t particle_cap = kDefaultParticleCap);

// Occupancy at several query points evaluated on shared replicas (common
// random numbers), so comparisons across points are free of resampling noise.
std::vector<OccupancyEstimate> occupancy_curve(int dim, double t,
                                               const std::vector<std::vector<double>>& xs,
                                               double radius, std::size_t replicas,
                                               const RngStream& rng,
                                               std::int64_t particle_cap = kDefaultParticleCap);

// Log-log slope of the pooled median height against s over [s_lo, s_hi].
// All ensembles must share the s grid of the first surface.
SlopeFit exponent_report(const std::vector<FrontSurface>& ensembles, double s_lo,
                         double s_hi);

// Regularized lower incomplete gamma P(a, x); chi-square CDF with k degrees
// of freedom is gamma_p(k/2, x/2).
double gamma_p(double a, double x);

// Pearson chi-square goodness-of-fit p-value of observed counts against
// expected counts (expectations below `min_expected` are pooled).
double chi_square_gof_pvalue(const std::vector<double>& observed,
                             const std::vector<double>& expected,
                             double min_expected = 5.0);

double median(std::vector<double> v);

}  // namespace bbmfront
