// stats.hpp
// Goodness-of-fit instruments: Kolmogorov–Smirnov tests (one-sample against
// an arbitrary CDF, two-sample), the Gamma target laws of the limit
// theorems, and sample mean / standard error helpers.
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace rwre {

struct KSReport {
    size_t n = 0;
    double statistic = 0.0;   // sup-norm ECDF deviation, in [0,1]
    double p_value = 0.0;     // Kolmogorov asymptotic tail
    std::string target;
};

// Kolmogorov tail Q(lambda) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_q(double lambda);

// One-sample KS against a continuous CDF; requires >= 50 samples.
KSReport ks_test(std::vector<double> samples,
                 const std::function<double(double)>& cdf,
                 const std::string& target = {});

// Two-sample KS with effective size n*m/(n+m).
KSReport ks_two_sample(std::vector<double> a, std::vector<double> b,
                       const std::string& target = {});

// Gamma(shape, scale); CDF via the regularized lower incomplete gamma.
struct GammaLaw {
    double shape = 1.0;
    double scale = 1.0;
    double cdf(double x) const;
    double mean() const { return shape * scale; }
};

struct MeanSE {
    double mean = 0.0;
    double se = 0.0;
};
MeanSE mean_se(const std::vector<double>& samples);

// Pearson correlation of two equal-length samples.
double correlation(const std::vector<double>& a, const std::vector<double>& b);

} // namespace rwre
