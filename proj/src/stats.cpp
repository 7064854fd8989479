// stats.cpp — KS instruments and Gamma target laws.
#include "rwre/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include "rwre/specfun.hpp"

namespace rwre {

double kolmogorov_q(double lambda) {
    if (lambda <= 0.0) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 200; ++j, sign = -sign) {
        const double term = sign * std::exp(-2.0 * j * j * lambda * lambda);
        sum += term;
        if (std::fabs(term) < 1e-16) break;
    }
    return std::min(1.0, std::max(0.0, 2.0 * sum));
}

KSReport ks_test(std::vector<double> samples,
                 const std::function<double(double)>& cdf,
                 const std::string& target) {
    if (samples.size() < 50) throw std::invalid_argument("ks_test: need >= 50 samples");
    std::sort(samples.begin(), samples.end());
    if (samples.front() == samples.back())
        throw std::invalid_argument("ks_test: degenerate sample");
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    KSReport r;
    r.n = samples.size();
    r.statistic = d;
    const double sn = std::sqrt(n);
    r.p_value = kolmogorov_q((sn + 0.12 + 0.11 / sn) * d);
    r.target = target;
    return r;
}

KSReport ks_two_sample(std::vector<double> a, std::vector<double> b,
                       const std::string& target) {
    if (a.size() < 50 || b.size() < 50)
        throw std::invalid_argument("ks_two_sample: need >= 50 samples each");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    double d = 0.0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na -
                                  static_cast<double>(j) / nb));
    }
    KSReport r;
    r.n = a.size() + b.size();
    r.statistic = d;
    const double ne = na * nb / (na + nb);
    const double sn = std::sqrt(ne);
    r.p_value = kolmogorov_q((sn + 0.12 + 0.11 / sn) * d);
    r.target = target;
    return r;
}

double GammaLaw::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    return regularized_gamma_p(shape, x / scale);
}

MeanSE mean_se(const std::vector<double>& samples) {
    if (samples.empty()) throw std::invalid_argument("mean_se: empty sample");
    double s = 0.0;
    for (double v : samples) s += v;
    const double n = static_cast<double>(samples.size());
    const double m = s / n;
    double v2 = 0.0;
    for (double v : samples) v2 += (v - m) * (v - m);
    MeanSE r;
    r.mean = m;
    r.se = samples.size() > 1 ? std::sqrt(v2 / (n - 1.0) / n) : 0.0;
    return r;
}

double correlation(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2)
        throw std::invalid_argument("correlation: need equal-length samples of size >= 2");
    const MeanSE ma = mean_se(a), mb = mean_se(b);
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        cov += (a[i] - ma.mean) * (b[i] - mb.mean);
        va += (a[i] - ma.mean) * (a[i] - ma.mean);
        vb += (b[i] - mb.mean) * (b[i] - mb.mean);
    }
    if (va == 0.0 || vb == 0.0) return 0.0;
    return cov / std::sqrt(va * vb);
}

} // namespace rwre
