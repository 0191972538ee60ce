#include "logbloch/weights.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace logbloch {

WeightSpec WeightSpec::log_alpha(double alpha) {
    WeightSpec w;
    w.kind_ = Kind::LogAlpha;
    w.alpha_ = alpha;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "log_alpha(%g)", alpha);
    w.tag_ = buf;
    return w;
}

WeightSpec WeightSpec::loglog() {
    WeightSpec w;
    w.kind_ = Kind::LogLog;
    w.tag_ = "loglog";
    return w;
}

WeightSpec WeightSpec::normal(std::function<double(double)> phi, double beta, double gamma) {
    if (!(beta > 0.0) || !(gamma > 0.0))
        throw std::invalid_argument("WeightSpec::normal: beta and gamma must be positive");
    WeightSpec w;
    w.kind_ = Kind::Normal;
    w.phi_ = std::move(phi);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "normal(beta=%g,gamma=%g)", beta, gamma);
    w.tag_ = buf;
    return w;
}

double WeightSpec::operator()(double r) const {
    if (!(r >= 0.0 && r < 1.0))
        throw std::domain_error("WeightSpec: r must lie in [0, 1)");
    const double x = 1.0 - r;
    switch (kind_) {
    case Kind::LogAlpha:
        return std::pow(std::log(2.0 / x), alpha_);
    case Kind::LogLog:
        return std::log(std::log(4.0 / x));
    case Kind::Normal:
        return phi_(x);
    }
    return 0.0;
}

double WeightSpec::phi(double x) const {
    if (kind_ != Kind::Normal)
        throw std::logic_error("WeightSpec::phi: only available for the normal kind");
    return phi_(x);
}

NormalityReport normality_check(const std::function<double(double)>& phi, double beta, double gamma,
                                int grid_size) {
    if (grid_size < 2)
        throw std::invalid_argument("normality_check: grid_size must be >= 2");
    // Geometric grid from 2^-40 up to 1/4. Normality is a small-x property;
    // capping at a quarter keeps the plateau-side behavior of log-modified
    // profiles (which flatten out as x -> 1) from disqualifying them.
    const double x_min = std::pow(2.0, -40.0);
    const double x_max = 0.25;
    const double step = std::pow(x_max / x_min, 1.0 / (grid_size - 1));
    NormalityReport report;
    report.ok = true;
    double x = x_min;
    double prev_dec = 0.0, prev_inc = 0.0;
    const double tol = 1e-9;
    for (int i = 0; i < grid_size; ++i) {
        const double xi = (i == grid_size - 1) ? x_max : x;
        const double value = phi(xi);
        if (!std::isfinite(value))
            throw std::runtime_error("normality_check: phi not finite at x=" + std::to_string(xi));
        const double dec = value / std::pow(xi, gamma);
        const double inc = value / std::pow(xi, beta);
        if (i > 0) {
            if (dec > prev_dec * (1.0 + tol) + tol) {
                report.ok = false;
                report.first_violation = i;
                report.which = "nonincreasing";
                return report;
            }
            if (inc < prev_inc * (1.0 - tol) - tol) {
                report.ok = false;
                report.first_violation = i;
                report.which = "nondecreasing";
                return report;
            }
        }
        prev_dec = dec;
        prev_inc = inc;
        x *= step;
    }
    return report;
}

} // namespace logbloch
