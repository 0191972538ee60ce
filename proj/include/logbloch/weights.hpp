#pragma once

#include <functional>
#include <string>

namespace logbloch {

/// Radial weight evaluated at r in [0, 1). Three kinds:
///  - log_alpha(a): log^a(2/(1-r))
///  - loglog:       log(log(4/(1-r)))
///  - normal(phi, beta, gamma): phi(1-r) for a normal function phi, i.e.
///    phi(x)/x^gamma nonincreasing and phi(x)/x^beta nondecreasing on (0,1].
class WeightSpec {
public:
    static WeightSpec log_alpha(double alpha);
    static WeightSpec loglog();
    static WeightSpec normal(std::function<double(double)> phi, double beta, double gamma);

    /// Weight value at radius r.
    double operator()(double r) const;

    const std::string& tag() const { return tag_; }

    /// Exposed for the normal kind; evaluates phi(x) on (0, 1].
    double phi(double x) const;

private:
    WeightSpec() = default;

    enum class Kind { LogAlpha, LogLog, Normal };
    Kind kind_ = Kind::LogAlpha;
    double alpha_ = 0.0;
    std::function<double(double)> phi_;
    std::string tag_;
};

struct NormalityReport {
    bool ok = false;
    /// Index of the first adjacent grid pair violating a monotonicity
    /// requirement, or -1.
    int first_violation = -1;
    /// Which requirement failed: "nonincreasing", "nondecreasing", or "".
    std::string which;
};

/// Checks phi(x)/x^gamma nonincreasing and phi(x)/x^beta nondecreasing on a
/// geometric grid spanning (0, 1/4], tolerance 1e-9 per adjacent pair.
/// Normality constrains behavior as x -> 0; the cap keeps the flat tail of
/// log-modified profiles near x = 1 out of the verdict.
/// Throws std::runtime_error on non-finite phi values.
NormalityReport normality_check(const std::function<double(double)>& phi, double beta, double gamma,
                                int grid_size);

} // namespace logbloch
