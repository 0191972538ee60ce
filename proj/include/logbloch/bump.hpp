#pragma once

#include <functional>
#include <string>

namespace logbloch {

/// Smooth cutoff profile omega with omega(t) = 1 for t <= 1, omega(t) = 0 for
/// t >= 2, strictly decreasing in between. phi(t) = omega(t/2) - omega(t) is
/// the induced dyadic block profile, supported in (1, 4).
class BumpFunction {
public:
    /// exp(-1/x) mollifier transition: omega(t) = h(2-t)/(h(2-t)+h(t-1)) on
    /// (1,2) with h(x) = exp(-1/x) for x > 0 and 0 otherwise. C-infinity.
    static BumpFunction default_bump();

    /// Quintic smoothstep transition (C^2); kept as an alternative so the
    /// dependence of equivalence constants on the cutoff can be probed.
    static BumpFunction quintic();

    /// Lookup by CLI tag: "default" or "quintic".
    static BumpFunction by_name(const std::string& name);

    double omega(double t) const { return omega_(t); }
    double phi(double t) const { return omega_(t / 2.0) - omega_(t); }
    const std::string& description() const { return description_; }

private:
    BumpFunction(std::function<double(double)> omega, std::string description)
        : omega_(std::move(omega)), description_(std::move(description)) {}

    std::function<double(double)> omega_;
    std::string description_;
};

} // namespace logbloch
