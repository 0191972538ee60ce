#include "logbloch/bump.hpp"

#include <cmath>
#include <stdexcept>

namespace logbloch {
namespace {

double mollifier(double x) {
    return x > 0.0 ? std::exp(-1.0 / x) : 0.0;
}

double omega_default(double t) {
    if (t <= 1.0)
        return 1.0;
    if (t >= 2.0)
        return 0.0;
    const double a = mollifier(2.0 - t);
    const double b = mollifier(t - 1.0);
    return a / (a + b);
}

double omega_quintic(double t) {
    if (t <= 1.0)
        return 1.0;
    if (t >= 2.0)
        return 0.0;
    const double s = t - 1.0;
    return 1.0 - s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}

} // namespace

BumpFunction BumpFunction::default_bump() {
    return BumpFunction(&omega_default, "default");
}

BumpFunction BumpFunction::quintic() {
    return BumpFunction(&omega_quintic, "quintic");
}

BumpFunction BumpFunction::by_name(const std::string& name) {
    if (name == "default")
        return default_bump();
    if (name == "quintic")
        return quintic();
    throw std::invalid_argument("unknown cutoff profile: " + name);
}

} // namespace logbloch
