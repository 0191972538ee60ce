#include "logbloch/families.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace logbloch {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool is_pow2_minus_one(int degree) {
    if (degree < 1) return false;
    const unsigned v = static_cast<unsigned>(degree) + 1u;
    return (v & (v - 1u)) == 0u;
}

void validate(const TestFamilySpec& spec) {
    if (!is_pow2_minus_one(spec.degree)) {
        throw std::invalid_argument("family degree must be a power of two minus one");
    }
    if (spec.count < 1) {
        throw std::invalid_argument("family count must be >= 1");
    }
}

// Drawing bits directly keeps generation identical across standard libraries;
// the distribution adapters in <random> are implementation-defined.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::mt19937_64 member_rng(const TestFamilySpec& spec, int index) {
    std::uint64_t h = spec.seed;
    h = mix64(h ^ (0xA24BAED4963EE407ULL * (static_cast<std::uint64_t>(spec.kind) + 1)));
    h = mix64(h ^ (0x9FB21C651E98DF25ULL * (static_cast<std::uint64_t>(index) + 1)));
    return std::mt19937_64(h);
}

} // namespace

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

FamilyKind family_kind_from_name(const std::string& name) {
    if (name == "random_decreasing") return FamilyKind::random_decreasing;
    if (name == "random_phases") return FamilyKind::random_phases;
    if (name == "lacunary") return FamilyKind::lacunary;
    if (name == "geometric_like") return FamilyKind::geometric_like;
    if (name == "logpower") return FamilyKind::logpower;
    throw std::invalid_argument("unknown family kind: " + name);
}

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::random_decreasing: return "random_decreasing";
        case FamilyKind::random_phases: return "random_phases";
        case FamilyKind::lacunary: return "lacunary";
        case FamilyKind::geometric_like: return "geometric_like";
        case FamilyKind::logpower: return "logpower";
    }
    throw std::invalid_argument("unknown family kind");
}

CoefficientSeries family_member(const TestFamilySpec& spec, int index) {
    validate(spec);
    if (index < 0 || index >= spec.count) {
        throw std::out_of_range("family member index out of range");
    }
    const int n_coeffs = spec.degree + 1;
    std::mt19937_64 rng = member_rng(spec, index);
    std::vector<Complex> c(static_cast<std::size_t>(n_coeffs));

    switch (spec.kind) {
        case FamilyKind::random_decreasing: {
            std::vector<double> incr(c.size());
            for (int n = 0; n < n_coeffs; ++n) {
                incr[static_cast<std::size_t>(n)] = uniform01(rng) / (static_cast<double>(n) + 1.0);
            }
            double tail = 0.0;
            for (int n = spec.degree; n >= 0; --n) {
                tail += incr[static_cast<std::size_t>(n)];
                c[static_cast<std::size_t>(n)] = Complex(tail, 0.0);
            }
            break;
        }
        case FamilyKind::random_phases: {
            for (int n = 0; n < n_coeffs; ++n) {
                const double theta = kTwoPi * uniform01(rng);
                c[static_cast<std::size_t>(n)] =
                    Complex(std::cos(theta), std::sin(theta)) / (static_cast<double>(n) + 1.0);
            }
            break;
        }
        case FamilyKind::lacunary: {
            for (int k = 1; k <= spec.degree; k *= 2) {
                const double theta = kTwoPi * uniform01(rng);
                c[static_cast<std::size_t>(k)] = Complex(std::cos(theta), std::sin(theta));
            }
            break;
        }
        case FamilyKind::geometric_like: {
            const double rho = 0.5 + 0.45 * uniform01(rng);
            double p = 1.0;
            for (int n = 0; n < n_coeffs; ++n) {
                c[static_cast<std::size_t>(n)] = Complex(p * (0.75 + 0.5 * uniform01(rng)), 0.0);
                p *= rho;
            }
            break;
        }
        case FamilyKind::logpower: {
            const double power = -(spec.eps + spec.alpha);
            for (int n = 0; n < n_coeffs; ++n) {
                c[static_cast<std::size_t>(n)] =
                    Complex(std::pow(std::log(static_cast<double>(n) + 2.0), power), 0.0);
            }
            break;
        }
    }
    return CoefficientSeries(std::move(c));
}

std::vector<CoefficientSeries> generate_family(const TestFamilySpec& spec) {
    validate(spec);
    std::vector<CoefficientSeries> out;
    out.reserve(static_cast<std::size_t>(spec.count));
    for (int i = 0; i < spec.count; ++i) {
        out.push_back(family_member(spec, i));
    }
    return out;
}

} // namespace logbloch
