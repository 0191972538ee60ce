#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logbloch/series.hpp"

namespace logbloch {

enum class FamilyKind {
    random_decreasing,
    random_phases,
    lacunary,
    geometric_like,
    logpower,
};

FamilyKind family_kind_from_name(const std::string& name);
std::string family_kind_name(FamilyKind kind);

/// Generation recipe for one test family. degree must be a power of two
/// minus one; count >= 1. eps/alpha only matter for logpower, which realizes
/// a_n = log^{-(eps+alpha)}(n+2).
struct TestFamilySpec {
    FamilyKind kind = FamilyKind::random_decreasing;
    int degree = 1023;
    int count = 8;
    std::uint64_t seed = 0x1db;
    double eps = 1.5;
    double alpha = -0.5;
};

/// Deterministic member `index` of the family; repeated calls agree.
/// random_decreasing: positive increments u_k/(k+1) cumulated from the tail.
/// random_phases: e^{i theta_n}/(n+1), theta uniform.
/// lacunary: unit-modulus coefficients on the indices 2^j.
/// geometric_like: rho^n (0.75 + 0.5 u_n) with one rho in [0.5, 0.95] per member.
/// logpower: the fixed sequence log^{-(eps+alpha)}(n+2) for every index.
CoefficientSeries family_member(const TestFamilySpec& spec, int index);

std::vector<CoefficientSeries> generate_family(const TestFamilySpec& spec);

/// splitmix64 finalizer; the seed mixer behind family determinism.
std::uint64_t mix64(std::uint64_t x);

} // namespace logbloch
