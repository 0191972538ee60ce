#pragma once

#include <vector>

#include "logbloch/bump.hpp"
#include "logbloch/series.hpp"

namespace logbloch {

/// One smooth dyadic block polynomial. For n >= 1 the support is
/// [2^{n-1}, 2^{n+1}-1] with coefficient phi(k / 2^{n-1}) at index k;
/// block 0 is 1 + z.
struct FramePolynomial {
    int n = 0;
    CoefficientSeries poly;
    int support_lo = 0;
    int support_hi = 0;
};

FramePolynomial build_vn(int n, const BumpFunction& bump);

/// Precomputed blocks 0..n_max. Coefficient indices 0..2^{n_max}-1 carry
/// total reconstruction weight exactly 1.
class Frame {
public:
    explicit Frame(int n_max, BumpFunction bump = BumpFunction::default_bump());

    int n_max() const { return n_max_; }
    const BumpFunction& bump() const { return bump_; }
    const FramePolynomial& block(int n) const;
    const CoefficientSeries& vn(int n) const { return block(n).poly; }

    /// True when every index of a degree-`degree` series gets full weight,
    /// i.e. degree <= 2^{n_max} - 1.
    bool covers(int degree) const;

private:
    int n_max_;
    BumpFunction bump_;
    std::vector<FramePolynomial> blocks_;
};

/// V_{n-1} + V_n + V_{n+1} (V_{-1} = 0); reproduces V_n under the coefficient
/// product. Requires n + 1 <= frame.n_max().
CoefficientSeries build_pn(int n, const Frame& frame);

/// Indicator window sum_{j=2^{n-1}}^{k} z^j for n >= 1,
/// 2^{n-1} <= k <= 2^{n+1}.
CoefficientSeries delta_polynomial(int n, int k);

/// [hadamard(V_n, f)] for n = 0..n_max; the blocks sum back to f.
/// Throws std::out_of_range when the frame does not cover deg f.
std::vector<CoefficientSeries> frame_decompose(const CoefficientSeries& f, const Frame& frame);

} // namespace logbloch
