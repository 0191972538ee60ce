#include "logbloch/frame.hpp"

#include <stdexcept>
#include <string>

namespace logbloch {

FramePolynomial build_vn(int n, const BumpFunction& bump) {
    if (n < 0)
        throw std::invalid_argument("build_vn: negative block index");
    FramePolynomial block;
    block.n = n;
    if (n == 0) {
        block.poly = CoefficientSeries({Complex(1.0, 0.0), Complex(1.0, 0.0)});
        block.support_lo = 0;
        block.support_hi = 1;
        return block;
    }
    const long lo = 1L << (n - 1);
    const long hi = (1L << (n + 1)) - 1;
    std::vector<Complex> coeffs(static_cast<std::size_t>(hi) + 1, Complex(0.0, 0.0));
    const double scale = static_cast<double>(lo);
    for (long k = lo; k <= hi; ++k)
        coeffs[static_cast<std::size_t>(k)] = Complex(bump.phi(static_cast<double>(k) / scale), 0.0);
    block.poly = CoefficientSeries(std::move(coeffs));
    block.support_lo = static_cast<int>(lo);
    block.support_hi = static_cast<int>(hi);
    return block;
}

Frame::Frame(int n_max, BumpFunction bump) : n_max_(n_max), bump_(std::move(bump)) {
    if (n_max < 0)
        throw std::invalid_argument("Frame: negative n_max");
    if (n_max > 24)
        throw std::invalid_argument("Frame: n_max above 24 is not supported");
    blocks_.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        blocks_.push_back(build_vn(n, bump_));
}

const FramePolynomial& Frame::block(int n) const {
    if (n < 0 || n > n_max_)
        throw std::out_of_range("Frame::block: index " + std::to_string(n) + " outside 0.." +
                                std::to_string(n_max_));
    return blocks_[static_cast<std::size_t>(n)];
}

bool Frame::covers(int degree) const {
    return degree <= (1L << n_max_) - 1;
}

CoefficientSeries build_pn(int n, const Frame& frame) {
    if (n < 0 || n + 1 > frame.n_max())
        throw std::out_of_range("build_pn: need blocks " + std::to_string(n - 1) + ".." +
                                std::to_string(n + 1) + " inside 0.." + std::to_string(frame.n_max()));
    CoefficientSeries sum = frame.vn(n);
    if (n >= 1)
        sum = add(sum, frame.vn(n - 1));
    sum = add(sum, frame.vn(n + 1));
    return sum;
}

CoefficientSeries delta_polynomial(int n, int k) {
    if (n < 1)
        throw std::out_of_range("delta_polynomial: block index must be >= 1");
    const long lo = 1L << (n - 1);
    const long top = 1L << (n + 1);
    if (k < lo || k > top)
        throw std::out_of_range("delta_polynomial: k=" + std::to_string(k) + " outside [" +
                                std::to_string(lo) + "," + std::to_string(top) + "]");
    std::vector<Complex> coeffs(static_cast<std::size_t>(k) + 1, Complex(0.0, 0.0));
    for (long j = lo; j <= k; ++j)
        coeffs[static_cast<std::size_t>(j)] = Complex(1.0, 0.0);
    return CoefficientSeries(std::move(coeffs));
}

std::vector<CoefficientSeries> frame_decompose(const CoefficientSeries& f, const Frame& frame) {
    if (!frame.covers(f.degree()))
        throw std::out_of_range("frame_decompose: frame with n_max=" + std::to_string(frame.n_max()) +
                                " does not cover degree " + std::to_string(f.degree()));
    std::vector<CoefficientSeries> blocks;
    blocks.reserve(static_cast<std::size_t>(frame.n_max()) + 1);
    for (int n = 0; n <= frame.n_max(); ++n)
        blocks.push_back(hadamard(frame.vn(n), f));
    return blocks;
}

} // namespace logbloch
