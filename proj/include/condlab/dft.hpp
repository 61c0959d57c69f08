#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace condlab {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using RealVector = std::vector<double>;

// Discrete Fourier transform plan for one fixed length n >= 1.
//
// Convention: forward applies Omega = (w^{ij}) with w = exp(+2*pi*i/n),
// unnormalized; inverse applies (1/n) * Omega^H, so inverse(forward(x)) == x.
// Powers of two run an iterative radix-2 transform; every other length is
// reduced to a power-of-two cyclic convolution with a Bluestein chirp.
//
// Plans are immutable after construction and safe to share across threads;
// transforms keep their scratch on the stack of the call.
class DftPlan {
public:
    explicit DftPlan(std::size_t n);
    ~DftPlan();
    DftPlan(DftPlan&&) noexcept;
    DftPlan& operator=(DftPlan&&) noexcept;
    DftPlan(const DftPlan&) = delete;
    DftPlan& operator=(const DftPlan&) = delete;

    std::size_t length() const { return n_; }
    bool power_of_two() const;

    // y = Omega x. Throws std::invalid_argument on length mismatch.
    ComplexVector forward(const ComplexVector& x) const;
    // y = (1/n) Omega^H x.
    ComplexVector inverse(const ComplexVector& x) const;

private:
    struct Impl;
    std::size_t n_;
    std::unique_ptr<Impl> impl_;
};

ComplexVector dft_forward(const DftPlan& plan, const ComplexVector& x);
ComplexVector dft_inverse(const DftPlan& plan, const ComplexVector& y);

// c_k = sum_j a_{(k-j) mod n} b_j for two real vectors of equal length.
// The imaginary residue of the complex round trip is checked against
// 1e-10 * ||a|| * ||b|| and discarded.
RealVector cyclic_convolve(const RealVector& a, const RealVector& b);

std::size_t next_pow2(std::size_t n);

}  // namespace condlab
