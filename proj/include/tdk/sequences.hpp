#pragma once

#include <cstddef>

#include "tdk/kernel_spec.hpp"

namespace tdk {

/// Index-addressable views of the derived scalar sequences.  Everything is
/// computed on demand from the spec; no state beyond the spec itself.
class DerivedSequences {
public:
    explicit DerivedSequences(KernelSpec spec) : spec_(std::move(spec)) {}

    /// c_n = (a_n / a_{n+2}) (b_n / a_n - b_{n+1} / a_{n+1}).
    Complex c(std::size_t n) const;

    /// d_n = b_n / a_n - b_{n-1} / a_{n-1}, n >= 1.
    Complex d(std::size_t n) const;

    /// d_n^(p) = b_n - (a_n / a_{n-p}) b_{n-p}, n >= p >= 1.
    Complex d_p(std::size_t n, std::size_t p) const;

    /// beta_n = b_n / a_n - b_0 / a_0, n >= 1.
    Complex beta(std::size_t n) const;

    /// beta_n^(p) = a_n (-b_0 / a_0)^{p-n-1} beta_n, 1 <= n <= p-1.
    Complex beta_p(std::size_t n, std::size_t p) const;

    const KernelSpec& spec() const { return spec_; }

private:
    KernelSpec spec_;
};

}  // namespace tdk
