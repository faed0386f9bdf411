#pragma once

#include <cstddef>
#include <vector>

#include "tdk/types.hpp"

namespace tdk {

/// Tail rule for the defining sequences: past the stored prefix the a_n
/// continue geometrically, a_n = a_{P-1} * rho^{n-P+1}, and the b_n are zero.
struct TailRule {
    Complex rho{1.0, 0.0};
};

/// A tridiagonal kernel specification: the scalar sequences {a_n}, {b_n}
/// behind the orthonormal basis f_n(z) = (a_n + b_n z) z^n.  Immutable after
/// construction; all a_n (and the tail ratio) must be nonzero.
class KernelSpec {
public:
    KernelSpec(std::vector<Complex> a_prefix, std::vector<Complex> b_prefix,
               TailRule tail = {});

    Complex a(std::size_t n) const;
    Complex b(std::size_t n) const;

    std::size_t prefix_size() const { return a_prefix_.size(); }
    const std::vector<Complex>& a_prefix() const { return a_prefix_; }
    const std::vector<Complex>& b_prefix() const { return b_prefix_; }
    const TailRule& tail() const { return tail_; }

    /// Smallest s with b_n = 0 for every n >= s (0 when b vanishes identically).
    std::size_t b_support() const;

private:
    std::vector<Complex> a_prefix_;
    std::vector<Complex> b_prefix_;
    TailRule tail_;
};

struct ValidationReport {
    bool all_nonzero = false;
    double sup_ratio = 0.0;           // sup_n |a_n / a_{n+1}|
    double limsup_b_ratio = 0.0;      // limsup_n |b_n / a_{n+1}|, zero under the zero-b tail
    double prefix_b_ratio_max = 0.0;  // max over the prefix of |b_n / a_{n+1}|
    double bounded_below = 0.0;       // inf_n |a_n / a_{n+1}|
    bool sup_finite = false;          // per-condition verdicts
    bool limsup_below_one = false;
    bool bounded_away = false;
    bool semi_analytic = false;
    bool analytic = false;            // equivalent to left-invertibility of M_z
    bool polynomials_assumed = true;  // containment of C[z] is taken on faith, not re-verified
};

ValidationReport validate_spec(const KernelSpec& spec);

/// Throws NotLeftInvertible unless the spec validates as analytic.
void require_analytic(const KernelSpec& spec);

/// f_n(z) = (a_n + b_n z) z^n.
Complex basis_eval(const KernelSpec& spec, std::size_t n, Complex z);

struct KernelValue {
    Complex value;      // partial sum of f_n(z) * conj(f_n(w)) for n < terms
    double tail_bound;  // geometric bound on the dropped tail
};

/// Partial kernel sum with a certified geometric tail bound.  Throws
/// DivergenceWarning when the tail ratio reaches 1 and no bound exists.
KernelValue kernel_eval(const KernelSpec& spec, Complex z, Complex w, std::size_t terms);

/// Coefficients of z^n in the f-basis: entry m multiplies f_{n+m}.  The
/// expansion terminates once a zero b-factor enters the running product.
std::vector<Complex> monomial_coeffs(const KernelSpec& spec, std::size_t n, std::size_t length);

}  // namespace tdk
