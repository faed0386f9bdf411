#include "tdk/sequences.hpp"

namespace tdk {

Complex DerivedSequences::c(std::size_t n) const {
    const auto& s = spec_;
    return (s.a(n) / s.a(n + 2)) * (s.b(n) / s.a(n) - s.b(n + 1) / s.a(n + 1));
}

Complex DerivedSequences::d(std::size_t n) const {
    if (n == 0) throw DimensionMismatch("d_n is defined for n >= 1");
    return spec_.b(n) / spec_.a(n) - spec_.b(n - 1) / spec_.a(n - 1);
}

Complex DerivedSequences::d_p(std::size_t n, std::size_t p) const {
    if (p < 1 || n < p) throw DimensionMismatch("d_n^(p) is defined for n >= p >= 1");
    return spec_.b(n) - (spec_.a(n) / spec_.a(n - p)) * spec_.b(n - p);
}

Complex DerivedSequences::beta(std::size_t n) const {
    if (n == 0) throw DimensionMismatch("beta_n is defined for n >= 1");
    return spec_.b(n) / spec_.a(n) - spec_.b(0) / spec_.a(0);
}

Complex DerivedSequences::beta_p(std::size_t n, std::size_t p) const {
    if (n < 1 || n + 1 > p) throw DimensionMismatch("beta_n^(p) is defined for 1 <= n <= p-1");
    const Complex base = -spec_.b(0) / spec_.a(0);
    Complex power{1.0, 0.0};  // empty product: (-b_0/a_0)^0 = 1 even when b_0 = 0
    for (std::size_t k = 0; k + n + 1 < p; ++k) power *= base;
    return spec_.a(n) * power * beta(n);
}

}  // namespace tdk
