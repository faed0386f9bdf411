#include "tdk/verdict.hpp"

namespace tdk {

Verdict banded_verdict(double magnitude, int m, int n, double tol) {
    Verdict v;
    v.tolerance = tol;
    if (magnitude <= tol) {
        v.state = Verdict::State::holds;
        return v;
    }
    if (magnitude <= kIndeterminateFactor * tol) {
        v.state = Verdict::State::indeterminate;  // witness only accompanies a conviction
        return v;
    }
    v.state = Verdict::State::fails;
    v.witness = Witness{m, n, magnitude};
    return v;
}

Witness offband_max(const CMatrix& table) {
    Witness w;
    for (int m = 0; m < table.rows(); ++m) {
        for (int n = 0; n < table.cols(); ++n) {
            if (std::abs(m - n) < 2) continue;
            const double mag = std::abs(table(m, n));
            if (mag > w.magnitude) w = Witness{m, n, mag};
        }
    }
    return w;
}

Verdict offband_verdict(const CMatrix& table, double rel_tol) {
    const double tol = std::max(kAbsFloor, rel_tol * max_abs(table));
    const Witness peak = offband_max(table);
    Verdict v = banded_verdict(peak.magnitude, peak.m, peak.n, tol);
    if (!v.fails()) return v;
    // Witness the first violating pair in scan order, not the largest.
    for (int m = 0; m < table.rows(); ++m) {
        for (int n = 0; n < table.cols(); ++n) {
            if (std::abs(m - n) < 2) continue;
            const double mag = std::abs(table(m, n));
            if (mag > tol) {
                v.witness = Witness{m, n, mag};
                return v;
            }
        }
    }
    return v;
}

}  // namespace tdk
