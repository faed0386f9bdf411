#pragma once

#include <optional>

#include "tdk/types.hpp"
#include "tdk/window.hpp"

namespace tdk {

struct Witness {
    int m = 0;
    int n = 0;
    double magnitude = 0.0;
};

/// Boolean classification outcome with a numeric witness and an explicit
/// indeterminate band: magnitudes in [tol, 10 tol] are neither cleared nor
/// convicted.
struct Verdict {
    enum class State { holds, fails, indeterminate };

    State state = State::holds;
    std::optional<Witness> witness;  // present iff state != holds
    double tolerance = 0.0;

    bool holds() const { return state == State::holds; }
    bool fails() const { return state == State::fails; }
    bool indeterminate() const { return state == State::indeterminate; }
};

/// Verdict from a single magnitude against tol / 10 tol.
Verdict banded_verdict(double magnitude, int m, int n, double tol);

/// Largest |X_{mn}| with |m - n| >= 2, and where it sits.
Witness offband_max(const CMatrix& table);

/// Off-band vanishing of a coefficient table, tolerance relative to the
/// largest entry.
Verdict offband_verdict(const CMatrix& table, double rel_tol = kRelTol);

}  // namespace tdk
