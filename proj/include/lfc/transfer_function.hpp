#pragma once

#include "lfc/polynomial.hpp"

namespace lfc {

/// Proper rational function num(s)/den(s); the universal block representation.
///
/// Canonical form is enforced on construction: the denominator is normalized
/// to a monic polynomial (leading coefficient 1), the numerator scaled to
/// match, and both operands trimmed. Two transfer functions describing the
/// same block therefore compare equal coefficient-wise.
class TransferFunction {
public:
    /// Throws std::invalid_argument when den is identically zero or when the
    /// ratio is improper (degree(num) > degree(den)).
    TransferFunction(Polynomial num, Polynomial den);

    /// Static gain k as a degree-0 block (droop 1/R, bias B, ...).
    static TransferFunction constant(double k) {
        return TransferFunction(Polynomial({k}), Polynomial::one());
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool operator==(const TransferFunction& other) const = default;

private:
    Polynomial num_;
    Polynomial den_;
};

/// Cascade g1 followed by g2 (order is immaterial for SISO blocks).
TransferFunction series(const TransferFunction& g1, const TransferFunction& g2);

/// Summing junction: g1 + sign*g2 over the common denominator.
TransferFunction parallel(const TransferFunction& g1, const TransferFunction& g2,
                          int sign = +1);

/// Closed loop forward/(1 + sign*forward*back); sign = +1 is the usual
/// negative feedback. Throws AlgebraicLoopError when the closed-loop
/// denominator is identically zero.
TransferFunction feedback(const TransferFunction& forward,
                          const TransferFunction& back, int sign = +1);

/// num(0)/den(0). Throws PoleAtOriginError when den(0) = 0; a caller that
/// expects an integrator in the loop applies the final-value theorem to s*G
/// instead.
double dc_gain(const TransferFunction& g);

} // namespace lfc
