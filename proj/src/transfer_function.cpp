#include "lfc/transfer_function.hpp"

#include "lfc/errors.hpp"

#include <stdexcept>

namespace lfc {

namespace {

// division rather than reciprocal multiplication: lead/lead is exactly 1, so
// canonicalizing twice changes nothing
Polynomial divide_coeffs(const Polynomial& p, double d) {
    std::vector<double> out(p.coeffs());
    for (double& c : out) c /= d;
    return Polynomial(std::move(out));
}

} // namespace

TransferFunction::TransferFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw std::invalid_argument("TransferFunction: denominator is identically zero");
    }
    if (num_.degree() > den_.degree() && !num_.is_zero()) {
        throw std::invalid_argument("TransferFunction: improper (numerator degree exceeds denominator degree)");
    }
    const double lead = den_.leading();
    if (lead != 1.0) {
        num_ = divide_coeffs(num_, lead);
        den_ = divide_coeffs(den_, lead);
    }
}

TransferFunction series(const TransferFunction& g1, const TransferFunction& g2) {
    return TransferFunction(g1.num() * g2.num(), g1.den() * g2.den());
}

TransferFunction parallel(const TransferFunction& g1, const TransferFunction& g2,
                          int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("parallel: sign must be +1 or -1");
    }
    const Polynomial cross1 = g1.num() * g2.den();
    const Polynomial cross2 = g2.num() * g1.den();
    const Polynomial num = sign > 0 ? cross1 + cross2 : cross1 - cross2;
    return TransferFunction(num, g1.den() * g2.den());
}

TransferFunction feedback(const TransferFunction& forward,
                          const TransferFunction& back, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("feedback: sign must be +1 or -1");
    }
    const Polynomial loop = forward.num() * back.num();
    const Polynomial base = forward.den() * back.den();
    const Polynomial den = sign > 0 ? base + loop : base - loop;
    if (den.is_zero()) {
        throw AlgebraicLoopError("feedback: closed-loop denominator is identically zero");
    }
    return TransferFunction(forward.num() * back.den(), den);
}

double dc_gain(const TransferFunction& g) {
    const double d0 = g.den()[0];
    if (d0 == 0.0) {
        throw PoleAtOriginError("dc_gain: pole at the origin; evaluate s*G by the final-value theorem instead");
    }
    return g.num()[0] / d0;
}

} // namespace lfc
