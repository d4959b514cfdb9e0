#include "lfc/polynomial.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace lfc {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("Polynomial: coefficient list must be non-empty");
    }
    for (double c : coeffs_) {
        if (!std::isfinite(c)) {
            throw std::invalid_argument("Polynomial: coefficients must be finite");
        }
    }
    double maxabs = 0.0;
    for (double c : coeffs_) maxabs = std::max(maxabs, std::fabs(c));
    const double tol = kTrimRel * maxabs;
    for (double& c : coeffs_) {
        if (std::fabs(c) < tol) c = 0.0;
    }
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::eval(double s) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * s + coeffs_[i];
    }
    return acc;
}

Polynomial Polynomial::scaled(double k) const {
    std::vector<double> out(coeffs_);
    for (double& c : out) c *= k;
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<double> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<double> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return Polynomial(std::move(out));
}

} // namespace lfc
