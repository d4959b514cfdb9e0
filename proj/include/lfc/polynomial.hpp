#pragma once

#include <initializer_list>
#include <vector>

namespace lfc {

/// Real polynomial in the Laplace variable s, stored ascending: coeffs()[k]
/// multiplies s^k. Always kept in canonical trimmed form: the highest stored
/// coefficient is nonzero unless the polynomial is identically zero, in which
/// case the single coefficient 0 is stored.
///
/// Trimming uses a relative threshold: any |c| below kTrimRel * max|coeffs|
/// is treated as exact zero. Feedback algebra routinely leaves cancellation
/// residue at that scale.
class Polynomial {
public:
    static constexpr double kTrimRel = 1e-12;

    /// The zero polynomial.
    Polynomial() : coeffs_{0.0} {}

    Polynomial(std::initializer_list<double> coeffs)
        : Polynomial(std::vector<double>(coeffs)) {}

    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial({1.0}); }

    /// degree() of the zero polynomial is 0 by convention; use is_zero() to
    /// distinguish it from a nonzero constant.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

    const std::vector<double>& coeffs() const { return coeffs_; }

    /// Coefficient of s^k; zero beyond the stored degree.
    double operator[](std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : 0.0;
    }

    /// Horner evaluation at a real point.
    double eval(double s) const;

    /// Leading (highest-degree) coefficient.
    double leading() const { return coeffs_.back(); }

    Polynomial scaled(double k) const;

    bool operator==(const Polynomial& other) const = default;

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);

private:
    std::vector<double> coeffs_;
};

} // namespace lfc
