#include "lfc/state_space.hpp"

#include <stdexcept>

namespace lfc {

StateSpace::StateSpace(Eigen::MatrixXd A_, Eigen::MatrixXd B_, Eigen::MatrixXd C_,
                       Eigen::MatrixXd D_)
    : A(std::move(A_)), B(std::move(B_)), C(std::move(C_)), D(std::move(D_)) {
    const auto n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("StateSpace: A must be square");
    if (B.rows() != n) throw std::invalid_argument("StateSpace: B row count must match A");
    if (C.cols() != n) throw std::invalid_argument("StateSpace: C column count must match A");
    if (D.rows() != C.rows() || D.cols() != B.cols()) {
        throw std::invalid_argument("StateSpace: D must be p x m");
    }
}

StateSpace to_state_space(const TransferFunction& g) {
    const int n = g.den().degree();
    // den is monic by TransferFunction canonicalization: den = s^n + a_{n-1} s^{n-1} + ... + a_0
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, 1);
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(1, n);
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(1, 1);

    const double feedthrough = g.num()[static_cast<std::size_t>(n)];
    D(0, 0) = feedthrough;

    if (n > 0) {
        for (int i = 0; i + 1 < n; ++i) A(i, i + 1) = 1.0;
        for (int k = 0; k < n; ++k) {
            A(n - 1, k) = -g.den()[static_cast<std::size_t>(k)];
        }
        B(n - 1, 0) = 1.0;
        // strictly proper remainder: num - D*den
        for (int k = 0; k < n; ++k) {
            C(0, k) = g.num()[static_cast<std::size_t>(k)] -
                      feedthrough * g.den()[static_cast<std::size_t>(k)];
        }
    }
    return StateSpace(std::move(A), std::move(B), std::move(C), std::move(D));
}

} // namespace lfc
