#pragma once

#include "lfc/transfer_function.hpp"

#include <Eigen/Dense>

namespace lfc {

/// A/B/C/D realization used by the integrator. Immutable after construction;
/// dimension consistency is checked once here so downstream code can assume
/// it.
struct StateSpace {
    Eigen::MatrixXd A; ///< n x n, 1/seconds
    Eigen::MatrixXd B; ///< n x m
    Eigen::MatrixXd C; ///< p x n
    Eigen::MatrixXd D; ///< p x m

    StateSpace(Eigen::MatrixXd A_, Eigen::MatrixXd B_, Eigen::MatrixXd C_,
               Eigen::MatrixXd D_);

    int order() const { return static_cast<int>(A.rows()); }
    int num_inputs() const { return static_cast<int>(B.cols()); }
    int num_outputs() const { return static_cast<int>(C.rows()); }
};

/// Controllable canonical realization of a proper SISO transfer function.
/// n = degree(den); the direct feedthrough D carries the leading numerator
/// coefficient when degrees are equal and is zero otherwise.
StateSpace to_state_space(const TransferFunction& g);

} // namespace lfc
