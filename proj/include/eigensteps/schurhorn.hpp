#pragma once

#include "eigensteps/framebuild.hpp"
#include "eigensteps/report.hpp"

#include <Eigen/Dense>

#include <optional>
#include <span>

namespace eigensteps {

// Real symmetric matrix wrapper; construction rejects asymmetry beyond
// feas_tol.
struct SelfAdjointMatrix {
    Eigen::MatrixXd entries;

    SelfAdjointMatrix(Eigen::MatrixXd m, const Tolerances& tol = {});
    int size() const { return static_cast<int>(entries.rows()); }
};

// Symmetric matrix with spectrum lam_hat and diagonal mu_hat, both
// nonincreasing, possibly negative, equal length, lam_hat majorizing mu_hat.
// The matrix is assembled as F^T F + alpha I from a frame for the shifted
// data lam_hat - alpha, mu_hat - alpha. alpha defaults to the smallest
// entry of lam_hat and must not exceed it. When t is given it selects the
// eigenstep table through the affine chart; otherwise repeated elimination
// is used.
SelfAdjointMatrix build_schur_horn(std::span<const double> lam_hat,
                                   std::span<const double> mu_hat,
                                   std::optional<double> alpha = std::nullopt,
                                   std::span<const double> t = {},
                                   const Tolerances& tol = {});

// Residuals: sorted eigenvalues against lam_hat, diagonal against mu_hat,
// and symmetry.
VerificationReport verify_schur_horn(const SelfAdjointMatrix& matrix,
                                     std::span<const double> lam_hat,
                                     std::span<const double> mu_hat,
                                     const Tolerances& tol = {});

} // namespace eigensteps
