#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace eigensteps {

// Absolute tolerances used throughout.
//   eq_tol:       two reals are "the same eigenvalue" below this gap
//   feas_tol:     slack allowed on feasibility inequalities (majorization,
//                 interlacing, trace identities)
//   weight_clamp: projection weights in [-weight_clamp, 0) are clamped to 0
struct Tolerances {
    double eq_tol = 1e-9;
    double feas_tol = 1e-9;
    double weight_clamp = 1e-9;

    void validate() const; // throws UsageError unless all strictly positive
};

struct RootEntry {
    double value = 0.0;
    int multiplicity = 0;
};

// A polynomial spectrum as distinct roots with multiplicities, values strictly
// decreasing with consecutive gaps larger than the grouping tolerance.
class RootMultiset {
public:
    RootMultiset() = default;
    explicit RootMultiset(std::vector<RootEntry> entries);

    const std::vector<RootEntry>& entries() const { return entries_; }
    int degree() const;
    bool empty() const { return entries_.empty(); }

    // Roots repeated by multiplicity, nonincreasing.
    std::vector<double> expand() const;

private:
    std::vector<RootEntry> entries_;
};

// Clusters values whose neighbours (in sorted order) lie within eq_tol and
// represents each cluster by its mean. Grouping the expansion of the result
// again is the identity.
RootMultiset group_roots(std::span<const double> values, const Tolerances& tol);

struct EighResult {
    Eigen::VectorXd eigenvalues;  // nonincreasing
    Eigen::MatrixXd eigenvectors; // column m pairs with eigenvalues[m]
};

// Dense symmetric eigendecomposition, eigenvalues sorted nonincreasing.
// Throws ContractViolation if S is not symmetric within feas_tol.
EighResult eigh_descending(const Eigen::MatrixXd& S, const Tolerances& tol = {});

} // namespace eigensteps
