#pragma once

#include "eigensteps/eigensteps.hpp"
#include "eigensteps/numeric.hpp"
#include "eigensteps/report.hpp"

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace eigensteps {

// M x N real matrix whose columns are the frame vectors.
struct FrameMatrix {
    Eigen::MatrixXd entries;

    int dim() const { return static_cast<int>(entries.rows()); }  // M
    int count() const { return static_cast<int>(entries.cols()); } // N
};

// Squared norms of the projections of the next vector onto the eigenspaces of
// the current frame operator, keyed by the distinct eigenvalues of row n.
struct WeightEntry {
    double eigenvalue = 0.0;
    double weight = 0.0;
};
struct ProjectionWeights {
    std::vector<WeightEntry> entries; // eigenvalues strictly decreasing

    double sum() const;
};

// Weights from the two characteristic polynomials p_n, p_{n+1} with root
// multisets row_n and row_next:
//   w(v) = -lim_{x->v} (x - v) p_{n+1}(x) / p_n(x)
// evaluated per distinct root v of p_n with multiplicity a there and b among
// the roots of p_{n+1} within eq_tol:
//   b >= a    : w = 0
//   b == a-1  : w = - prod_{u in roots(p_{n+1}), u != v} (v - u)
//                 / prod_{u in roots(p_n),     u != v} (v - u)
//               (products over distinct roots, with multiplicity)
//   b <= a-2  : the limit diverges, the rows do not interlace; error.
// Negative weights within weight_clamp are clamped to zero; anything more
// negative is an interlacing violation.
ProjectionWeights limit_weights(const RootMultiset& row_n, const RootMultiset& row_next,
                                const Tolerances& tol = {});

// Picks a unit direction inside one eigenspace. basis holds an orthonormal
// basis of the eigenspace as columns; the return value is the coefficient
// vector of the chosen direction in that basis (normalized by the caller).
using DirectionChooser =
    std::function<Eigen::VectorXd(const Eigen::MatrixXd& basis, double eigenvalue, int step)>;

struct ProbePolicy {
    DirectionChooser chooser; // empty means canonical probe

    // Projects the first canonical basis vector onto the eigenspace and
    // normalizes, advancing to the next canonical vector whenever the
    // projection norm falls below 1e-8. Deterministic.
    static ProbePolicy canonical();
};

// Synthesizes the next frame vector: f = sum_v sqrt(w(v)) u(v) with u(v) the
// chosen unit vector in the eigenspace of eig for eigenvalue v. Eigenvectors
// are matched to weight eigenvalues by nearest value; a positive weight whose
// matched eigenspace is empty is a grouping tolerance error.
Eigen::VectorXd next_vector(const FrameMatrix& partial, const ProjectionWeights& weights,
                            const EighResult& eig, const ProbePolicy& policy,
                            const Tolerances& tol = {});

// Synthesizes a frame whose partial frame operator spectra follow the table.
// Requires validate_outer(table) to hold. Deterministic for a fixed policy.
FrameMatrix build_frame(const OuterEigenstepTable& table, const ProbePolicy& policy = {},
                        const Tolerances& tol = {});

// Residual checks: frame operator spectrum against lam, squared column norms
// against mu, and, when a table is supplied, every partial frame operator
// spectrum against its row.
VerificationReport verify_frame(const FrameMatrix& frame, const Spectrum& lam,
                                const LengthSequence& mu,
                                const OuterEigenstepTable* table = nullptr,
                                const Tolerances& tol = {});

} // namespace eigensteps
