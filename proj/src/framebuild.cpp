#include "eigensteps/framebuild.hpp"

#include "eigensteps/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace eigensteps {

double ProjectionWeights::sum() const {
    return std::accumulate(entries.begin(), entries.end(), 0.0,
                           [](double acc, const WeightEntry& e) { return acc + e.weight; });
}

ProjectionWeights limit_weights(const RootMultiset& row_n, const RootMultiset& row_next,
                                const Tolerances& tol) {
    tol.validate();
    if (row_next.degree() != row_n.degree())
        throw UsageError("limit_weights: rows must have equal degree");

    ProjectionWeights out;
    out.entries.reserve(row_n.entries().size());
    for (const RootEntry& root : row_n.entries()) {
        const double v = root.value;
        const int a = root.multiplicity;

        // Multiplicity of v among the roots of p_{n+1}: nearest grouped root
        // within eq_tol, if any.
        int b = 0;
        const RootEntry* matched = nullptr;
        double best = std::numeric_limits<double>::infinity();
        for (const RootEntry& cand : row_next.entries()) {
            const double d = std::abs(cand.value - v);
            if (d < best) {
                best = d;
                matched = &cand;
            }
        }
        if (matched != nullptr && best <= tol.eq_tol) {
            b = matched->multiplicity;
        } else {
            matched = nullptr;
        }

        double w = 0.0;
        if (b >= a) {
            w = 0.0;
        } else if (b == a - 1) {
            double num = 1.0;
            for (const RootEntry& u : row_next.entries()) {
                if (&u == matched) continue;
                for (int c = 0; c < u.multiplicity; ++c) num *= v - u.value;
            }
            double den = 1.0;
            for (const RootEntry& u : row_n.entries()) {
                if (&u == &root) continue;
                for (int c = 0; c < u.multiplicity; ++c) den *= v - u.value;
            }
            w = -num / den;
        } else {
            std::ostringstream os;
            os << "limit_weights: root " << v << " loses multiplicity " << a - b
               << " between consecutive rows, interlacing is violated";
            throw ContractViolation(os.str());
        }

        if (w < 0.0) {
            if (w < -tol.weight_clamp) {
                std::ostringstream os;
                os << "limit_weights: weight " << w << " at root " << v
                   << " is negative beyond weight_clamp, interlacing is violated";
                throw ContractViolation(os.str());
            }
            w = 0.0;
        }
        out.entries.push_back({v, w});
    }
    return out;
}

ProbePolicy ProbePolicy::canonical() { return ProbePolicy{}; }

namespace {

Eigen::VectorXd canonical_coeffs(const Eigen::MatrixXd& basis) {
    const Eigen::Index m = basis.rows();
    for (Eigen::Index probe = 0; probe < m; ++probe) {
        // Coefficients of the projection of e_probe: row `probe` of basis.
        Eigen::VectorXd coeffs = basis.row(probe).transpose();
        const double norm = coeffs.norm();
        if (norm >= 1e-8) return coeffs / norm;
    }
    throw ContractViolation("next_vector: no canonical vector meets the eigenspace");
}

} // namespace

Eigen::VectorXd next_vector(const FrameMatrix& partial, const ProjectionWeights& weights,
                            const EighResult& eig, const ProbePolicy& policy,
                            const Tolerances& tol) {
    tol.validate();
    const Eigen::Index m = partial.entries.rows();
    if (eig.eigenvalues.size() != m || eig.eigenvectors.rows() != m ||
        eig.eigenvectors.cols() != m)
        throw UsageError("next_vector: eigendecomposition does not match the ambient dimension");

    // Assign each computed eigenvalue to the nearest prescribed eigenvalue;
    // the resulting index sets partition the eigenvector columns.
    std::vector<std::vector<Eigen::Index>> groups(weights.entries.size());
    for (Eigen::Index i = 0; i < m; ++i) {
        std::size_t best_g = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t g = 0; g < weights.entries.size(); ++g) {
            const double d = std::abs(eig.eigenvalues[i] - weights.entries[g].eigenvalue);
            if (d < best) {
                best = d;
                best_g = g;
            }
        }
        if (!weights.entries.empty()) groups[best_g].push_back(i);
    }

    Eigen::VectorXd f = Eigen::VectorXd::Zero(m);
    const int step = partial.count();
    for (std::size_t g = 0; g < weights.entries.size(); ++g) {
        const WeightEntry& entry = weights.entries[g];
        if (entry.weight <= 0.0) continue;
        if (groups[g].empty()) {
            std::ostringstream os;
            os << "next_vector: positive weight at eigenvalue " << entry.eigenvalue
               << " but no computed eigenvalue groups there (grouping tolerance too tight "
                  "or table inconsistent with the matrix)";
            throw ContractViolation(os.str());
        }
        Eigen::MatrixXd basis(m, static_cast<Eigen::Index>(groups[g].size()));
        for (std::size_t c = 0; c < groups[g].size(); ++c)
            basis.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors.col(groups[g][c]);

        Eigen::VectorXd coeffs;
        if (policy.chooser) {
            coeffs = policy.chooser(basis, entry.eigenvalue, step);
            if (coeffs.size() != basis.cols())
                throw UsageError("next_vector: direction chooser returned wrong coefficient count");
            const double norm = coeffs.norm();
            if (!(norm > 0.0) || !std::isfinite(norm))
                throw UsageError("next_vector: direction chooser returned a degenerate direction");
            coeffs /= norm;
        } else {
            coeffs = canonical_coeffs(basis);
        }
        f += std::sqrt(entry.weight) * (basis * coeffs);
    }
    return f;
}

FrameMatrix build_frame(const OuterEigenstepTable& table, const ProbePolicy& policy,
                        const Tolerances& tol) {
    tol.validate();
    const VerificationReport valid = validate_outer(table, tol);
    if (!valid.holds()) {
        std::ostringstream os;
        os << "build_frame: table fails validation,";
        for (const CheckResult& c : valid.checks)
            if (!c.pass) os << " " << c.name << " residual " << c.residual;
        throw UsageError(os.str());
    }

    const int M = table.dim();
    const int N = table.size();
    FrameMatrix frame{Eigen::MatrixXd::Zero(M, N)};
    Eigen::MatrixXd op = Eigen::MatrixXd::Zero(M, M); // running F_n F_n^T

    for (int n = 0; n < N; ++n) {
        const ProjectionWeights weights =
            limit_weights(group_roots(table.row(n), tol), group_roots(table.row(n + 1), tol), tol);
        const double mu_next = table.mu()[static_cast<std::size_t>(n)];
        if (std::abs(weights.sum() - mu_next) > 1e-8 * (1.0 + std::abs(mu_next))) {
            std::ostringstream os;
            os << "build_frame: projection weights at step " << n + 1 << " sum to "
               << weights.sum() << " instead of " << mu_next;
            throw ContractViolation(os.str());
        }

        FrameMatrix partial{frame.entries.leftCols(n)};
        const EighResult eig = eigh_descending(op, tol);
        const Eigen::VectorXd f = next_vector(partial, weights, eig, policy, tol);
        frame.entries.col(n) = f;
        op += f * f.transpose(); // exactly symmetric rank one update
    }
    return frame;
}

VerificationReport verify_frame(const FrameMatrix& frame, const Spectrum& lam,
                                const LengthSequence& mu, const OuterEigenstepTable* table,
                                const Tolerances& tol) {
    tol.validate();
    VerificationReport rep;
    const int M = frame.dim();
    const int N = frame.count();

    if (static_cast<int>(lam.size()) != M || static_cast<int>(mu.size()) != N) {
        rep.add("shape", 1.0, 0.0);
        return rep;
    }

    const Eigen::MatrixXd op = frame.entries * frame.entries.transpose();
    const EighResult eig = eigh_descending(op, tol);
    double spectrum = 0.0;
    for (int m = 0; m < M; ++m)
        spectrum = std::max(spectrum,
                            std::abs(eig.eigenvalues[m] - lam[static_cast<std::size_t>(m)]));
    rep.add("spectrum", spectrum, 1e-7);

    double norms = 0.0;
    for (int n = 0; n < N; ++n)
        norms = std::max(norms, std::abs(frame.entries.col(n).squaredNorm() -
                                         mu[static_cast<std::size_t>(n)]));
    rep.add("column_norms", norms, 1e-8);

    if (table != nullptr) {
        double partial = 0.0;
        if (table->dim() != M || table->size() != N) {
            rep.add("partial_spectra", 1.0, 0.0);
            return rep;
        }
        Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(M, M);
        for (int n = 1; n <= N; ++n) {
            const Eigen::VectorXd f = frame.entries.col(n - 1);
            acc += f * f.transpose();
            const EighResult step = eigh_descending(acc, tol);
            for (int m = 0; m < M; ++m)
                partial = std::max(partial, std::abs(step.eigenvalues[m] -
                                                     table->row(n)[static_cast<std::size_t>(m)]));
        }
        rep.add("partial_spectra", partial, 1e-7);
    }
    return rep;
}

} // namespace eigensteps
