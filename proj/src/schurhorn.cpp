#include "eigensteps/schurhorn.hpp"

#include "eigensteps/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace eigensteps {

SelfAdjointMatrix::SelfAdjointMatrix(Eigen::MatrixXd m, const Tolerances& tol)
    : entries(std::move(m)) {
    tol.validate();
    if (entries.rows() != entries.cols())
        throw UsageError("SelfAdjointMatrix: matrix must be square");
    if (entries.size() > 0 &&
        (entries - entries.transpose()).cwiseAbs().maxCoeff() > tol.feas_tol)
        throw UsageError("SelfAdjointMatrix: matrix is not symmetric within feas_tol");
}

namespace {

void check_sorted(std::span<const double> v, const Tolerances& tol, const char* what) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i + 1] > v[i] + tol.feas_tol)
            throw UsageError(std::string(what) + ": entries must be nonincreasing");
}

} // namespace

SelfAdjointMatrix build_schur_horn(std::span<const double> lam_hat,
                                   std::span<const double> mu_hat, std::optional<double> alpha,
                                   std::span<const double> t, const Tolerances& tol) {
    tol.validate();
    const std::size_t n = lam_hat.size();
    if (n == 0 || mu_hat.size() != n)
        throw UsageError("build_schur_horn: spectrum and diagonal must be nonempty and of equal "
                         "length");
    check_sorted(lam_hat, tol, "build_schur_horn: spectrum");
    check_sorted(mu_hat, tol, "build_schur_horn: diagonal");

    const MajorizationReport rep = majorizes(lam_hat, mu_hat, tol);
    if (!rep.holds)
        throw InfeasibleError("build_schur_horn: spectrum does not majorize diagonal, no such "
                              "matrix exists");

    const double shift = alpha.value_or(lam_hat[n - 1]);
    if (shift > lam_hat[n - 1] + tol.feas_tol)
        throw UsageError("build_schur_horn: alpha must not exceed the smallest spectrum entry");

    std::vector<double> lam(n), mu(n);
    for (std::size_t i = 0; i < n; ++i) {
        lam[i] = lam_hat[i] - shift;
        mu[i] = mu_hat[i] - shift;
    }
    // Majorization guarantees the shifted sequences are nonnegative only up
    // to a small multiple of feas_tol, so the constructors get extra slack.
    Tolerances relaxed = tol;
    relaxed.feas_tol *= 4.0;
    const Spectrum lam_shifted(std::move(lam), relaxed);
    const LengthSequence mu_shifted(std::move(mu), relaxed);

    const InnerEigenstepTable table =
        t.empty() ? topkill_table(lam_shifted, mu_shifted, tol)
                  : parametrize_inner(lam_shifted, mu_shifted, t, tol);
    const OuterEigenstepTable outer = inner_to_outer(table, static_cast<int>(n), tol);
    const FrameMatrix frame = build_frame(outer, ProbePolicy::canonical(), tol);

    Eigen::MatrixXd gram = frame.entries.transpose() * frame.entries;
    gram.diagonal().array() += shift;
    // Enforce exact symmetry rather than rely on the product being computed
    // coefficientwise.
    gram = ((gram + gram.transpose()) / 2.0).eval();
    return SelfAdjointMatrix(std::move(gram), tol);
}

VerificationReport verify_schur_horn(const SelfAdjointMatrix& matrix,
                                     std::span<const double> lam_hat,
                                     std::span<const double> mu_hat, const Tolerances& tol) {
    tol.validate();
    VerificationReport rep;
    const int n = matrix.size();
    if (static_cast<std::size_t>(n) != lam_hat.size() ||
        static_cast<std::size_t>(n) != mu_hat.size()) {
        rep.add("shape", 1.0, 0.0);
        return rep;
    }

    const double asym =
        n > 0 ? (matrix.entries - matrix.entries.transpose()).cwiseAbs().maxCoeff() : 0.0;
    rep.add("symmetry", asym, tol.feas_tol);

    const EighResult eig = eigh_descending(matrix.entries, tol);
    double spectrum = 0.0;
    for (int i = 0; i < n; ++i)
        spectrum = std::max(spectrum,
                            std::abs(eig.eigenvalues[i] - lam_hat[static_cast<std::size_t>(i)]));
    rep.add("spectrum", spectrum, 1e-7);

    double diagonal = 0.0;
    for (int i = 0; i < n; ++i)
        diagonal = std::max(diagonal, std::abs(matrix.entries(i, i) -
                                               mu_hat[static_cast<std::size_t>(i)]));
    rep.add("diagonal", diagonal, 1e-8);
    return rep;
}

} // namespace eigensteps
