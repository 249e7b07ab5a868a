#include "eigensteps/numeric.hpp"

#include "eigensteps/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eigensteps {

void Tolerances::validate() const {
    if (!(eq_tol > 0.0) || !(feas_tol > 0.0) || !(weight_clamp > 0.0))
        throw UsageError("tolerances must be strictly positive");
}

RootMultiset::RootMultiset(std::vector<RootEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].multiplicity <= 0)
            throw UsageError("root multiplicity must be positive");
        if (i > 0 && !(entries_[i - 1].value > entries_[i].value))
            throw UsageError("root values must be strictly decreasing");
    }
}

int RootMultiset::degree() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0,
                           [](int acc, const RootEntry& e) { return acc + e.multiplicity; });
}

std::vector<double> RootMultiset::expand() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(degree()));
    for (const RootEntry& e : entries_)
        out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
    return out;
}

RootMultiset group_roots(std::span<const double> values, const Tolerances& tol) {
    tol.validate();
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    std::vector<RootEntry> entries;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i + 1;
        double sum = sorted[i];
        // Chain clustering: extend while the gap to the previous member stays
        // within eq_tol. Cluster means then differ by more than eq_tol.
        while (j < sorted.size() && sorted[j - 1] - sorted[j] <= tol.eq_tol) {
            sum += sorted[j];
            ++j;
        }
        entries.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
        i = j;
    }
    return RootMultiset(std::move(entries));
}

EighResult eigh_descending(const Eigen::MatrixXd& S, const Tolerances& tol) {
    tol.validate();
    if (S.rows() != S.cols())
        throw ContractViolation("eigh_descending: matrix is not square");
    const double asym = (S - S.transpose()).cwiseAbs().maxCoeff();
    if (asym > tol.feas_tol)
        throw ContractViolation("eigh_descending: matrix is not symmetric within feas_tol");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(S);
    if (solver.info() != Eigen::Success)
        throw ContractViolation("eigh_descending: eigensolver failed to converge");

    const Eigen::Index m = S.rows();
    EighResult out;
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors.resize(m, m);
    for (Eigen::Index c = 0; c < m; ++c)
        out.eigenvectors.col(c) = solver.eigenvectors().col(m - 1 - c);
    return out;
}

} // namespace eigensteps
