#pragma once

#include "eigensteps/majorization.hpp"
#include "eigensteps/report.hpp"

#include <functional>
#include <span>
#include <vector>

namespace eigensteps {

// Triangular table of partial Gram spectra: row n holds the n eigenvalues of
// the Gram matrix of the first n vectors, entries indexed m = 1..n in
// nonincreasing order. Valid tables satisfy
//   (i)   row N equals lam
//   (ii)  row n-1 interlaces under row n:
//         lam(n;m+1) <= lam(n-1;m) <= lam(n;m) for m = 1..n-1
//   (iii) sum of row n equals mu_1 + ... + mu_n.
// The type enforces shape only; validate_inner reports on (i)-(iii).
class InnerEigenstepTable {
public:
    InnerEigenstepTable(std::vector<std::vector<double>> rows, Spectrum lam, LengthSequence mu);

    int size() const { return static_cast<int>(mu_.size()); } // N
    const std::vector<double>& row(int n) const;              // n in 1..N
    const std::vector<std::vector<double>>& rows() const { return rows_; }
    const Spectrum& lam() const { return lam_; }
    const LengthSequence& mu() const { return mu_; }

private:
    std::vector<std::vector<double>> rows_; // rows_[n-1] has n entries
    Spectrum lam_;                          // length N
    LengthSequence mu_;                     // length N
};

// Rectangular table of partial frame operator spectra: row n (n = 0..N) holds
// the M eigenvalues of F_n F_n^T. Valid tables satisfy
//   (i)   row 0 is zero
//   (ii)  row N equals lam
//   (iii) row n-1 interlaces under row n:
//         lam(n-1;M) <= lam(n;M) and lam(n;m+1) <= lam(n-1;m) <= lam(n;m)
//   (iv)  sum of row n equals mu_1 + ... + mu_n.
// Inner and outer tables are zero paddings of one another.
class OuterEigenstepTable {
public:
    OuterEigenstepTable(std::vector<std::vector<double>> rows, Spectrum lam, LengthSequence mu);

    int dim() const { return static_cast<int>(lam_.size()); }  // M
    int size() const { return static_cast<int>(mu_.size()); }  // N
    const std::vector<double>& row(int n) const;               // n in 0..N
    const std::vector<std::vector<double>>& rows() const { return rows_; }
    const Spectrum& lam() const { return lam_; }
    const LengthSequence& mu() const { return mu_; }

private:
    std::vector<std::vector<double>> rows_; // N+1 rows of length M
    Spectrum lam_;                          // length M
    LengthSequence mu_;                     // length N
};

// One elimination step: given row n and mu_n, pick a pivot k with
// lam(n;k+1) <= mu_n <= lam(n;k), replace the pair (lam(n;k), lam(n;k+1)) by
// their sum minus mu_n, and keep everything else. Any admissible pivot yields
// the same output. Throws InfeasibleError when no pivot exists.
std::vector<double> topkill_step(std::span<const double> row, double mu_n,
                                 const Tolerances& tol = {});

// Full table by repeated elimination from row N down to row 1. Requires
// majorizes(lam, mu); the result always passes validate_inner.
InnerEigenstepTable topkill_table(const Spectrum& lam, const LengthSequence& mu,
                                  const Tolerances& tol = {});

enum class LowerActive { interlacing, trace_budget };
struct UpperActive {
    enum class Kind { interlacing, majorization } kind = Kind::interlacing;
    int l = 0; // tight partial sum index, set when kind == majorization
};

// Admissible interval for lam(n-1;k) given row n and the already chosen
// entries lam(n-1;k+1..n-1).
struct IntervalBounds {
    double lower = 0.0;
    double upper = 0.0;
    LowerActive active_lower = LowerActive::interlacing;
    UpperActive active_upper;
};

// Sequential bounds, rows built n = N..2 and entries within a row k = n-1..1:
//   A = max{ lam(n;k+1),
//            sum_{m=k..n} lam(n;m) - sum_{m=k+1..n-1} lam(n-1;m) - mu_n }
//   B = min{ lam(n;k),
//            min_{l=1..k} [ sum_{m=l..n-1} mu_m - sum_{m=l+1..k} lam(n;m)
//                           - sum_{m=k+1..n-1} lam(n-1;m) ] }
// Empty sums are zero. Every valid table has lam(n-1;k) in [A, B], and every
// choice in [A, B] extends to a valid table. next_row is row n (length n),
// chosen_suffix holds lam(n-1;m) for m = k+1..n-1 in index order. Throws
// ContractViolation if A > B + feas_tol (inconsistent prefix).
IntervalBounds inner_bounds(std::span<const double> next_row,
                            std::span<const double> chosen_suffix, const LengthSequence& mu,
                            int n, int k, const Tolerances& tol = {});

// Called once per entry in construction order; the return value is clamped
// into [lower, upper]. Intervals no wider than feas_tol are not offered: the
// entry is pinned to the lower bound.
using EntryChooser = std::function<double(const IntervalBounds& bounds, int n, int k)>;

InnerEigenstepTable build_inner(const Spectrum& lam, const LengthSequence& mu,
                                const EntryChooser& chooser, const Tolerances& tol = {});

// Affine chart over the same recursion: coordinate t_i in [0, 1] places entry
// (n, k) at A + t_i (B - A). t has length N(N-1)/2, indexed in construction
// order; degenerate intervals consume a coordinate but ignore its value.
InnerEigenstepTable parametrize_inner(const Spectrum& lam, const LengthSequence& mu,
                                      std::span<const double> t, const Tolerances& tol = {});

VerificationReport validate_inner(const InnerEigenstepTable& table, const Tolerances& tol = {});
VerificationReport validate_outer(const OuterEigenstepTable& table, const Tolerances& tol = {});

// Requires every row entry beyond position M to vanish within feas_tol.
OuterEigenstepTable inner_to_outer(const InnerEigenstepTable& table, int M,
                                   const Tolerances& tol = {});
InnerEigenstepTable outer_to_inner(const OuterEigenstepTable& table, const Tolerances& tol = {});

} // namespace eigensteps
