#include "eigensteps/eigensteps.hpp"

#include "eigensteps/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace eigensteps {

namespace {

std::string at(int n, int k) {
    std::ostringstream os;
    os << "(" << n << ";" << k << ")";
    return os.str();
}

} // namespace

InnerEigenstepTable::InnerEigenstepTable(std::vector<std::vector<double>> rows, Spectrum lam,
                                         LengthSequence mu)
    : rows_(std::move(rows)), lam_(std::move(lam)), mu_(std::move(mu)) {
    const std::size_t n = mu_.size();
    if (lam_.size() != n)
        throw UsageError("InnerEigenstepTable: lam and mu must have equal length");
    if (rows_.size() != n)
        throw UsageError("InnerEigenstepTable: expected one row per vector");
    for (std::size_t r = 0; r < n; ++r)
        if (rows_[r].size() != r + 1)
            throw UsageError("InnerEigenstepTable: row n must have n entries");
}

const std::vector<double>& InnerEigenstepTable::row(int n) const {
    if (n < 1 || n > size())
        throw UsageError("InnerEigenstepTable::row: index out of range");
    return rows_[static_cast<std::size_t>(n - 1)];
}

OuterEigenstepTable::OuterEigenstepTable(std::vector<std::vector<double>> rows, Spectrum lam,
                                         LengthSequence mu)
    : rows_(std::move(rows)), lam_(std::move(lam)), mu_(std::move(mu)) {
    const std::size_t n = mu_.size();
    const std::size_t m = lam_.size();
    if (rows_.size() != n + 1)
        throw UsageError("OuterEigenstepTable: expected N+1 rows");
    for (const auto& r : rows_)
        if (r.size() != m)
            throw UsageError("OuterEigenstepTable: every row must have M entries");
}

const std::vector<double>& OuterEigenstepTable::row(int n) const {
    if (n < 0 || n > size())
        throw UsageError("OuterEigenstepTable::row: index out of range");
    return rows_[static_cast<std::size_t>(n)];
}

std::vector<double> topkill_step(std::span<const double> row, double mu_n,
                                 const Tolerances& tol) {
    tol.validate();
    const std::size_t n = row.size();
    if (n < 2)
        throw UsageError("topkill_step: row must have at least two entries");

    if (mu_n > row[0] + tol.feas_tol)
        throw InfeasibleError("topkill_step: mu exceeds the largest eigenvalue, no pivot");
    // Smallest k with row[k+1] <= mu_n; the pair (row[k], row[k+1]) brackets mu_n.
    std::size_t k = n; // 1-based pivot, n means none
    for (std::size_t c = 1; c <= n - 1; ++c) {
        if (row[c] <= mu_n + tol.feas_tol) {
            k = c;
            break;
        }
    }
    if (k == n)
        throw InfeasibleError("topkill_step: mu is below the smallest eigenvalue, no pivot");

    std::vector<double> out(n - 1);
    for (std::size_t m = 0; m + 1 < k; ++m) out[m] = row[m];
    out[k - 1] = row[k - 1] + row[k] - mu_n;
    for (std::size_t m = k; m < n - 1; ++m) out[m] = row[m + 1];
    return out;
}

InnerEigenstepTable topkill_table(const Spectrum& lam, const LengthSequence& mu,
                                  const Tolerances& tol) {
    tol.validate();
    if (lam.size() != mu.size())
        throw UsageError("topkill_table: lam and mu must have equal length (zero-pad lam)");
    const MajorizationReport rep = majorizes(lam, mu, tol);
    if (!rep.holds)
        throw InfeasibleError("topkill_table: lam does not majorize mu, no table exists");

    const int N = static_cast<int>(mu.size());
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(N));
    rows[static_cast<std::size_t>(N - 1)] = lam.values();
    for (int n = N; n >= 2; --n)
        rows[static_cast<std::size_t>(n - 2)] =
            topkill_step(rows[static_cast<std::size_t>(n - 1)], mu[static_cast<std::size_t>(n - 1)],
                         tol);
    return InnerEigenstepTable(std::move(rows), lam, mu);
}

IntervalBounds inner_bounds(std::span<const double> next_row,
                            std::span<const double> chosen_suffix, const LengthSequence& mu,
                            int n, int k, const Tolerances& tol) {
    tol.validate();
    if (n < 2 || n > static_cast<int>(mu.size()))
        throw UsageError("inner_bounds: n out of range");
    if (k < 1 || k > n - 1)
        throw UsageError("inner_bounds: k out of range");
    if (static_cast<int>(next_row.size()) != n)
        throw UsageError("inner_bounds: row n must have n entries");
    if (static_cast<int>(chosen_suffix.size()) != n - 1 - k)
        throw UsageError("inner_bounds: suffix must hold entries k+1..n-1");

    const double suffix_sum =
        std::accumulate(chosen_suffix.begin(), chosen_suffix.end(), 0.0);

    IntervalBounds b;

    // Lower bound: interlacing below, or the mass still owed to rows >= n.
    const double lower_interlace = next_row[static_cast<std::size_t>(k)];
    double tail = 0.0;
    for (int m = k; m <= n; ++m) tail += next_row[static_cast<std::size_t>(m - 1)];
    const double lower_budget = tail - suffix_sum - mu[static_cast<std::size_t>(n - 1)];
    if (lower_interlace >= lower_budget) {
        b.lower = lower_interlace;
        b.active_lower = LowerActive::interlacing;
    } else {
        b.lower = lower_budget;
        b.active_lower = LowerActive::trace_budget;
    }

    // Upper bound: interlacing above, or the tightest of the partial sum caps.
    const double upper_interlace = next_row[static_cast<std::size_t>(k - 1)];
    double best_cap = std::numeric_limits<double>::infinity();
    int best_l = 0;
    for (int l = 1; l <= k; ++l) {
        double cap = 0.0;
        for (int m = l; m <= n - 1; ++m) cap += mu[static_cast<std::size_t>(m - 1)];
        for (int m = l + 1; m <= k; ++m) cap -= next_row[static_cast<std::size_t>(m - 1)];
        cap -= suffix_sum;
        if (cap < best_cap) {
            best_cap = cap;
            best_l = l;
        }
    }
    if (upper_interlace <= best_cap) {
        b.upper = upper_interlace;
        b.active_upper = {UpperActive::Kind::interlacing, 0};
    } else {
        b.upper = best_cap;
        b.active_upper = {UpperActive::Kind::majorization, best_l};
    }

    if (b.lower > b.upper + tol.feas_tol)
        throw ContractViolation("inner_bounds: empty interval at " + at(n, k) +
                                ", prefix is inconsistent");
    return b;
}

namespace {

// pick is called once per entry in construction order, degenerate or not, and
// must return a value inside [b.lower, b.upper] up to feas_tol.
template <typename Pick>
InnerEigenstepTable build_inner_impl(const Spectrum& lam, const LengthSequence& mu, Pick&& pick,
                                     const Tolerances& tol, const char* who) {
    tol.validate();
    if (lam.size() != mu.size())
        throw UsageError(std::string(who) + ": lam and mu must have equal length (zero-pad lam)");
    const MajorizationReport rep = majorizes(lam, mu, tol);
    if (!rep.holds)
        throw InfeasibleError(std::string(who) + ": lam does not majorize mu, no table exists");

    const int N = static_cast<int>(mu.size());
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(N));
    rows[static_cast<std::size_t>(N - 1)] = lam.values();
    for (int n = N; n >= 2; --n) {
        const std::vector<double>& next_row = rows[static_cast<std::size_t>(n - 1)];
        std::vector<double> row(static_cast<std::size_t>(n - 1));
        for (int k = n - 1; k >= 1; --k) {
            const std::span<const double> suffix(row.data() + k, static_cast<std::size_t>(n - 1 - k));
            const IntervalBounds b = inner_bounds(next_row, suffix, mu, n, k, tol);
            row[static_cast<std::size_t>(k - 1)] = pick(b, n, k);
        }
        rows[static_cast<std::size_t>(n - 2)] = std::move(row);
    }
    return InnerEigenstepTable(std::move(rows), lam, mu);
}

bool degenerate(const IntervalBounds& b, const Tolerances& tol) {
    return !(b.upper - b.lower > tol.feas_tol);
}

} // namespace

InnerEigenstepTable build_inner(const Spectrum& lam, const LengthSequence& mu,
                                const EntryChooser& chooser, const Tolerances& tol) {
    if (!chooser)
        throw UsageError("build_inner: chooser must be callable");
    auto pick = [&](const IntervalBounds& b, int n, int k) {
        if (degenerate(b, tol)) return b.lower;
        return std::clamp(chooser(b, n, k), b.lower, b.upper);
    };
    return build_inner_impl(lam, mu, pick, tol, "build_inner");
}

InnerEigenstepTable parametrize_inner(const Spectrum& lam, const LengthSequence& mu,
                                      std::span<const double> t, const Tolerances& tol) {
    const std::size_t n = mu.size();
    const std::size_t expected = n * (n - 1) / 2;
    if (t.size() != expected)
        throw UsageError("parametrize_inner: t must have length N(N-1)/2");
    for (double ti : t)
        if (!(ti >= 0.0 && ti <= 1.0))
            throw UsageError("parametrize_inner: coordinates must lie in [0, 1]");

    // Every entry consumes one coordinate; pinned entries ignore its value.
    std::size_t cursor = 0;
    auto pick = [&](const IntervalBounds& b, int, int) {
        const double ti = t[cursor++];
        if (degenerate(b, tol)) return b.lower;
        return std::clamp(b.lower + ti * (b.upper - b.lower), b.lower, b.upper);
    };
    return build_inner_impl(lam, mu, pick, tol, "parametrize_inner");
}

VerificationReport validate_inner(const InnerEigenstepTable& table, const Tolerances& tol) {
    tol.validate();
    const int N = table.size();
    VerificationReport rep;

    double final_row = 0.0;
    const std::vector<double>& top = table.row(N);
    for (int m = 0; m < N; ++m)
        final_row = std::max(final_row, std::abs(top[static_cast<std::size_t>(m)] -
                                                 table.lam()[static_cast<std::size_t>(m)]));
    rep.add("final_row", final_row, tol.feas_tol);

    double interlace = 0.0;
    for (int n = 2; n <= N; ++n) {
        const std::vector<double>& hi = table.row(n);
        const std::vector<double>& lo = table.row(n - 1);
        for (int m = 1; m <= n - 1; ++m) {
            interlace = std::max(interlace, hi[static_cast<std::size_t>(m)] -
                                                lo[static_cast<std::size_t>(m - 1)]);
            interlace = std::max(interlace, lo[static_cast<std::size_t>(m - 1)] -
                                                hi[static_cast<std::size_t>(m - 1)]);
        }
    }
    rep.add("interlacing", interlace, tol.feas_tol);

    double trace = 0.0;
    double mu_partial = 0.0;
    for (int n = 1; n <= N; ++n) {
        mu_partial += table.mu()[static_cast<std::size_t>(n - 1)];
        const std::vector<double>& row = table.row(n);
        const double row_sum = std::accumulate(row.begin(), row.end(), 0.0);
        trace = std::max(trace, std::abs(row_sum - mu_partial));
    }
    rep.add("trace", trace, tol.feas_tol);
    return rep;
}

VerificationReport validate_outer(const OuterEigenstepTable& table, const Tolerances& tol) {
    tol.validate();
    const int N = table.size();
    const int M = table.dim();
    VerificationReport rep;

    double row0 = 0.0;
    for (double v : table.row(0)) row0 = std::max(row0, std::abs(v));
    rep.add("first_row_zero", row0, tol.feas_tol);

    double final_row = 0.0;
    for (int m = 0; m < M; ++m)
        final_row = std::max(final_row, std::abs(table.row(N)[static_cast<std::size_t>(m)] -
                                                 table.lam()[static_cast<std::size_t>(m)]));
    rep.add("final_row", final_row, tol.feas_tol);

    double interlace = 0.0;
    for (int n = 1; n <= N; ++n) {
        const std::vector<double>& hi = table.row(n);
        const std::vector<double>& lo = table.row(n - 1);
        // Equal length interlacing: the bottom entry may only grow.
        interlace = std::max(interlace, lo[static_cast<std::size_t>(M - 1)] -
                                            hi[static_cast<std::size_t>(M - 1)]);
        for (int m = 1; m <= M - 1; ++m) {
            interlace = std::max(interlace, hi[static_cast<std::size_t>(m)] -
                                                lo[static_cast<std::size_t>(m - 1)]);
            interlace = std::max(interlace, lo[static_cast<std::size_t>(m - 1)] -
                                                hi[static_cast<std::size_t>(m - 1)]);
        }
    }
    rep.add("interlacing", interlace, tol.feas_tol);

    double trace = 0.0;
    double mu_partial = 0.0;
    for (int n = 1; n <= N; ++n) {
        mu_partial += table.mu()[static_cast<std::size_t>(n - 1)];
        const std::vector<double>& row = table.row(n);
        const double row_sum = std::accumulate(row.begin(), row.end(), 0.0);
        trace = std::max(trace, std::abs(row_sum - mu_partial));
    }
    rep.add("trace", trace, tol.feas_tol);
    return rep;
}

OuterEigenstepTable inner_to_outer(const InnerEigenstepTable& table, int M,
                                   const Tolerances& tol) {
    tol.validate();
    const int N = table.size();
    if (M < 1)
        throw UsageError("inner_to_outer: M must be at least 1");
    for (int n = 1; n <= N; ++n) {
        const std::vector<double>& row = table.row(n);
        for (int m = M + 1; m <= n; ++m)
            if (std::abs(row[static_cast<std::size_t>(m - 1)]) > tol.feas_tol)
                throw UsageError("inner_to_outer: entry " + at(n, m) +
                                 " is nonzero beyond dimension M");
    }

    std::vector<std::vector<double>> rows(static_cast<std::size_t>(N + 1),
                                          std::vector<double>(static_cast<std::size_t>(M), 0.0));
    for (int n = 1; n <= N; ++n) {
        const std::vector<double>& row = table.row(n);
        for (int m = 1; m <= std::min(M, n); ++m)
            rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m - 1)] =
                row[static_cast<std::size_t>(m - 1)];
    }

    std::vector<double> lam(table.lam().values().begin(),
                            table.lam().values().begin() + std::min<std::size_t>(
                                                               static_cast<std::size_t>(M),
                                                               table.lam().size()));
    lam.resize(static_cast<std::size_t>(M), 0.0);
    return OuterEigenstepTable(std::move(rows), Spectrum(std::move(lam), tol), table.mu());
}

InnerEigenstepTable outer_to_inner(const OuterEigenstepTable& table, const Tolerances& tol) {
    tol.validate();
    const int N = table.size();
    const int M = table.dim();
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) {
        std::vector<double> row(static_cast<std::size_t>(n), 0.0);
        for (int m = 1; m <= std::min(M, n); ++m)
            row[static_cast<std::size_t>(m - 1)] =
                table.row(n)[static_cast<std::size_t>(m - 1)];
        rows[static_cast<std::size_t>(n - 1)] = std::move(row);
    }
    return InnerEigenstepTable(std::move(rows), zero_pad(table.lam(), static_cast<std::size_t>(N), tol),
                               table.mu());
}

} // namespace eigensteps
