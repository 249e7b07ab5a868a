#include "eigensteps/oracle.hpp"

#include "eigensteps/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eigensteps {

void GridSpec::validate() const {
    if (!(step > 0.0))
        throw UsageError("GridSpec: step must be strictly positive");
    if (max_n < 1)
        throw UsageError("GridSpec: max_n must be at least 1");
}

namespace {

std::vector<double> grid_points(double lo, double hi, double h, double slack) {
    std::vector<double> out;
    const long long j_lo = static_cast<long long>(std::ceil((lo - slack) / h - 1e-12));
    const long long j_hi = static_cast<long long>(std::floor((hi + slack) / h + 1e-12));
    for (long long j = j_lo; j <= j_hi; ++j) out.push_back(static_cast<double>(j) * h);
    return out;
}

struct Search {
    const Spectrum& lam;
    const LengthSequence& mu;
    const GridSpec& grid;
    const Tolerances& tol;
    std::vector<std::vector<double>> rows; // rows[n-1], filled top down
    std::vector<InnerEigenstepTable> found;

    void finish() {
        InnerEigenstepTable table(rows, lam, mu);
        if (validate_inner(table, tol).holds()) found.push_back(std::move(table));
    }

    // Fill row n-1 given row n, choosing entries k = n-1..2 and deriving the
    // top entry from the trace identity, then descend.
    void fill_row(int n) {
        if (n == 1) {
            finish();
            return;
        }
        std::vector<double> candidates_done(static_cast<std::size_t>(n - 1), 0.0);
        fill_entry(n, n - 1, candidates_done);
    }

    void fill_entry(int n, int k, std::vector<double>& row) {
        const std::vector<double>& above = rows[static_cast<std::size_t>(n - 1)];
        if (k == 1) {
            double mu_partial = 0.0;
            for (int m = 1; m <= n - 1; ++m) mu_partial += mu[static_cast<std::size_t>(m - 1)];
            double rest = 0.0;
            for (int m = 2; m <= n - 1; ++m) rest += row[static_cast<std::size_t>(m - 1)];
            const double derived = mu_partial - rest;
            // Interlacing box for the top entry prunes hopeless branches.
            if (derived > above[0] + tol.feas_tol || derived < above[1] - tol.feas_tol) return;
            row[0] = derived;
            rows[static_cast<std::size_t>(n - 2)] = row;
            fill_row(n - 1);
            return;
        }
        const double lo = above[static_cast<std::size_t>(k)];
        const double hi = above[static_cast<std::size_t>(k - 1)];
        if (hi - lo <= tol.feas_tol) {
            row[static_cast<std::size_t>(k - 1)] = (lo + hi) / 2.0;
            fill_entry(n, k - 1, row);
            return;
        }
        for (double v : grid_points(lo, hi, grid.step, tol.feas_tol)) {
            row[static_cast<std::size_t>(k - 1)] = v;
            fill_entry(n, k - 1, row);
        }
    }
};

} // namespace

std::vector<InnerEigenstepTable> enumerate_valid_tables(const Spectrum& lam,
                                                        const LengthSequence& mu,
                                                        const GridSpec& grid,
                                                        const Tolerances& tol) {
    tol.validate();
    grid.validate();
    if (lam.size() != mu.size())
        throw UsageError("enumerate_valid_tables: lam and mu must have equal length");
    const int N = static_cast<int>(mu.size());
    if (N > grid.max_n)
        throw UsageError("enumerate_valid_tables: instance exceeds the grid search cap");

    Search search{lam, mu, grid, tol, {}, {}};
    search.rows.assign(static_cast<std::size_t>(N), {});
    for (int n = 1; n <= N; ++n)
        search.rows[static_cast<std::size_t>(n - 1)].assign(static_cast<std::size_t>(n), 0.0);
    search.rows[static_cast<std::size_t>(N - 1)] = lam.values();
    search.fill_row(N);
    return search.found;
}

namespace {

double table_distance(const InnerEigenstepTable& a, const InnerEigenstepTable& b) {
    double d = 0.0;
    for (int n = 1; n <= a.size(); ++n)
        for (int m = 0; m < n; ++m)
            d = std::max(d, std::abs(a.row(n)[static_cast<std::size_t>(m)] -
                                     b.row(n)[static_cast<std::size_t>(m)]));
    return d;
}

struct BoundsWalk {
    const Spectrum& lam;
    const LengthSequence& mu;
    const GridSpec& grid;
    const Tolerances& tol;
    std::vector<std::vector<double>> rows;
    std::vector<InnerEigenstepTable> found;
    int dead_ends = 0;

    void fill_row(int n) {
        if (n == 1) {
            found.emplace_back(rows, lam, mu);
            return;
        }
        fill_entry(n, n - 1);
    }

    void fill_entry(int n, int k) {
        std::vector<double>& row = rows[static_cast<std::size_t>(n - 2)];
        const std::vector<double>& above = rows[static_cast<std::size_t>(n - 1)];
        const std::span<const double> suffix(row.data() + k, static_cast<std::size_t>(n - 1 - k));
        IntervalBounds b;
        try {
            b = inner_bounds(above, suffix, mu, n, k, tol);
        } catch (const ContractViolation&) {
            // Every admitted prefix should extend; an empty interval here is
            // itself a finding.
            ++dead_ends;
            return;
        }

        auto descend = [&](double v) {
            row[static_cast<std::size_t>(k - 1)] = v;
            if (k == 1)
                fill_row(n - 1);
            else
                fill_entry(n, k - 1);
        };

        if (b.upper - b.lower <= tol.feas_tol) {
            descend(b.lower);
            return;
        }
        for (double v : grid_points(b.lower, b.upper, grid.step, tol.feas_tol)) descend(v);
    }
};

} // namespace

OracleReport check_bounds_against_oracle(const Spectrum& lam, const LengthSequence& mu,
                                         const GridSpec& grid, const Tolerances& tol) {
    OracleReport rep;
    const std::vector<InnerEigenstepTable> enumerated = enumerate_valid_tables(lam, mu, grid, tol);
    rep.enumerated_count = static_cast<int>(enumerated.size());
    const int N = static_cast<int>(mu.size());

    // Direction one: every valid table obeys the sequential bounds entrywise.
    for (const InnerEigenstepTable& table : enumerated) {
        for (int n = N; n >= 2; --n) {
            const std::vector<double>& row = table.row(n - 1);
            for (int k = n - 1; k >= 1; --k) {
                const std::span<const double> suffix(row.data() + k,
                                                     static_cast<std::size_t>(n - 1 - k));
                bool violated = false;
                try {
                    const IntervalBounds b = inner_bounds(table.row(n), suffix, mu, n, k, tol);
                    const double v = row[static_cast<std::size_t>(k - 1)];
                    violated = v < b.lower - tol.feas_tol || v > b.upper + tol.feas_tol;
                } catch (const ContractViolation&) {
                    violated = true;
                }
                if (violated) ++rep.bound_violations;
            }
        }
    }

    // Direction two: every grid choice inside the bounds yields a valid table.
    BoundsWalk walk{lam, mu, grid, tol, {}, {}};
    walk.rows.assign(static_cast<std::size_t>(N), {});
    for (int n = 1; n <= N; ++n)
        walk.rows[static_cast<std::size_t>(n - 1)].assign(static_cast<std::size_t>(n), 0.0);
    walk.rows[static_cast<std::size_t>(N - 1)] = lam.values();
    if (majorizes(lam, mu, tol).holds) walk.fill_row(N);
    rep.walked_count = static_cast<int>(walk.found.size());
    rep.walk_dead_ends = walk.dead_ends;
    for (const InnerEigenstepTable& table : walk.found)
        if (!validate_inner(table, tol).holds()) ++rep.walk_validation_failures;

    // The two enumerations must describe the same finite set.
    const double match_tol = std::max(4.0 * tol.feas_tol, 1e-12);
    std::vector<bool> walked_used(walk.found.size(), false);
    for (const InnerEigenstepTable& table : enumerated) {
        bool matched = false;
        for (std::size_t i = 0; i < walk.found.size(); ++i) {
            if (walked_used[i]) continue;
            if (table_distance(table, walk.found[i]) <= match_tol) {
                walked_used[i] = true;
                matched = true;
                break;
            }
        }
        if (!matched) ++rep.unmatched_enumerated;
    }
    rep.unmatched_walked =
        static_cast<int>(std::count(walked_used.begin(), walked_used.end(), false));
    return rep;
}

} // namespace eigensteps
