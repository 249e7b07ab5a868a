#pragma once

#include "eigensteps/eigensteps.hpp"

#include <vector>

namespace eigensteps {

// Desk-scale exhaustive search parameters. step is the grid resolution h;
// max_n caps the instance size the search will accept. The default cap keeps
// the search cheap; callers may raise it for slightly larger fixtures at
// their own expense.
struct GridSpec {
    double step = 1.0 / 32;
    int max_n = 4;

    void validate() const; // throws UsageError unless step > 0 and max_n >= 1
};

// Every table passing validate_inner whose free entries are multiples of h.
// Entries pinned by interlacing alone, and the top entry of each row (fixed
// by the trace identity), are derived instead of searched, so they need not
// land on the grid. Independent of the sequential interval bounds.
std::vector<InnerEigenstepTable> enumerate_valid_tables(const Spectrum& lam,
                                                        const LengthSequence& mu,
                                                        const GridSpec& grid,
                                                        const Tolerances& tol = {});

struct OracleReport {
    int enumerated_count = 0;       // grid tables passing validate_inner
    int walked_count = 0;           // tables generated through the bounds
    int bound_violations = 0;       // enumerated entries outside their [A, B]
    int walk_validation_failures = 0; // walked tables failing validate_inner
    int walk_dead_ends = 0;         // admitted prefixes with no completion
    int unmatched_enumerated = 0;   // enumerated tables missing from the walk
    int unmatched_walked = 0;       // walked tables missing from enumeration

    bool ok() const {
        return bound_violations == 0 && walk_validation_failures == 0 && walk_dead_ends == 0 &&
               unmatched_enumerated == 0 && unmatched_walked == 0;
    }
};

// Cross-checks the sequential bounds against the exhaustive search in both
// directions: every enumerated table must sit inside the bounds entry by
// entry, and every grid choice inside the bounds must produce a table that
// validates. The two table sets must coincide.
OracleReport check_bounds_against_oracle(const Spectrum& lam, const LengthSequence& mu,
                                         const GridSpec& grid, const Tolerances& tol = {});

} // namespace eigensteps
