#pragma once

#include "eigensteps/numeric.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace eigensteps {

// Nonincreasing nonnegative sequence, the prescribed eigenvalues.
class Spectrum {
public:
    explicit Spectrum(std::vector<double> values, const Tolerances& tol = {});

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double sum() const;

private:
    std::vector<double> values_;
};

// Nonincreasing nonnegative sequence, the prescribed squared vector norms.
class LengthSequence {
public:
    explicit LengthSequence(std::vector<double> values, const Tolerances& tol = {});

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double sum() const;

private:
    std::vector<double> values_;
};

struct MajorizationReport {
    bool holds = false;
    double worst_partial_slack = 0.0; // min over n of sum(lam[0..n)) - sum(mu[0..n))
    double trace_gap = 0.0;           // sum(lam) - sum(mu)
};

// Partial sum test on raw nonincreasing sequences of equal length. Entries may
// be negative. holds iff worst_partial_slack >= -feas_tol and
// |trace_gap| <= feas_tol.
MajorizationReport majorizes(std::span<const double> lam, std::span<const double> mu,
                             const Tolerances& tol = {});
MajorizationReport majorizes(const Spectrum& lam, const LengthSequence& mu,
                             const Tolerances& tol = {});

// Appends zeros up to length n. Throws UsageError if n < lam.size().
Spectrum zero_pad(const Spectrum& lam, std::size_t n, const Tolerances& tol = {});

// One doubly stochastic averaging step between two coordinates: moves a
// fraction t in [0, 1/2] of the gap from the larger to the smaller. The result
// is majorized by the input. Output sorted nonincreasing.
std::vector<double> apply_random_t_transforms(std::span<const double> values, int steps,
                                              std::uint64_t seed);

// Random instance generator: lam from sorted uniform draws, mu from a chain of
// t-transforms applied to lam. majorizes(lam, mu) always holds.
std::pair<Spectrum, LengthSequence> random_majorized_pair(int n, std::uint64_t seed,
                                                          const Tolerances& tol = {});

} // namespace eigensteps
