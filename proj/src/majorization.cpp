#include "eigensteps/majorization.hpp"

#include "eigensteps/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace eigensteps {

namespace {

void check_sorted_nonneg(const std::vector<double>& v, const Tolerances& tol, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i]))
            throw UsageError(std::string(what) + ": entries must be finite");
        if (i > 0 && v[i] > v[i - 1] + tol.feas_tol)
            throw UsageError(std::string(what) + ": entries must be nonincreasing");
        if (v[i] < -tol.feas_tol)
            throw UsageError(std::string(what) + ": entries must be nonnegative");
    }
}

} // namespace

Spectrum::Spectrum(std::vector<double> values, const Tolerances& tol) : values_(std::move(values)) {
    tol.validate();
    check_sorted_nonneg(values_, tol, "Spectrum");
}

double Spectrum::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

LengthSequence::LengthSequence(std::vector<double> values, const Tolerances& tol)
    : values_(std::move(values)) {
    tol.validate();
    check_sorted_nonneg(values_, tol, "LengthSequence");
}

double LengthSequence::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

MajorizationReport majorizes(std::span<const double> lam, std::span<const double> mu,
                             const Tolerances& tol) {
    tol.validate();
    if (lam.size() != mu.size())
        throw UsageError("majorizes: sequences must have equal length (zero-pad first)");
    if (lam.empty())
        throw UsageError("majorizes: sequences must be nonempty");

    MajorizationReport rep;
    rep.worst_partial_slack = std::numeric_limits<double>::infinity();
    double lam_sum = 0.0, mu_sum = 0.0;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        lam_sum += lam[i];
        mu_sum += mu[i];
        rep.worst_partial_slack = std::min(rep.worst_partial_slack, lam_sum - mu_sum);
    }
    rep.trace_gap = lam_sum - mu_sum;
    rep.holds = rep.worst_partial_slack >= -tol.feas_tol && std::abs(rep.trace_gap) <= tol.feas_tol;
    return rep;
}

MajorizationReport majorizes(const Spectrum& lam, const LengthSequence& mu, const Tolerances& tol) {
    return majorizes(std::span<const double>(lam.values()), std::span<const double>(mu.values()),
                     tol);
}

Spectrum zero_pad(const Spectrum& lam, std::size_t n, const Tolerances& tol) {
    if (n < lam.size())
        throw UsageError("zero_pad: target length is shorter than the sequence");
    std::vector<double> v = lam.values();
    v.resize(n, 0.0);
    return Spectrum(std::move(v), tol);
}

std::vector<double> apply_random_t_transforms(std::span<const double> values, int steps,
                                              std::uint64_t seed) {
    std::vector<double> v(values.begin(), values.end());
    if (v.size() >= 2 && steps > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
        std::uniform_real_distribution<double> frac(0.0, 0.5);
        for (int s = 0; s < steps; ++s) {
            std::size_t i = pick(rng);
            std::size_t j = pick(rng);
            if (i == j) continue;
            if (v[i] < v[j]) std::swap(i, j);
            const double move = frac(rng) * (v[i] - v[j]);
            v[i] -= move;
            v[j] += move;
        }
    }
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

std::pair<Spectrum, LengthSequence> random_majorized_pair(int n, std::uint64_t seed,
                                                          const Tolerances& tol) {
    if (n < 1)
        throw UsageError("random_majorized_pair: n must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> lam(static_cast<std::size_t>(n));
    for (double& x : lam) x = unif(rng);
    std::sort(lam.begin(), lam.end(), std::greater<>());
    std::vector<double> mu = apply_random_t_transforms(lam, 4 * n, rng());
    return {Spectrum(std::move(lam), tol), LengthSequence(std::move(mu), tol)};
}

} // namespace eigensteps
