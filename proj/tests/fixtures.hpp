#pragma once

#include "eigensteps/eigensteps.hpp"
#include "eigensteps/majorization.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <vector>

// Shared fixtures. Two instances recur throughout the suite:
//
//  * the three-vector instance lam = (7/4, 3/4, 1/2), mu = (1, 1, 1), whose
//    repeated-elimination table is exactly dyadic, and
//  * the "five vectors in R^3" instance lam = (5/3, 5/3, 5/3, 0, 0),
//    mu = (1, 1, 1, 1, 1), whose valid tables form a two-parameter family
//    indexed by x = lam(3;3) and y = lam(2;2) with 0 <= x <= 2/3 and
//    max{1/3, x} <= y <= min{2/3 + x, 4/3 - x}.
namespace fixtures {

inline eigensteps::Spectrum dyadic_lam() {
    return eigensteps::Spectrum({1.75, 0.75, 0.5});
}

inline eigensteps::LengthSequence unit_mu(int n) {
    return eigensteps::LengthSequence(std::vector<double>(static_cast<std::size_t>(n), 1.0));
}

inline eigensteps::Spectrum tight_lam_padded() {
    const double a = 5.0 / 3.0;
    return eigensteps::Spectrum({a, a, a, 0.0, 0.0});
}

inline eigensteps::Spectrum tight_lam3() {
    const double a = 5.0 / 3.0;
    return eigensteps::Spectrum({a, a, a});
}

// The full two-parameter family of inner tables for the five-in-three
// instance.
inline eigensteps::InnerEigenstepTable five_in_three_table(double x, double y) {
    const double a = 5.0 / 3.0;
    std::vector<std::vector<double>> rows = {
        {1.0},
        {2.0 - y, y},
        {a, 4.0 / 3.0 - x, x},
        {a, a, 2.0 / 3.0, 0.0},
        {a, a, a, 0.0, 0.0},
    };
    return eigensteps::InnerEigenstepTable(rows, tight_lam_padded(), unit_mu(5));
}

// The reference 3x5 synthesis matrix realizing (x, y) = (0, 1/3); its columns
// are unit norm and its rows are orthogonal with squared norm 5/3.
inline Eigen::MatrixXd reference_frame() {
    const double s5 = std::sqrt(5.0);
    const double s6 = std::sqrt(6.0);
    Eigen::MatrixXd f(3, 5);
    f << 1.0, 2.0 / 3.0, -1.0 / s6, -1.0 / 6.0, 1.0 / 6.0,
         0.0, s5 / 3.0, s5 / s6, s5 / 6.0, -s5 / 6.0,
         0.0, 0.0, 0.0, s5 / s6, s5 / s6;
    return f;
}

} // namespace fixtures
