#pragma once

#include "eigensteps/eigensteps.hpp"
#include "eigensteps/majorization.hpp"
#include "eigensteps/report.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace eigensteps {

// All numeric output goes through one formatter: 17 significant digits, so
// every double round-trips losslessly and reruns are byte identical.
std::string format_double(double v);

std::string to_json(const std::vector<double>& values);
std::string to_json(const VerificationReport& report);
std::string to_json(const MajorizationReport& report);
std::string to_json(const InnerEigenstepTable& table); // M recorded as N
std::string to_json(const OuterEigenstepTable& table);
std::string matrix_to_json(const Eigen::MatrixXd& m);
std::string matrix_to_csv(const Eigen::MatrixXd& m);

// Sequence files: either a JSON array of numbers or one decimal per line,
// told apart by the first nonspace byte. Parse failures throw UsageError.
std::vector<double> parse_sequence(const std::string& text);

// Table files use the JSON schema {"N","M","lam","mu","rows"}; rows are
// listed for n ascending with entries for m ascending. Shape is enforced
// here, the table properties are not.
InnerEigenstepTable parse_inner_table(const std::string& text, const Tolerances& tol = {});
OuterEigenstepTable parse_outer_table(const std::string& text, const Tolerances& tol = {});

// Matrix files: JSON {"M","N","entries"} with row major entries, or CSV with
// one matrix row per line, told apart by the first nonspace byte.
Eigen::MatrixXd parse_matrix(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace eigensteps
