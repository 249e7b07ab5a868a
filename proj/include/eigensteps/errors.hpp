#pragma once

#include <stdexcept>
#include <string>

namespace eigensteps {

// Bad arguments: wrong lengths, unsorted data, invalid tolerances or flags.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// The requested object does not exist: majorization fails, no admissible pivot.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// Data that was supposed to satisfy an internal contract does not: asymmetric
// matrix fed to the symmetric eigensolver, inconsistent table prefix,
// interlacing violation detected mid construction.
class ContractViolation : public std::runtime_error {
public:
    explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace eigensteps
