#pragma once

#include <stdexcept>
#include <string>

namespace paging {

// Bad request ids, malformed sequences, algorithm misuse. CLI exit code 2.
class InvalidInputError : public std::runtime_error {
public:
    explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

// Configuration the construction cannot support (EATR with k != 2,
// adversary without a k = n-1 view, ...). CLI exit code 2.
class UnsupportedConfigError : public std::runtime_error {
public:
    explicit UnsupportedConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Work would exceed a hard cap (exact-tracker state explosion,
// brute-force search too large). CLI exit code 2.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Combiner constants violate sum(1/c(i)) <= 1. CLI exit code 3.
class InfeasibleConfigError : public std::runtime_error {
public:
    explicit InfeasibleConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace paging
