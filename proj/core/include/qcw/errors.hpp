#pragma once

#include <stdexcept>
#include <string>

namespace qcw {

// Malformed external input (truth-table text, report files).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A Deutsch-Jozsa style run was requested for a function that is neither
// constant nor balanced.
class promise_violation_error : public std::runtime_error {
public:
    explicit promise_violation_error(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a documented size cap (qubit counts, matrix dimensions).
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcw
