#pragma once

#include <stdexcept>
#include <string>

namespace tdisc {

// Base class for all library failures.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (polynomials, job files). Carries a character position.
struct parse_error : error {
    std::size_t pos;
    parse_error(const std::string& msg, std::size_t position)
        : error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
};

// A configured resource cap was hit. Never a wrong answer, always an explicit failure.
struct budget_error : error {
    explicit budget_error(const std::string& msg) : error("budget exhausted: " + msg) {}
};

// A mathematical hypothesis of the pipeline is violated (or cannot be certified).
struct hypothesis_error : error {
    explicit hypothesis_error(const std::string& msg) : error("hypothesis violation: " + msg) {}
};

}  // namespace tdisc
