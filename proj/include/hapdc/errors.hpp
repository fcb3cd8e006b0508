#pragma once

#include <stdexcept>
#include <string>

namespace hapdc {

// Queue would grow without bound (arrival rate >= service rate).
class instability_error : public std::domain_error {
public:
    explicit instability_error(const std::string& what) : std::domain_error(what) {}
};

// A required computation has no feasible solution (energy budget, dispatch overflow).
class infeasible_error : public std::runtime_error {
public:
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// Config file could not be parsed or violates an invariant. `detail` names the
// offending key or the line/column of the syntax error.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hapdc
