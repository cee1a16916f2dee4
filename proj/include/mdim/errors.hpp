#pragma once

#include <stdexcept>
#include <string>

namespace mdim {

// Malformed textual input: edge lists, rational literals, family spec strings.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Valid syntax but outside the mathematical domain: k out of [1, kappa],
// disconnected graph, n < 2, enumeration guard exceeded, non-tree input, ...
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally malformed linear program (index out of range, negative upper
// bound, size mismatch). Distinct from an Infeasible solve result.
class lp_error : public std::logic_error {
public:
    explicit lp_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace mdim
