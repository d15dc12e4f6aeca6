#ifndef HERMSPACE_ERRORS_HPP
#define HERMSPACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hws {

// Input violates a documented precondition (argument out of domain).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested quantity diverges (infinite trace, divergent criterion series).
class divergence_error : public domain_error {
public:
    explicit divergence_error(const std::string& msg) : domain_error(msg) {}
};

// Malformed input document (JSON spec, rule CSV).
class schema_error : public std::runtime_error {
public:
    explicit schema_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parameter combination not covered by any implemented characterization.
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An iterative numerical routine failed to reach its target accuracy.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hws

#endif
