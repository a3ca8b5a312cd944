#ifndef QDOT_ERRORS_HPP
#define QDOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qdot {

/// Invalid physical or numerical input (out-of-range parameter, bad index).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Invalid run configuration (grid too coarse, malformed config file).
class config_error : public std::invalid_argument {
public:
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Numerical failure inside a solver or optimizer.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

/// A requested design cannot satisfy its constraints; carries the diagnosis.
class infeasible_error : public std::runtime_error {
public:
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

/// Output sink could not be written.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qdot

#endif
