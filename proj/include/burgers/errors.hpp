#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burgers {

/// Invalid parameters or configuration (CLI exit code 3).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two fields or meshes that cannot be combined.
class MeshMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Linear solver breakdown: zero pivot or singular rank-one correction.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A time step produced a non-finite nodal value.
class StepFailure : public std::runtime_error {
public:
    StepFailure(std::size_t node, double time)
        : std::runtime_error("non-finite value at node " + std::to_string(node) +
                             " after step ending at t=" + std::to_string(time)),
          node_(node),
          time_(time) {}

    std::size_t node() const noexcept { return node_; }
    double time() const noexcept { return time_; }

private:
    std::size_t node_;
    double time_;
};

/// Characteristics root-finding used outside its pre-shock validity range,
/// or failed to converge.
class ReferenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Output file could not be written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace burgers
