#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nfd {

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingCheckpointError : IoError {
    using IoError::IoError;
};

/// Malformed binary file; carries the byte offset of the defect.
struct FormatError : std::runtime_error {
    std::size_t offset;
    FormatError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (offset " + std::to_string(off) + ")"), offset(off) {}
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TrainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nfd
