#pragma once

#include <stdexcept>
#include <string>

namespace dynavid {

/// Invalid sampler or policy configuration (empty ranges, zero bases, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid call argument (zero frames, length mismatch, ...).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed on-disk data (bad magic, missing frame index, ...).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem / codec failure, carries the offending path in the message.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dynavid
