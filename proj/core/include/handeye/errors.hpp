#pragma once

#include <stdexcept>
#include <string>

namespace handeye {

// Invalid configuration, manifest, or command usage. Maps to exit code 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// I/O failures: unreadable files, corrupt containers, unwritable paths.
// Maps to exit code 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated runtime contract (non-finite loss, stepping a finished episode,
// shape mismatches). Maps to exit code 2.
struct RuntimeFault : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace handeye
