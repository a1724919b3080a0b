#pragma once

#include <stdexcept>
#include <string>

namespace swplace {

// Input file could not be parsed (JSON, edge list, hardware config).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// More logical cores than physical slots, or a core over its neuron budget
// where that is a hard failure rather than a reported violation.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Cross-referenced data is inconsistent (placement refers to unknown
// neurons/edges, slot out of range, non-injective slot map, ...).
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem-level failure (missing file, unwritable path).
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace swplace
