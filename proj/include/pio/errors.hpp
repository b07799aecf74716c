#pragma once

#include <stdexcept>
#include <string>

namespace pio {

// Incompatible shapes in a matrix or subspace operation. The message always
// carries both offending shapes (or the offending field for file input).
class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

// Block-count parameter l of a block-bidiagonal matrix must be >= 1.
class InvalidL : public std::invalid_argument {
public:
    explicit InvalidL(const std::string& msg) : std::invalid_argument(msg) {}
};

// A matrix required to be nilpotent is not.
class NotNilpotent : public std::invalid_argument {
public:
    explicit NotNilpotent(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed input file; the message names the offending field.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two criteria that are provably equivalent disagreed. Signals an
// implementation bug, never a valid analysis outcome.
class InternalInconsistency : public std::logic_error {
public:
    explicit InternalInconsistency(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace pio
