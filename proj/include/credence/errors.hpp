#pragma once

#include <stdexcept>
#include <string>

namespace credence {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad references, violated type invariants, unknown labels.
struct StructuralError : Error {
    using Error::Error;
};

/// Text input could not be parsed. `line` is 1-based, 0 when not applicable.
struct ParseError : Error {
    int line = 0;
    explicit ParseError(const std::string& msg, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

/// A set of joint probabilities exceeds its marginal bound (sum > 1, joint > marginal).
struct InvalidDecompositionError : Error {
    using Error::Error;
};

/// Conditioning on an event of probability zero.
struct NullEvidenceError : Error {
    using Error::Error;
};

/// Certainties (p = 0 or p = 1) have no finite odds representation.
struct CertaintyOddsError : Error {
    using Error::Error;
};

/// Input exceeds a documented scale cap.
struct CapacityError : Error {
    using Error::Error;
};

/// A case corpus is empty or lacks a litigation stage entirely.
struct DegenerateCorpusError : Error {
    using Error::Error;
};

} // namespace credence
