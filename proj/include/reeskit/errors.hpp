#ifndef REESKIT_ERRORS_HPP
#define REESKIT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace reeskit {

enum class ErrorCode {
    ParseError,
    FieldMismatch,
    ArityMismatch,
    PreconditionViolation,
    DegenerateInput,
    MuNotOne,
    ShapeMismatch,
    NotSaturatedSuspect,
    DegenerateCurve,
    DegenerateSurface,
    CommonFactor,
    CrossCheckMismatch,
    ResourceLimit,
    InternalError,
    BadProblemFile,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::PreconditionViolation: return "PreconditionViolation";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::MuNotOne: return "MuNotOne";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::NotSaturatedSuspect: return "NotSaturatedSuspect";
        case ErrorCode::DegenerateCurve: return "DegenerateCurve";
        case ErrorCode::DegenerateSurface: return "DegenerateSurface";
        case ErrorCode::CommonFactor: return "CommonFactor";
        case ErrorCode::CrossCheckMismatch: return "CrossCheckMismatch";
        case ErrorCode::ResourceLimit: return "ResourceLimit";
        case ErrorCode::InternalError: return "InternalError";
        case ErrorCode::BadProblemFile: return "BadProblemFile";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

/// Raised when source text does not conform to the polynomial grammar or the
/// problem-file format. Positions are 1-based.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, int line, int column)
        : Error(ErrorCode::ParseError,
                what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/// The two degree-1 moving planes of a surface have a vanishing signed minor,
/// so the image has degree < 3 and the main construction does not apply. The
/// minors are carried in canonical text form; zero minors print as "0". Any
/// nonzero minor is a candidate low-degree implicit equation.
class DegenerateSurfaceError : public Error {
  public:
    DegenerateSurfaceError(const std::string& what, std::vector<std::string> minors)
        : Error(ErrorCode::DegenerateSurface, what), minors_(std::move(minors)) {}

    const std::vector<std::string>& minors() const { return minors_; }

  private:
    std::vector<std::string> minors_;
};

}  // namespace reeskit

#endif
