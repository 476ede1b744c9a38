#pragma once

#include <stdexcept>
#include <string>

namespace npr {

enum class ErrorCode {
    InvalidArgument,
    Io,
    Parse,
    EmptyInput,
    EmptyMesh,
    EmptyScene,
    DegenerateInput,
    Numerical,
    Checkpoint,
    UndefinedDistanceField,
};

/// Exception carrying a stable error code; the C API maps codes to npr_status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "invalid_argument";
        case ErrorCode::Io: return "io";
        case ErrorCode::Parse: return "parse";
        case ErrorCode::EmptyInput: return "empty_input";
        case ErrorCode::EmptyMesh: return "empty_mesh";
        case ErrorCode::EmptyScene: return "empty_scene";
        case ErrorCode::DegenerateInput: return "degenerate_input";
        case ErrorCode::Numerical: return "numerical";
        case ErrorCode::Checkpoint: return "checkpoint";
        case ErrorCode::UndefinedDistanceField: return "undefined_distance_field";
    }
    return "unknown";
}

}  // namespace npr
