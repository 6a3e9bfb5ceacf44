#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace v3conf {

enum class ErrorKind {
    UnknownSymbol,
    TokenLength,
    ValidationFailed,
    PointCountMismatch,
    TooManyPoints,
    MalformedJson,
    NotCubic,
    NotBipartite,
    GirthTooSmall,
    UnequalSides,
    InfeasiblePair,
    NoSuchSeed,
    NoTenCycle,
    BadCycle,
    PostconditionFailed,
    NoSuchConfiguration,
    NTooSmall,
    InvalidTriple,
    Disconnected,
    UnsupportedV,
    VTooSmall,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::TokenLength: return "TokenLength";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::PointCountMismatch: return "PointCountMismatch";
    case ErrorKind::TooManyPoints: return "TooManyPoints";
    case ErrorKind::MalformedJson: return "MalformedJson";
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::GirthTooSmall: return "GirthTooSmall";
    case ErrorKind::UnequalSides: return "UnequalSides";
    case ErrorKind::InfeasiblePair: return "InfeasiblePair";
    case ErrorKind::NoSuchSeed: return "NoSuchSeed";
    case ErrorKind::NoTenCycle: return "NoTenCycle";
    case ErrorKind::BadCycle: return "BadCycle";
    case ErrorKind::PostconditionFailed: return "PostconditionFailed";
    case ErrorKind::NoSuchConfiguration: return "NoSuchConfiguration";
    case ErrorKind::NTooSmall: return "NTooSmall";
    case ErrorKind::InvalidTriple: return "InvalidTriple";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::UnsupportedV: return "UnsupportedV";
    case ErrorKind::VTooSmall: return "VTooSmall";
    }
    return "Unknown";
}

/// Domain failure raised by every operation in the library. The kind is
/// stable and meant for programmatic dispatch; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace v3conf
