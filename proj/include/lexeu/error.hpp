#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lexeu {

enum class ErrorKind {
    SpaceMismatch,
    EmptyEvent,
    CapExceeded,
    UnknownOutcome,
    UnknownState,
    ClassMismatch,
    NotSubset,
    NotNormalized,
    AtomGranularity,
    MalformedSystem,
    Unrepresentable,
    AxiomPrecheckFailed,
    VerificationFailed,
    IncompleteTable,
    InvalidModel,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/** Base of every error raised by the library. */
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

template <ErrorKind K>
class ErrorOf : public Error {
public:
    explicit ErrorOf(const std::string& what) : Error(K, what) {}
};

using SpaceMismatch = ErrorOf<ErrorKind::SpaceMismatch>;
using EmptyEvent = ErrorOf<ErrorKind::EmptyEvent>;
using UnknownOutcome = ErrorOf<ErrorKind::UnknownOutcome>;
using UnknownState = ErrorOf<ErrorKind::UnknownState>;
using ClassMismatch = ErrorOf<ErrorKind::ClassMismatch>;
using NotSubset = ErrorOf<ErrorKind::NotSubset>;
using NotNormalized = ErrorOf<ErrorKind::NotNormalized>;
using AtomGranularity = ErrorOf<ErrorKind::AtomGranularity>;
using MalformedSystem = ErrorOf<ErrorKind::MalformedSystem>;
using AxiomPrecheckFailed = ErrorOf<ErrorKind::AxiomPrecheckFailed>;
using IncompleteTable = ErrorOf<ErrorKind::IncompleteTable>;
using InvalidModel = ErrorOf<ErrorKind::InvalidModel>;
using ParseError = ErrorOf<ErrorKind::ParseError>;

/** An enumeration would exceed its configured cap; `required` is the size it would need. */
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::uint64_t required, std::uint64_t cap)
        : Error(ErrorKind::CapExceeded, what), required_(required), cap_(cap) {}
    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

}  // namespace lexeu
