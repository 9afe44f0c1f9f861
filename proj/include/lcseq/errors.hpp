#pragma once

#include <stdexcept>
#include <string>

namespace lcseq {

/// Error categories used across the library. Each maps to one failure mode
/// of a documented operation contract.
enum class Errc {
    NotPrime,
    EvenCharacteristic,
    ReducibleModulus,
    NotPrimitiveModulus,
    NotPrimitive,
    Overflow,
    OutOfRange,
    DivisionByZero,
    DelayOutOfRange,
    LengthMismatch,
    SingularMap,
    OrbitDegenerate,
    NoLift,
    NotIrreducible,
    NotFound,
    PoleAtPlace,
    PrecondViolated,
    MalformedFile,
    IoError,
    Internal,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace lcseq
