#include "lcseq/errors.hpp"

namespace lcseq {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::EvenCharacteristic: return "EvenCharacteristic";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::NotPrimitiveModulus: return "NotPrimitiveModulus";
        case Errc::NotPrimitive: return "NotPrimitive";
        case Errc::Overflow: return "Overflow";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::DelayOutOfRange: return "DelayOutOfRange";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::SingularMap: return "SingularMap";
        case Errc::OrbitDegenerate: return "OrbitDegenerate";
        case Errc::NoLift: return "NoLift";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::NotFound: return "NotFound";
        case Errc::PoleAtPlace: return "PoleAtPlace";
        case Errc::PrecondViolated: return "PrecondViolated";
        case Errc::MalformedFile: return "MalformedFile";
        case Errc::IoError: return "IoError";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace lcseq
