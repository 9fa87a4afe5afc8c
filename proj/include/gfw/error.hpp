#ifndef GFW_ERROR_HPP
#define GFW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gfw {

// Stable error codes; tests and the CLI match on these rather than on message text.
enum class Errc {
    NotPrime,
    ReduciblePolynomial,
    WrongDegree,
    UnsupportedSize,
    ZeroInverse,
    MixedFields,
    LengthMismatch,
    SingularSystem,
    MissingBasis,
    MissingPrimitive,
    EvenCharacteristic,
    OddCharacteristic,
    ShiftAtZero,
    NoSolution,
    ZeroSqueeze,
    MixedOrdering,
    DimensionMismatch,
    ProvenanceMismatch,
    IncompleteTomogram,
    NonPhysicalState,
    TooLarge,
    NotSorted,
    WrongLength,
    BasisMismatch,
    StateParse,
    NormZero,
    ConfigParse,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
        case Errc::WrongDegree: return "WrongDegree";
        case Errc::UnsupportedSize: return "UnsupportedSize";
        case Errc::ZeroInverse: return "ZeroInverse";
        case Errc::MixedFields: return "MixedFields";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::SingularSystem: return "SingularSystem";
        case Errc::MissingBasis: return "MissingBasis";
        case Errc::MissingPrimitive: return "MissingPrimitive";
        case Errc::EvenCharacteristic: return "EvenCharacteristic";
        case Errc::OddCharacteristic: return "OddCharacteristic";
        case Errc::ShiftAtZero: return "ShiftAtZero";
        case Errc::NoSolution: return "NoSolution";
        case Errc::ZeroSqueeze: return "ZeroSqueeze";
        case Errc::MixedOrdering: return "MixedOrdering";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::ProvenanceMismatch: return "ProvenanceMismatch";
        case Errc::IncompleteTomogram: return "IncompleteTomogram";
        case Errc::NonPhysicalState: return "NonPhysicalState";
        case Errc::TooLarge: return "TooLarge";
        case Errc::NotSorted: return "NotSorted";
        case Errc::WrongLength: return "WrongLength";
        case Errc::BasisMismatch: return "BasisMismatch";
        case Errc::StateParse: return "StateParse";
        case Errc::NormZero: return "NormZero";
        case Errc::ConfigParse: return "ConfigParse";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace gfw

#endif
