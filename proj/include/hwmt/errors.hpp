#ifndef HWMT_ERRORS_HPP
#define HWMT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hwmt {

/// Failure categories raised by the library. Every thrown hwmt::Error carries one.
enum class Errc {
    NotInteriorOrigin,
    NonLatticeDual,
    Degenerate,
    NotReflexive,
    NotPrime,
    BadDenominator,
    ExponentTooLarge,
    SingularMember,
    NotKernelPair,
    UnsupportedMonomial,
    UnknownFamily,
    NonHomogeneous,
    NonWeightedHomogeneous,
    NonIntegerOrbitSum,
    NonBihomogeneous,
    UncountableAmbient,
    PsiNotInvertible,
    TruncationOverrun,
    ZeroLeadingCoefficient,
    NotAPowerFunction,
    ZeroRescale,
    PoleAtZero,
    PoleAtInfinity,
    IrrationalEigenvalue,
    NoZeroExponent,
    NotMUMAtInfinity,
    NoPicardFuchs,
    ParseError,
    UnknownFormat,
    Overflow,
    InvalidArgument,
};

constexpr std::string_view to_string(Errc e) {
    switch (e) {
    case Errc::NotInteriorOrigin: return "NotInteriorOrigin";
    case Errc::NonLatticeDual: return "NonLatticeDual";
    case Errc::Degenerate: return "Degenerate";
    case Errc::NotReflexive: return "NotReflexive";
    case Errc::NotPrime: return "NotPrime";
    case Errc::BadDenominator: return "BadDenominator";
    case Errc::ExponentTooLarge: return "ExponentTooLarge";
    case Errc::SingularMember: return "SingularMember";
    case Errc::NotKernelPair: return "NotKernelPair";
    case Errc::UnsupportedMonomial: return "UnsupportedMonomial";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::NonHomogeneous: return "NonHomogeneous";
    case Errc::NonWeightedHomogeneous: return "NonWeightedHomogeneous";
    case Errc::NonIntegerOrbitSum: return "NonIntegerOrbitSum";
    case Errc::NonBihomogeneous: return "NonBihomogeneous";
    case Errc::UncountableAmbient: return "UncountableAmbient";
    case Errc::PsiNotInvertible: return "PsiNotInvertible";
    case Errc::TruncationOverrun: return "TruncationOverrun";
    case Errc::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case Errc::NotAPowerFunction: return "NotAPowerFunction";
    case Errc::ZeroRescale: return "ZeroRescale";
    case Errc::PoleAtZero: return "PoleAtZero";
    case Errc::PoleAtInfinity: return "PoleAtInfinity";
    case Errc::IrrationalEigenvalue: return "IrrationalEigenvalue";
    case Errc::NoZeroExponent: return "NoZeroExponent";
    case Errc::NotMUMAtInfinity: return "NotMUMAtInfinity";
    case Errc::NoPicardFuchs: return "NoPicardFuchs";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownFormat: return "UnknownFormat";
    case Errc::Overflow: return "Overflow";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

} // namespace hwmt

#endif
