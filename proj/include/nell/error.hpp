#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nell {

enum class Errc {
    InvalidArgument,
    CarrierMismatch,
    UnsupportedCarrier,
    NotInvertible,
    ZeroInput,
    ArityMismatch,
    ArityTooSmall,
    InfiniteCarrierWithoutWindow,
    InfiniteCarrier,
    NotAUnit,
    EmptyIdeal,
    NotAnIdeal,
    BadModulus,
    NoAbsorbingElement,
    UnitInput,
    AbsorbingInput,
    BadGenerator,
    NotPrimeElement,
    InvalidSeed,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace nell
