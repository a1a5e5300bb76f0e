#pragma once

#include <stdexcept>
#include <string>

namespace heartbox {

// Domain error taxonomy. Codes map to CLI exit status: domain errors exit 1,
// malformed input / usage exits 2.
enum class Errc {
    FieldMismatch,
    AlgebraMismatch,
    NotAssociative,
    UnitLawFails,
    CharTooSmall,
    SplitFailure,
    NoCover,
    DepthExceeded,
    NotCommutative,
    NotFrobenius,
    CatalogRequired,
    NoNonzeroTau,
    BadPrime,
    CharTwo,
    Internal,
    BadInput,
    Io,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

    // 1 for domain errors, 2 for malformed input.
    int exit_code() const { return (code_ == Errc::BadInput || code_ == Errc::Io) ? 2 : 1; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void check(bool ok, Errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace heartbox
