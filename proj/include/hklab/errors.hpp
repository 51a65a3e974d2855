#pragma once

#include <stdexcept>
#include <string>

namespace hklab {

// Machine-readable failure categories. The CLI maps these onto exit codes
// and JSON error records, so names are stable.
enum class errc {
    division_by_zero,
    invalid_characteristic,
    ring_mismatch,
    budget_exceeded,
    not_artinian,
    invalid_frobenius_power,
    not_gorenstein_quotient,
    insufficient_data,
    invalid_pair,
    hypothesis_violation,
    invalid_subgroup,
    arithmetic_bug,
    unknown_variable,
    syntax_error,
    exponent_overflow,
    invalid_argument,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hklab
