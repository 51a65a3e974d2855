#include "hklab/errors.hpp"

namespace hklab {

const char* errc_name(errc code) {
    switch (code) {
        case errc::division_by_zero: return "DivisionByZero";
        case errc::invalid_characteristic: return "InvalidCharacteristic";
        case errc::ring_mismatch: return "RingMismatch";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::not_artinian: return "NotArtinian";
        case errc::invalid_frobenius_power: return "InvalidFrobeniusPower";
        case errc::not_gorenstein_quotient: return "NotGorensteinQuotient";
        case errc::insufficient_data: return "InsufficientData";
        case errc::invalid_pair: return "InvalidPair";
        case errc::hypothesis_violation: return "HypothesisViolation";
        case errc::invalid_subgroup: return "InvalidSubgroup";
        case errc::arithmetic_bug: return "ArithmeticBug";
        case errc::unknown_variable: return "UnknownVariable";
        case errc::syntax_error: return "SyntaxError";
        case errc::exponent_overflow: return "ExponentOverflow";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

}  // namespace hklab
