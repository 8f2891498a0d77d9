#pragma once

#include <stdexcept>
#include <string>

namespace wmk {

// Error taxonomy for the whole toolkit. The CLI maps categories to exit
// codes: input/validation problems -> 2, precision/tail failures -> 3.
struct Error : std::runtime_error {
    enum class Kind {
        Validation,   // bad input, schema violation, unsupported request
        Precision,    // result not certified at the working precision
        Internal,     // invariant violated (a bug, per the module contracts)
    };
    Kind kind;
    Error(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

struct WrongCharacteristic : Error {
    explicit WrongCharacteristic(const std::string& w = "operation requires positive characteristic")
        : Error(Kind::Validation, w) {}
};
struct NotInvertible : Error {
    explicit NotInvertible(const std::string& w = "series has no determinable valuation")
        : Error(Kind::Validation, w) {}
};
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& w = "working precision exhausted")
        : Error(Kind::Precision, w) {}
};
struct HenselConditionFailed : Error {
    explicit HenselConditionFailed(const std::string& w = "Hensel condition val(g(x0)) > 2 val(g'(x0)) fails")
        : Error(Kind::Validation, w) {}
};
struct NonIntegralRoot : Error {
    explicit NonIntegralRoot(const std::string& w = "q has no exact integer root of the required order")
        : Error(Kind::Validation, w) {}
};
struct DivergentEvaluation : Error {
    explicit DivergentEvaluation(const std::string& w = "a geometric denominator vanishes at this evaluation")
        : Error(Kind::Validation, w) {}
};
struct Unramified : Error {
    explicit Unramified(const std::string& w = "cover is unramified (empty Artin-Schreier data)")
        : Error(Kind::Validation, w) {}
};
struct NoRootOfUnity : Error {
    explicit NoRootOfUnity(const std::string& w = "base field lacks the required root of unity")
        : Error(Kind::Validation, w) {}
};
struct UnsupportedDegree : Error {
    explicit UnsupportedDegree(const std::string& w = "degree outside the implemented catalog")
        : Error(Kind::Validation, w) {}
};
struct UnsupportedTower : Error {
    explicit UnsupportedTower(const std::string& w = "factor tower outside the implemented catalog")
        : Error(Kind::Validation, w) {}
};
struct PseudoReflectionPresent : Error {
    explicit PseudoReflectionPresent(const std::string& w = "action contains a pseudo-reflection")
        : Error(Kind::Validation, w) {}
};
struct WildGroup : Error {
    explicit WildGroup(const std::string& w = "group order not prime to the characteristic")
        : Error(Kind::Validation, w) {}
};
struct GroupMismatch : Error {
    explicit GroupMismatch(const std::string& w = "action and cover group orders differ")
        : Error(Kind::Validation, w) {}
};
struct NonFreeDetected : Error {
    explicit NonFreeDetected(const std::string& w = "equivariant lattice is not free of the expected rank")
        : Error(Kind::Internal, w) {}
};
struct UndeterminedTail : Error {
    explicit UndeterminedTail(const std::string& w = "wild tail pattern did not stabilize")
        : Error(Kind::Precision, w) {}
};
struct SchemaError : Error {
    explicit SchemaError(const std::string& w) : Error(Kind::Validation, w) {}
};

}  // namespace wmk
