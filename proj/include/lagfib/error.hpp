#pragma once

#include <stdexcept>
#include <string>

namespace lagfib {

// Base of every error raised by the library. `kind()` is the stable
// identifier printed by the CLI.
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define LAGFIB_DEFINE_ERROR(Name)                                            \
    class Name : public error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : error(#Name, what) {}       \
    };

// graded_ring
LAGFIB_DEFINE_ERROR(DuplicateGenerator)
LAGFIB_DEFINE_ERROR(InvalidWeight)
LAGFIB_DEFINE_ERROR(UnknownGenerator)
LAGFIB_DEFINE_ERROR(RingMismatch)
LAGFIB_DEFINE_ERROR(NonUnitConstantTerm)
LAGFIB_DEFINE_ERROR(NonZeroConstantTerm)
LAGFIB_DEFINE_ERROR(WeightMismatch)
LAGFIB_DEFINE_ERROR(ParseError)

// fibration_formulas
LAGFIB_DEFINE_ERROR(NotPerfectPower)
LAGFIB_DEFINE_ERROR(NegativeEvenRoot)
LAGFIB_DEFINE_ERROR(NonPositiveInput)
LAGFIB_DEFINE_ERROR(InvalidPolarization)

// intersection_products
LAGFIB_DEFINE_ERROR(InvalidSurface)
LAGFIB_DEFINE_ERROR(NonIntegerResult)

// fourfold_enumerator
LAGFIB_DEFINE_ERROR(NotInGuanTable)
LAGFIB_DEFINE_ERROR(EmptyCensus)

#undef LAGFIB_DEFINE_ERROR

} // namespace lagfib
