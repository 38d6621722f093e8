// errors.hpp - exception hierarchy for the rhzeta library
#pragma once

#include <stdexcept>
#include <string>

namespace rhz {

// Root of everything the library throws on purpose. `kind()` is a stable,
// machine-readable name used by the CLI diagnostics.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define RHZ_DEFINE_ERROR(Name, Base)                              \
    class Name : public Base {                                    \
    public:                                                       \
        using Base::Base;                                         \
        const char* kind() const noexcept override { return #Name; } \
    }

// Input validation.
RHZ_DEFINE_ERROR(InvalidParameter, Error);
RHZ_DEFINE_ERROR(DimensionMismatch, Error);
RHZ_DEFINE_ERROR(DegenerateInput, Error);

// Numerical failures.
RHZ_DEFINE_ERROR(NumericalError, Error);
RHZ_DEFINE_ERROR(DisconnectedChain, NumericalError);
RHZ_DEFINE_ERROR(Breakdown, NumericalError);
RHZ_DEFINE_ERROR(ConvergenceFailure, NumericalError);
RHZ_DEFINE_ERROR(StepTooLarge, NumericalError);

// Zeta oracle evaluated outside Re s > 1.
RHZ_DEFINE_ERROR(OutOfDomain, Error);

// Hardware mapping.
RHZ_DEFINE_ERROR(InfeasibleDesign, Error);
RHZ_DEFINE_ERROR(CouplingTooStrong, InfeasibleDesign);
RHZ_DEFINE_ERROR(TiltInfeasible, InfeasibleDesign);
RHZ_DEFINE_ERROR(BendRadiusTooSmall, InfeasibleDesign);

#undef RHZ_DEFINE_ERROR

}  // namespace rhz
