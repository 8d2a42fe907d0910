#pragma once

#include <stdexcept>
#include <string>

namespace fusion2s {

// Base class of all errors thrown by the library. name() is the stable
// identifier used for CLI diagnostics and exit-code mapping.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define FUSION2S_DEFINE_ERROR(ClassName)                \
    class ClassName : public Error {                    \
    public:                                             \
        explicit ClassName(const std::string& message)  \
            : Error(#ClassName, message) {}             \
    }

FUSION2S_DEFINE_ERROR(InputError);           // arity/membership/parse problems
FUSION2S_DEFINE_ERROR(SizeError);            // size cap exceeded
FUSION2S_DEFINE_ERROR(WellDefinednessError); // coefficients not defined on residue classes
FUSION2S_DEFINE_ERROR(QuadraticityError);    // q(m*g) != q(g)^{m^2}
FUSION2S_DEFINE_ERROR(BilinearityError);     // polarization fails bi-additivity
FUSION2S_DEFINE_ERROR(ExistenceError);       // module braiding requested outside the center
FUSION2S_DEFINE_ERROR(CrossCheckError);      // independent criteria disagree
FUSION2S_DEFINE_ERROR(InvariantViolation);   // internal consistency failure
FUSION2S_DEFINE_ERROR(OracleUnavailable);    // no bicharacter realizes the form

#undef FUSION2S_DEFINE_ERROR

}  // namespace fusion2s
