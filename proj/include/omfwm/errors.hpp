// errors.hpp — Exception types shared by the library and the CLI

#pragma once

#include <stdexcept>
#include <string>

namespace omfwm {

// Structural violation of a parameter invariant (kappa_ex > kappa, negative rates, ...).
class InvalidParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parameters are structurally fine but the mechanical mode is anti-damped (gamma_eff <= 0).
class UnstableParameters : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Linear system too ill-conditioned to solve reliably.
class DegenerateSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace omfwm
