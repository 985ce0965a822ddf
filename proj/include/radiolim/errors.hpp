#pragma once

#include <stdexcept>
#include <string>

namespace radiolim {

// Base class for all library failures. CLI maps subclasses to exit codes.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid or inconsistent configuration input (bad JSON values, out-of-range
// parameters, malformed ensembles). CLI exit code 2.
struct config_error : error {
    using error::error;
};

// A constrained search finished without any point satisfying the constraint.
// Carries the least-violating point seen so callers can report it. CLI exit 3.
struct infeasible_error : error {
    infeasible_error(const std::string& msg, int alphabet, double base, double amplitude,
                     double best_objective)
        : error(msg), alphabet_size(alphabet), signal_base(base), amplitude(amplitude),
          objective(best_objective) {}
    int alphabet_size;
    double signal_base;
    double amplitude;
    double objective;
};

// Arguments outside a routine's mathematical domain (negative power, duration
// scale at or past -1, probabilities outside [0,1]). CLI exit 4.
struct domain_error : error {
    using error::error;
};

// Internal numerical failure: a quadrature self-check or iteration that did
// not converge to its documented tolerance. CLI exit 4.
struct numerical_error : error {
    using error::error;
};

} // namespace radiolim
