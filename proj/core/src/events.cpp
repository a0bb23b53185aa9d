#include "vexcap/events.hpp"

#include <stdexcept>

#include "vexcap/variation.hpp"

namespace vexcap::game {

bool not_constant(const paths::SampledPath& path) {
    return !paths::is_constant(path);
}

bool event_var_below(const paths::SampledPath& path, double p, double C,
                     double A) {
    if (!(p >= 1.0)) throw std::domain_error("p must be >= 1");
    if (!(C > 0.0) || !(A > 0.0))
        throw std::invalid_argument("C and A must be positive");
    double v = analysis::var_p(path, p).value.value();
    return v < C && paths::sup_abs(path) > A;
}

bool event_var_large(const paths::SampledPath& path, double p, double A,
                     double V) {
    if (!(p >= 1.0)) throw std::domain_error("p must be >= 1");
    if (!(A > 0.0) || !(V > 0.0))
        throw std::invalid_argument("A and V must be positive");
    double v = analysis::var_p(path, p).value.value();
    return v >= V && paths::sup_abs(path) < A;
}

}  // namespace vexcap::game
