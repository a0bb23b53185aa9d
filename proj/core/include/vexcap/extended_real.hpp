#pragma once

#include <limits>
#include <stdexcept>

namespace vexcap::analysis {

/// Extended nonnegative real with an explicit infinity state (no sentinel
/// doubles).
class ExtReal {
public:
    static ExtReal finite(double v) { return ExtReal(false, v); }
    static ExtReal infinity() { return ExtReal(true, 0.0); }

    bool is_infinite() const { return inf_; }
    double value() const {
        if (inf_) throw std::logic_error("value() on infinite ExtReal");
        return v_;
    }
    // +infinity when infinite, else the finite value; for display only
    double as_double() const {
        return inf_ ? std::numeric_limits<double>::infinity() : v_;
    }

private:
    ExtReal(bool inf, double v) : inf_(inf), v_(v) {}
    bool inf_;
    double v_;
};

}  // namespace vexcap::analysis
