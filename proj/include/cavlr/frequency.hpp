// frequency.hpp — Complex probe frequency ω₊ = ω + iδ

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace cavlr {

using cxd = std::complex<double>;

// A real probe frequency plus a non-negative broadening. All retarded
// quantities are evaluated directly at ω₊ = ω + iδ.
struct ComplexFrequency {
    double omega{0.0};
    double delta{0.0};

    ComplexFrequency() = default;
    ComplexFrequency(double w, double d) : omega(w), delta(d) {
        if (d < 0.0) throw std::invalid_argument("ComplexFrequency: delta must be >= 0");
    }

    cxd value() const { return {omega, delta}; }
};

// On-resonance evaluations at δ = 0 produce a non-finite value instead of
// throwing, so pole scans can bracket sign changes around them.
inline bool is_singular(cxd z) {
    return !std::isfinite(z.real()) || !std::isfinite(z.imag());
}

} // namespace cavlr
