// channel.hpp — One induced-interaction channel (a cavity mode or a static collective term)

#pragma once

#include <stdexcept>

namespace cavlr {

// Parameters of one induced interaction V_ind,k(ω). A cavity mode has
// lambda > 0; a purely static collective term (such as the −2J channel of the
// LMG models) has lambda = 0 and lives entirely in static_shift.
struct InteractionChannel {
    double lambda{0.0};       // collective coupling λ
    double cavity_freq{1.0};  // Ω
    double zeta{0.0};         // P² toggle; arbitrary real allowed
    double static_shift{0.0}; // frequency-independent addition (e.g. −2J)

    InteractionChannel() = default;
    InteractionChannel(double lam, double freq, double z = 0.0, double shift = 0.0)
        : lambda(lam), cavity_freq(freq), zeta(z), static_shift(shift) {
        if (freq <= 0.0) throw std::invalid_argument("InteractionChannel: cavity_freq must be > 0");
        if (lam < 0.0) throw std::invalid_argument("InteractionChannel: lambda must be >= 0");
    }

    bool is_static() const { return lambda == 0.0; }

    // ω = 0 value, the strength entering the mean-field problem
    double static_value() const {
        return 2.0 * lambda * lambda * (zeta - 1.0) / cavity_freq + static_shift;
    }
};

} // namespace cavlr
