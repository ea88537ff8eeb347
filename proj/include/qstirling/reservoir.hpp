#pragma once

#include <cmath>
#include <stdexcept>

namespace qstirling {

// A heat bath in natural units (k_B = hbar = 1). A purely thermal bath has
// squeeze_r = 0; the squeeze phase never enters any steady-state quantity
// but is carried so the oracle can verify that.
struct Reservoir {
    double temperature = 1.0;
    double squeeze_r = 0.0;
    double squeeze_phi = 0.0;

    void validate() const {
        if (!(temperature > 0.0)) throw std::domain_error("Reservoir: temperature must be > 0");
        if (!(squeeze_r >= 0.0)) throw std::domain_error("Reservoir: squeeze_r must be >= 0");
    }

    bool is_thermal() const { return squeeze_r == 0.0; }

    static Reservoir thermal(double temperature) { return Reservoir{temperature, 0.0, 0.0}; }
    static Reservoir squeezed(double temperature, double r, double phi = 0.0) {
        return Reservoir{temperature, r, phi};
    }
};

// Mean quanta of a mode of frequency omega in a thermal bath at temperature T.
inline double thermal_occupation(double omega, double temperature) {
    if (!(omega > 0.0)) throw std::domain_error("thermal_occupation: omega must be > 0");
    if (!(temperature > 0.0)) throw std::domain_error("thermal_occupation: temperature must be > 0");
    return 1.0 / std::expm1(omega / temperature);
}

// Effective occupancies imprinted by a squeezed thermal bath:
//   N = n cosh(2r) + sinh^2(r),  |M| = cosh(r) sinh(r) (2n + 1).
struct Occupancy {
    double n = 0.0;
    double big_n = 0.0;
    double m_mag = 0.0;
};

inline Occupancy squeezed_occupancy(double omega, const Reservoir& res) {
    res.validate();
    const double n = thermal_occupation(omega, res.temperature);
    const double r = res.squeeze_r;
    Occupancy occ;
    occ.n = n;
    occ.big_n = n * std::cosh(2.0 * r) + std::sinh(r) * std::sinh(r);
    occ.m_mag = std::cosh(r) * std::sinh(r) * (2.0 * n + 1.0);
    return occ;
}

// S_r = sech(2r) and S_2r = sech(4r). The second follows the S_x = sech(2x)
// naming pattern; the 4r reading is the one used throughout.
struct SqueezeFactors {
    double s_r = 1.0;
    double s_2r = 1.0;
};

inline SqueezeFactors squeeze_factors(double r) {
    if (!(r >= 0.0)) throw std::domain_error("squeeze_factors: r must be >= 0");
    return SqueezeFactors{1.0 / std::cosh(2.0 * r), 1.0 / std::cosh(4.0 * r)};
}

}  // namespace qstirling
