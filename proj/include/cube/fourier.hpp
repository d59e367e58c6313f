#pragma once

#include <vector>

#include "cube/bias.hpp"
#include "cube/function.hpp"

namespace cube {

/// Fourier-Walsh coefficients indexed by subset mask, taken against mu_p.
/// p is stored as a plain probability so that measures like mu_{1-p}
/// (needed by the dual-function identity) are representable too.
struct Spectrum {
    int n = 0;
    double p = 0.5;
    std::vector<double> coeffs;

    double operator()(Mask subset) const { return coeffs[subset]; }
    double& operator[](Mask subset) { return coeffs[subset]; }
};

/// u_S(T) = (-sqrt((1-p)/p))^|S cap T| * (sqrt(p/(1-p)))^|S \ T|.
double character(Mask subset, Mask point, double p);

/// Forward transform via n per-coordinate butterflies, O(n 2^n):
/// coeffs(S) = E_{mu_p}[f u_S].
Spectrum transform(const CubeFunction& f, double p);
Spectrum transform(const CubeFunction& f, const DyadicBias& bias);

/// f(T) = sum_S coeffs(S) u_S(T).
CubeFunction inverse_transform(const Spectrum& s);

/// sum_{|S|=d} coeffs(S)^2.
double level_weight(const Spectrum& s, int d);

/// Noise operator T_delta: coeffs(S) -> delta^|S| coeffs(S).
/// delta outside [0,1] is accepted (exploration), not an error.
Spectrum noise(const Spectrum& s, double delta);

/// (E_{mu_p} |f|^q)^(1/q), q >= 1 (real exponents allowed).
double q_norm(const CubeFunction& f, double q, double p);

}  // namespace cube
