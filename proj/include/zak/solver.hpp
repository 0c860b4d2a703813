#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zak/field.hpp"

namespace zak {

/// (u0, n0, n1) in H^1 x L^2 x H^-1 roles; n0, n1 real-valued, physical space.
struct InitialData {
    RadialField u0;
    RadialField n0;
    RadialField n1;
};

/// First-order system state in frequency space: u and N = n - i D^{-1} n_t / alpha.
struct SimState {
    double t = 0.0;
    RadialField u_hat;
    RadialField N_hat;
    double alpha = 1.0;
};

enum class Nonlinearity {
    full,           // n u with n = Re N (conserves mass and energy)
    simplified_nu,  // N u, the convention of the integral equations
};

struct StepperConfig {
    double dt = 1e-3;
    double T = 1.0;
    int sample_every = 1;
    Nonlinearity nonlinearity = Nonlinearity::full;
    bool nonlinear_enabled = true;
};

struct DiagRow {
    double t = 0.0;
    double mass = 0.0;
    double energy = 0.0;
    double tail_mass = 0.0;  // fraction of u-mass in r > 0.9 R
};

struct TimeSeries {
    std::vector<SimState> states;
    std::vector<DiagRow> diag;
    bool diverged = false;  // set when a step produced non-finite values;
                            // states then end at the last good sample
};

/// N = n0 - i D^{-1} n1 / alpha; preserves ||n0||^2 + ||D^{-1}n1||^2/alpha^2 = ||N||^2.
SimState reduce_to_first_order(const InitialData& d, double alpha);

/// Inverse of the reduction: n = Re N, n_t = -alpha D Im N. Returns real
/// physical fields (imaginary residue discarded after the realness check).
std::pair<RadialField, RadialField> recover_wave_fields(const RadialField& N_hat, double alpha);

/// One Strang step: half linear flow, exact nonlinear flow, half linear flow.
/// The full nonlinear substep is exact: n = Re N is frozen by the structure of
/// the equations, so u rotates pointwise and N picks up -i dt alpha D|u|^2.
SimState strang_step(const SimState& s, double dt,
                     Nonlinearity nl = Nonlinearity::full, bool nonlinear = true);

TimeSeries simulate(const InitialData& d, double alpha, const StepperConfig& cfg);

double mass(const SimState& s);
double energy(const SimState& s);
double tail_mass_fraction(const SimState& s);

/// ||u0||_{H^1} + ||n0||_{L^2} + ||n1||_{H^-1(hom)}.
double triple_norm(const InitialData& d);

/// Radial data families normalized so triple_norm == eps0. shell_k is used by
/// the shell_bump family.
InitialData initial_data_family(const std::string& name, const GridPtr& grid, double eps0,
                                int shell_k = 2);

}  // namespace zak
