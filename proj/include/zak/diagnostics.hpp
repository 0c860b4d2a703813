#pragma once

#include <utility>
#include <vector>

#include "zak/solver.hpp"

namespace zak {

enum class Component { u, N };

/// Free profiles u_- = S(-t)u(t), N_- = W_alpha(-t)N(t) (frequency space).
std::pair<RadialField, RadialField> pullback(const SimState& s);

/// Pairwise pullback distances over sampled times in [t_a, t_b];
/// u is measured in H^1, N in L^2.
struct CauchyTable {
    std::vector<double> times;
    std::vector<std::vector<double>> dist;  // symmetric, zero diagonal
};

CauchyTable cauchy_tail(const TimeSeries& series, Component comp, double t_a, double t_b);

/// Max table entry among pairs drawn from [t_a, t_b].
double cauchy_window_max(const CauchyTable& table, double t_a, double t_b);

struct NormSpec {
    Component component = Component::u;
    double time_exponent = 2.0;  // 1, 2, or inf
    enum class SpatialKind { lebesgue, besov, sobolev } kind = SpatialKind::lebesgue;
    double s = 0.0;
    double p = 2.0;
    bool bracket_D = false;  // apply <D> before taking the spatial norm
    double t_a = 0.0;
    double t_b = 0.0;
};

/// Mixed space-time norm over the sampled window, trapezoid in time.
double strichartz_norm(const TimeSeries& series, const NormSpec& spec);

/// Resolution-space norm: L^inf/L^2-in-time energy and Strichartz pieces for
/// <D>u and N, summed.
double x_norm(const TimeSeries& series, double eps, double t_a, double t_b);

/// (||Omega(N,u)||_{H^1}, ||D OmegaTilde(u,u)||_{L^2}) at one state.
std::pair<double, double> boundary_term_norms(const SimState& s);

struct DuhamelResult {
    double r_u = 0.0;  // H^1 residual of the u integral equation
    double r_N = 0.0;  // L^2 residual of the N integral equation
};

/// Residuals of the normal-form integral equations at t = t_end, evaluated on
/// a fresh simulation with the Nu nonlinearity convention (strict mode) at
/// step dt and sampling stride `stride`.
DuhamelResult duhamel_residual(const InitialData& d, double alpha, double dt, int stride,
                               double t_end);

}  // namespace zak
