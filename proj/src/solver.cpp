#include "zak/solver.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zak/littlewood_paley.hpp"
#include "zak/transform.hpp"

namespace zak {

namespace {

constexpr double kPi = std::numbers::pi;

// ||f||_{L^2}^2 evaluated from frequency samples (discrete Plancherel).
double freq_l2_sq(const RadialField& fhat) {
    const RadialGrid& g = *fhat.grid;
    double s = 0.0;
    for (int m = 0; m < g.N; ++m) s += std::norm(fhat.values[m]) * g.rho[m] * g.rho[m];
    return s * g.drho / (2.0 * kPi * kPi);
}

}  // namespace

SimState reduce_to_first_order(const InitialData& d, double alpha) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("reduce_to_first_order: alpha must be positive");
    require_space(d.u0, Space::physical, "reduce_to_first_order");
    require_space(d.n0, Space::physical, "reduce_to_first_order");
    require_space(d.n1, Space::physical, "reduce_to_first_order");
    SimState s;
    s.t = 0.0;
    s.alpha = alpha;
    s.u_hat = forward_transform(d.u0);
    RadialField n0h = forward_transform(d.n0);
    RadialField n1h = forward_transform(d.n1);
    s.N_hat = make_field(d.n0.grid, Space::frequency);
    const RadialGrid& g = *d.n0.grid;
    for (int m = 0; m < g.N; ++m)
        s.N_hat.values[m] = n0h.values[m] - cplx{0.0, 1.0} * n1h.values[m] / (g.rho[m] * alpha);
    return s;
}

std::pair<RadialField, RadialField> recover_wave_fields(const RadialField& N_hat, double alpha) {
    require_space(N_hat, Space::frequency, "recover_wave_fields");
    RadialField N_phys = inverse_transform(N_hat);
    const RadialGrid& g = *N_hat.grid;
    RadialField n = make_field(N_hat.grid, Space::physical);
    RadialField im = make_field(N_hat.grid, Space::physical);
    for (int j = 0; j < g.N; ++j) {
        n.values[j] = cplx{N_phys.values[j].real(), 0.0};
        im.values[j] = cplx{N_phys.values[j].imag(), 0.0};
    }
    RadialField ndot_hat = forward_transform(im);
    for (int m = 0; m < g.N; ++m) ndot_hat.values[m] *= -alpha * g.rho[m];
    RadialField ndot = inverse_transform(ndot_hat);
    for (cplx& v : ndot.values) v = cplx{v.real(), 0.0};
    return {std::move(n), std::move(ndot)};
}

SimState strang_step(const SimState& s, double dt, Nonlinearity nl, bool nonlinear) {
    SimState out = s;
    out.t = s.t + dt;
    out.u_hat = schrodinger_propagate(s.u_hat, 0.5 * dt);
    out.N_hat = wave_propagate(s.N_hat, 0.5 * dt, s.alpha);

    if (nonlinear) {
        const RadialGrid& g = *s.u_hat.grid;
        RadialField u = inverse_transform(out.u_hat);
        RadialField N = inverse_transform(out.N_hat);
        RadialField absu2 = make_field(s.u_hat.grid, Space::physical);
        if (nl == Nonlinearity::full) {
            // n = Re N is frozen across the substep; |u| is invariant.
            for (int j = 0; j < g.N; ++j) {
                absu2.values[j] = cplx{std::norm(u.values[j]), 0.0};
                u.values[j] *= std::polar(1.0, -N.values[j].real() * dt);
            }
        } else {
            // frozen-N exponential for the Nu convention; |u| is not invariant,
            // so feed the substep-averaged |u|^2 into the wave forcing
            for (int j = 0; j < g.N; ++j) {
                const cplx u_new = u.values[j] * std::exp(cplx{0.0, -1.0} * N.values[j] * dt);
                absu2.values[j] =
                    cplx{0.5 * (std::norm(u.values[j]) + std::norm(u_new)), 0.0};
                u.values[j] = u_new;
            }
        }
        out.u_hat = forward_transform(u);
        RadialField w_hat = forward_transform(absu2);
        for (int m = 0; m < g.N; ++m)
            out.N_hat.values[m] -= cplx{0.0, 1.0} * dt * s.alpha * g.rho[m] * w_hat.values[m];
    }

    out.u_hat = schrodinger_propagate(out.u_hat, 0.5 * dt);
    out.N_hat = wave_propagate(out.N_hat, 0.5 * dt, s.alpha);
    if (!all_finite(out.u_hat) || !all_finite(out.N_hat))
        throw std::runtime_error("strang_step: solution diverged (non-finite values)");
    return out;
}

double mass(const SimState& s) { return std::sqrt(freq_l2_sq(s.u_hat)); }

double energy(const SimState& s) {
    const RadialGrid& g = *s.u_hat.grid;
    double grad_sq = 0.0, N_sq = 0.0;
    for (int m = 0; m < g.N; ++m) {
        const double w = g.rho[m] * g.rho[m];
        grad_sq += std::norm(s.u_hat.values[m]) * w * g.rho[m] * g.rho[m];
        N_sq += std::norm(s.N_hat.values[m]) * w;
    }
    const double c = g.drho / (2.0 * kPi * kPi);
    grad_sq *= c;
    N_sq *= c;
    RadialField u = inverse_transform(s.u_hat);
    RadialField N = inverse_transform(s.N_hat);
    double coupling = 0.0;
    for (int j = 0; j < g.N; ++j)
        coupling += N.values[j].real() * std::norm(u.values[j]) * g.r[j] * g.r[j];
    coupling *= 4.0 * kPi * g.dr;
    return grad_sq + 0.5 * N_sq - coupling;
}

double tail_mass_fraction(const SimState& s) {
    const RadialGrid& g = *s.u_hat.grid;
    RadialField u = inverse_transform(s.u_hat);
    double total = 0.0, tail = 0.0;
    for (int j = 0; j < g.N; ++j) {
        const double w = std::norm(u.values[j]) * g.r[j] * g.r[j];
        total += w;
        if (g.r[j] > 0.9 * g.R) tail += w;
    }
    return total > 0.0 ? tail / total : 0.0;
}

TimeSeries simulate(const InitialData& d, double alpha, const StepperConfig& cfg) {
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("simulate: dt must be positive");
    if (cfg.T < 0.0) throw std::invalid_argument("simulate: T must be nonnegative");
    if (cfg.sample_every < 1) throw std::invalid_argument("simulate: sample_every must be >= 1");

    TimeSeries series;
    SimState s = reduce_to_first_order(d, alpha);
    auto record = [&](const SimState& st) {
        series.states.push_back(st);
        series.diag.push_back({st.t, mass(st), energy(st), tail_mass_fraction(st)});
    };
    record(s);
    const long nsteps = std::lround(cfg.T / cfg.dt);
    for (long step = 1; step <= nsteps; ++step) {
        try {
            s = strang_step(s, cfg.dt, cfg.nonlinearity, cfg.nonlinear_enabled);
        } catch (const std::runtime_error&) {
            series.diverged = true;
            return series;
        }
        if (step % cfg.sample_every == 0 || step == nsteps) record(s);
    }
    return series;
}

double triple_norm(const InitialData& d) {
    return sobolev_norm(d.u0, 1.0, 2.0) + lebesgue_norm(d.n0, 2.0) +
           homogeneous_sobolev_norm(d.n1, -1.0);
}

InitialData initial_data_family(const std::string& name, const GridPtr& grid, double eps0,
                                int shell_k) {
    if (!(eps0 > 0.0))
        throw std::invalid_argument("initial_data_family: eps0 must be positive");
    const RadialGrid& g = *grid;
    InitialData d;
    d.u0 = make_field(grid, Space::physical);
    d.n0 = make_field(grid, Space::physical);
    d.n1 = make_field(grid, Space::physical);
    if (name == "gaussian") {
        for (int j = 0; j < g.N; ++j) {
            const double r = g.r[j];
            d.u0.values[j] = std::exp(-0.5 * r * r);
            d.n0.values[j] = std::exp(-r * r);
            d.n1.values[j] = r * std::exp(-r * r);
        }
    } else if (name == "shell_bump") {
        RadialField bump = make_field(grid, Space::frequency);
        for (int m = 0; m < g.N; ++m) bump.values[m] = chi_k(g.rho[m], shell_k);
        d.u0 = inverse_transform(bump);
        d.n0 = d.u0;
        for (cplx& v : d.n0.values) v = cplx{v.real(), 0.0};
        d.u0 = d.n0;
        // n1 left zero
    } else if (name == "two_bump") {
        const double c1 = 0.1 * g.R, c2 = 0.2 * g.R;
        for (int j = 0; j < g.N; ++j) {
            const double r = g.r[j];
            d.u0.values[j] = std::exp(-4.0 * (r - c1) * (r - c1)) +
                             std::exp(-4.0 * (r - c2) * (r - c2));
            d.n0.values[j] = std::exp(-4.0 * (r - c1) * (r - c1));
            d.n1.values[j] = std::exp(-4.0 * (r - c2) * (r - c2));
        }
    } else {
        throw std::invalid_argument("initial_data_family: unknown family '" + name + "'");
    }
    const double base = triple_norm(d);
    const double scale = eps0 / base;
    for (cplx& v : d.u0.values) v *= scale;
    for (cplx& v : d.n0.values) v *= scale;
    for (cplx& v : d.n1.values) v *= scale;
    return d;
}

}  // namespace zak
