#include "zak/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "zak/interactions.hpp"
#include "zak/littlewood_paley.hpp"
#include "zak/transform.hpp"

namespace zak {

namespace {

RadialField apply_D(const RadialField& fhat) {
    RadialField out = fhat;
    for (int m = 0; m < fhat.grid->N; ++m) out.values[m] *= fhat.grid->rho[m];
    return out;
}

RadialField apply_bracket_D(const RadialField& fhat) {
    RadialField out = fhat;
    for (int m = 0; m < fhat.grid->N; ++m) {
        const double rho = fhat.grid->rho[m];
        out.values[m] *= std::sqrt(1.0 + rho * rho);
    }
    return out;
}

double l2_norm(const RadialField& fhat) { return lebesgue_norm(inverse_transform(fhat), 2.0); }
double h1_norm(const RadialField& fhat) { return l2_norm(apply_bracket_D(fhat)); }

std::vector<int> window_indices(const TimeSeries& series, double t_a, double t_b) {
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(series.states.size()); ++i) {
        const double t = series.states[i].t;
        if (t >= t_a - 1e-12 && t <= t_b + 1e-12) idx.push_back(i);
    }
    return idx;
}

}  // namespace

std::pair<RadialField, RadialField> pullback(const SimState& s) {
    return {schrodinger_propagate(s.u_hat, -s.t), wave_propagate(s.N_hat, -s.t, s.alpha)};
}

CauchyTable cauchy_tail(const TimeSeries& series, Component comp, double t_a, double t_b) {
    const auto idx = window_indices(series, t_a, t_b);
    if (idx.size() < 3)
        throw std::invalid_argument("cauchy_tail: need at least 3 samples in the window");
    CauchyTable table;
    std::vector<RadialField> pbs;
    for (int i : idx) {
        auto [u_m, N_m] = pullback(series.states[i]);
        pbs.push_back(comp == Component::u ? std::move(u_m) : std::move(N_m));
        table.times.push_back(series.states[i].t);
    }
    const int n = static_cast<int>(pbs.size());
    table.dist.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const RadialField diff = pbs[i] - pbs[j];
            const double d = comp == Component::u ? h1_norm(diff) : l2_norm(diff);
            table.dist[i][j] = table.dist[j][i] = d;
        }
    return table;
}

double cauchy_window_max(const CauchyTable& table, double t_a, double t_b) {
    double m = 0.0;
    const int n = static_cast<int>(table.times.size());
    for (int i = 0; i < n; ++i) {
        if (table.times[i] < t_a - 1e-12 || table.times[i] > t_b + 1e-12) continue;
        for (int j = i + 1; j < n; ++j) {
            if (table.times[j] < t_a - 1e-12 || table.times[j] > t_b + 1e-12) continue;
            m = std::max(m, table.dist[i][j]);
        }
    }
    return m;
}

namespace {

double spatial_norm(const SimState& state, const NormSpec& spec) {
    RadialField f = spec.component == Component::u ? state.u_hat : state.N_hat;
    if (spec.bracket_D) f = apply_bracket_D(f);
    switch (spec.kind) {
        case NormSpec::SpatialKind::lebesgue:
            return lebesgue_norm(inverse_transform(f), spec.p);
        case NormSpec::SpatialKind::besov:
            return besov_norm(f, {spec.s, spec.p});
        case NormSpec::SpatialKind::sobolev:
            return sobolev_norm(f, spec.s, spec.p);
    }
    return 0.0;
}

}  // namespace

double strichartz_norm(const TimeSeries& series, const NormSpec& spec) {
    const auto idx = window_indices(series, spec.t_a, spec.t_b);
    if (idx.empty()) throw std::invalid_argument("strichartz_norm: empty window");
    std::vector<double> vals, times;
    for (int i : idx) {
        vals.push_back(spatial_norm(series.states[i], spec));
        times.push_back(series.states[i].t);
    }
    if (std::isinf(spec.time_exponent)) {
        double m = 0.0;
        for (double v : vals) m = std::max(m, v);
        return m;
    }
    const double q = spec.time_exponent;
    double acc = 0.0;
    for (size_t i = 0; i + 1 < vals.size(); ++i) {
        const double w = times[i + 1] - times[i];
        acc += 0.5 * w * (std::pow(vals[i], q) + std::pow(vals[i + 1], q));
    }
    return std::pow(acc, 1.0 / q);
}

double x_norm(const TimeSeries& series, double eps, double t_a, double t_b) {
    const double qe = q_of(eps);
    const double qme = q_of(-eps);
    NormSpec u_inf{Component::u, std::numeric_limits<double>::infinity(),
                   NormSpec::SpatialKind::lebesgue, 0.0, 2.0, true, t_a, t_b};
    NormSpec u_str{Component::u, 2.0, NormSpec::SpatialKind::besov, 0.25 + eps, qe, true,
                   t_a, t_b};
    NormSpec N_inf{Component::N, std::numeric_limits<double>::infinity(),
                   NormSpec::SpatialKind::lebesgue, 0.0, 2.0, false, t_a, t_b};
    NormSpec N_str{Component::N, 2.0, NormSpec::SpatialKind::besov, -0.25 - eps, qme, false,
                   t_a, t_b};
    return strichartz_norm(series, u_inf) + strichartz_norm(series, u_str) +
           strichartz_norm(series, N_inf) + strichartz_norm(series, N_str);
}

std::pair<double, double> boundary_term_norms(const SimState& s) {
    const RadialField om = omega_transform(s.N_hat, s.u_hat, s.alpha);
    const RadialField om_tilde = apply_D(omega_tilde_transform(s.u_hat, s.u_hat, s.alpha));
    return {h1_norm(om), l2_norm(om_tilde)};
}

namespace {

// trapezoid accumulation of propagated integrand snapshots
RadialField time_integral(const std::vector<double>& times,
                          const std::vector<RadialField>& snaps) {
    RadialField acc = make_field(snaps.front().grid, Space::frequency);
    for (size_t i = 0; i + 1 < snaps.size(); ++i) {
        const double w = 0.5 * (times[i + 1] - times[i]);
        for (size_t m = 0; m < acc.values.size(); ++m)
            acc.values[m] += w * (snaps[i].values[m] + snaps[i + 1].values[m]);
    }
    return acc;
}

}  // namespace

DuhamelResult duhamel_residual(const InitialData& d, double alpha, double dt, int stride,
                               double t_end) {
    if (stride < 1) throw std::invalid_argument("duhamel_residual: stride must be >= 1");
    const double sample_dt = stride * dt;
    if (t_end > 0.0 && t_end / sample_dt < 3.0)
        throw std::invalid_argument(
            "duhamel_residual: sampling too coarse; need stride*dt <= t_end/3");

    StepperConfig cfg;
    cfg.dt = dt;
    cfg.T = t_end;
    cfg.sample_every = stride;
    cfg.nonlinearity = Nonlinearity::simplified_nu;
    const TimeSeries series = simulate(d, alpha, cfg);
    if (series.diverged) throw std::runtime_error("duhamel_residual: simulation diverged");

    const SimState& s0 = series.states.front();
    const SimState& sT = series.states.back();
    const double T = sT.t;
    const GridPtr grid = s0.u_hat.grid;

    std::vector<double> times;
    std::vector<RadialField> int_u, int_N;
    for (const SimState& st : series.states) {
        times.push_back(st.t);
        const RadialField u_phys = inverse_transform(st.u_hat);
        const RadialField N_phys = inverse_transform(st.N_hat);

        // |u|^2 and Nu products, back in frequency space
        RadialField absu2 = make_field(grid, Space::physical);
        RadialField Nu = make_field(grid, Space::physical);
        for (size_t j = 0; j < absu2.values.size(); ++j) {
            absu2.values[j] = cplx{std::norm(u_phys.values[j]), 0.0};
            Nu.values[j] = N_phys.values[j] * u_phys.values[j];
        }
        const RadialField absu2_hat = forward_transform(absu2);
        const RadialField Nu_hat = forward_transform(Nu);
        const RadialField D_absu2 = apply_D(absu2_hat);

        // u-equation integrand:
        //   i alpha Omega(D|u|^2,u) + i Omega(N,Nu) + i (Nu)_{LH+HH+alphaL}
        RadialField f_u = cplx{0.0, alpha} * omega_transform(D_absu2, st.u_hat, alpha);
        f_u += cplx{0.0, 1.0} * omega_transform(st.N_hat, Nu_hat, alpha);
        RadialField bilinear = interaction_product(st.N_hat, st.u_hat, InteractionKind::LH, alpha);
        bilinear += interaction_product(st.N_hat, st.u_hat, InteractionKind::HH, alpha);
        bilinear += interaction_product(st.N_hat, st.u_hat, InteractionKind::AlphaL, alpha);
        f_u += cplx{0.0, 1.0} * bilinear;
        int_u.push_back(schrodinger_propagate(f_u, T - st.t));

        // N-equation integrand:
        //   i alpha [ D(u ubar)_{HH+alphaL+Lalpha} + D OmTilde(Nu,u) - D OmTilde(u,Nu) ]
        const RadialField ubar_hat = conj(st.u_hat);
        RadialField f_N = interaction_product(st.u_hat, ubar_hat, InteractionKind::HH, alpha);
        f_N += interaction_product(st.u_hat, ubar_hat, InteractionKind::AlphaL, alpha);
        f_N += interaction_product(st.u_hat, ubar_hat, InteractionKind::LAlpha, alpha);
        f_N += omega_tilde_transform(Nu_hat, st.u_hat, alpha);
        f_N = f_N - omega_tilde_transform(st.u_hat, Nu_hat, alpha);
        f_N = cplx{0.0, alpha} * apply_D(f_N);
        int_N.push_back(wave_propagate(f_N, T - st.t, alpha));
    }

    // u integral-equation right-hand side at time T
    RadialField rhs_u = schrodinger_propagate(s0.u_hat, T);
    rhs_u += schrodinger_propagate(omega_transform(s0.N_hat, s0.u_hat, alpha), T);
    rhs_u = rhs_u - omega_transform(sT.N_hat, sT.u_hat, alpha);
    rhs_u = rhs_u - time_integral(times, int_u);

    // N integral-equation right-hand side at time T
    RadialField rhs_N = wave_propagate(s0.N_hat, T, alpha);
    rhs_N += cplx{alpha, 0.0} *
             wave_propagate(apply_D(omega_tilde_transform(s0.u_hat, s0.u_hat, alpha)), T, alpha);
    rhs_N = rhs_N - cplx{alpha, 0.0} * apply_D(omega_tilde_transform(sT.u_hat, sT.u_hat, alpha));
    rhs_N = rhs_N - time_integral(times, int_N);

    DuhamelResult res;
    res.r_u = h1_norm(sT.u_hat - rhs_u);
    res.r_N = l2_norm(sT.N_hat - rhs_N);
    return res;
}

}  // namespace zak
