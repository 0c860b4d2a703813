#include "zak/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>

#include "zak/interactions.hpp"
#include "zak/littlewood_paley.hpp"
#include "zak/transform.hpp"

namespace zak {

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a * 0x9e3779b97f4a7c15ULL + b;
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

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
double lp_norm(const RadialField& fhat, double p) {
    return lebesgue_norm(inverse_transform(fhat), p);
}

RadialField physical_product_to_freq(const RadialField& fhat, const RadialField& ghat) {
    return forward_transform(
        pointwise_product(inverse_transform(fhat), inverse_transform(ghat)));
}

}  // namespace

RadialField random_radial_field(const GridPtr& grid, const RandomFieldSpec& spec, int index) {
    if (spec.k_hi < spec.k_lo)
        throw std::invalid_argument("random_radial_field: empty shell band");
    std::mt19937_64 eng(mix(spec.seed, static_cast<std::uint64_t>(index) + 0x51ULL));
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(-3.0, 3.0);
    struct ShellDraw {
        cplx amp;
        double slope;
    };
    std::vector<ShellDraw> draws;
    for (int k = spec.k_lo; k <= spec.k_hi; ++k) {
        ShellDraw d;
        const double re = gauss(eng), im = gauss(eng);
        d.amp = cplx{re, im} * std::exp2(-k * spec.s_dec);
        d.slope = unif(eng);
        draws.push_back(d);
    }
    RadialField f = make_field(grid, Space::frequency);
    const RadialGrid& g = *grid;
    for (int m = 0; m < g.N; ++m) {
        cplx acc{0.0, 0.0};
        for (int k = spec.k_lo; k <= spec.k_hi; ++k) {
            const ShellDraw& d = draws[k - spec.k_lo];
            const double c = chi_k(g.rho[m], k);
            if (c != 0.0) acc += d.amp * c * std::polar(1.0, d.slope * g.rho[m]);
        }
        f.values[m] = acc;
    }
    return f;
}

namespace {

using PairFn = std::function<std::pair<double, double>(const GridPtr& grid, int sample)>;

EstimateReport run_estimate(const std::string& id, const GridPtr& base, const GridPtr& fine,
                            int count, const PairFn& fn) {
    EstimateReport rep;
    rep.lemma_id = id;
    for (int i = 0; i < count; ++i) {
        auto [lhs, rhs] = fn(base, i);
        if (!(rhs > 0.0)) {
            ++rep.skipped;
            continue;
        }
        rep.samples.push_back({lhs, rhs, lhs / rhs});
    }
    std::vector<double> ratios;
    for (const auto& s : rep.samples) ratios.push_back(s.ratio);
    if (!ratios.empty()) {
        rep.max_ratio = *std::max_element(ratios.begin(), ratios.end());
        std::vector<double> sorted = ratios;
        std::sort(sorted.begin(), sorted.end());
        rep.median_ratio = sorted[sorted.size() / 2];
    }
    for (int i = 0; i < count; ++i) {
        auto [lhs, rhs] = fn(fine, i);
        if (!(rhs > 0.0)) continue;
        rep.max_ratio_fine = std::max(rep.max_ratio_fine, lhs / rhs);
    }
    rep.refinement_factor = rep.max_ratio > 0.0 ? rep.max_ratio_fine / rep.max_ratio : 0.0;
    bool finite = std::isfinite(rep.max_ratio) && std::isfinite(rep.max_ratio_fine);
    for (const auto& s : rep.samples) finite = finite && std::isfinite(s.ratio);
    rep.pass = finite && rep.refinement_factor < 1.5;
    return rep;
}

}  // namespace

VerifierConfig default_verifier_config(std::uint64_t seed, int count) {
    VerifierConfig cfg;
    cfg.grid = make_grid(128.0, 256);
    cfg.grid_fine = make_grid(256.0, 512);
    cfg.cm_grid = make_grid(32.0, 512);
    cfg.cm_grid_fine = make_grid(64.0, 1024);
    cfg.fields.seed = seed;
    cfg.fields.count = count;
    return cfg;
}

std::vector<EstimateReport> verify_bilinear_schrodinger(const VerifierConfig& cfg) {
    const double eps = cfg.eps;
    const double qe = q_of(eps), qme = q_of(-eps);
    auto N_field = [&](const GridPtr& g, int i) {
        return random_radial_field(g, cfg.fields, 2 * i);
    };
    auto u_field = [&](const GridPtr& g, int i) {
        return random_radial_field(g, cfg.fields, 2 * i + 1);
    };
    auto rhs_strz = [&](const RadialField& N, const RadialField& u) {
        return besov_norm(N, {-0.25 - eps, qme}) * besov_norm(apply_bracket_D(u), {0.25 + eps, qe});
    };
    std::vector<EstimateReport> out;
    out.push_back(run_estimate(
        "bilinear_schrodinger_LH", cfg.grid, cfg.grid_fine, cfg.fields.count,
        [&](const GridPtr& g, int i) {
            const RadialField N = N_field(g, i), u = u_field(g, i);
            const RadialField lh = interaction_product(N, u, InteractionKind::LH, cfg.alpha);
            return std::make_pair(h1_norm(lh), rhs_strz(N, u));
        }));
    out.push_back(run_estimate(
        "bilinear_schrodinger_HH", cfg.grid, cfg.grid_fine, cfg.fields.count,
        [&](const GridPtr& g, int i) {
            const RadialField N = N_field(g, i), u = u_field(g, i);
            const RadialField hh = interaction_product(N, u, InteractionKind::HH, cfg.alpha);
            return std::make_pair(h1_norm(hh), rhs_strz(N, u));
        }));
    const double th = cfg.theta0_schrodinger;
    const double inv_qt = 0.5 - 0.5 * th;
    const double inv_rt = 0.25 + th / 3.0 + eps / 3.0;
    const double sigma = 1.5 - 2.0 * inv_qt - 3.0 * inv_rt;
    const double r_dual = 1.0 / (1.0 - inv_rt);
    out.push_back(run_estimate(
        "bilinear_schrodinger_alphaL", cfg.grid, cfg.grid_fine, cfg.fields.count,
        [&](const GridPtr& g, int i) {
            const RadialField N = N_field(g, i), u = u_field(g, i);
            const RadialField al = interaction_product(N, u, InteractionKind::AlphaL, cfg.alpha);
            const double lhs = besov_norm(apply_bracket_D(al), {sigma, r_dual});
            const double rhs = besov_norm(N, {-0.25 - eps, qme}) *
                               std::max(l2_norm(u), besov_norm(u, {0.25 + eps, qe}));
            return std::make_pair(lhs, rhs);
        }));
    return out;
}

std::vector<EstimateReport> verify_bilinear_wave(const VerifierConfig& cfg) {
    const double eps = cfg.eps;
    const double qe = q_of(eps), qme = q_of(-eps);
    auto u_field = [&](const GridPtr& g, int i) {
        return random_radial_field(g, cfg.fields, 3 * i + 2);
    };
    std::vector<EstimateReport> out;
    out.push_back(run_estimate(
        "bilinear_wave_HH", cfg.grid, cfg.grid_fine, cfg.fields.count,
        [&](const GridPtr& g, int i) {
            const RadialField u = u_field(g, i);
            const RadialField hh =
                interaction_product(u, conj(u), InteractionKind::HH, cfg.alpha);
            const double lhs = l2_norm(apply_D(hh));
            const double rhs = besov_norm(u, {0.25 - eps, qme}) *
                               besov_norm(apply_bracket_D(u), {0.25 + eps, qe});
            return std::make_pair(lhs, rhs);
        }));
    const double th = cfg.theta0_wave;
    const double inv_qt = 0.5 - 0.5 * th;
    const double inv_rt = 0.25 + th / 3.0 - eps / 3.0;
    const double sigma = 1.5 - inv_qt - 3.0 * inv_rt;
    const double r_dual = 1.0 / (1.0 - inv_rt);
    out.push_back(run_estimate(
        "bilinear_wave_alphaL", cfg.grid, cfg.grid_fine, cfg.fields.count,
        [&](const GridPtr& g, int i) {
            const RadialField u = u_field(g, i);
            RadialField al = interaction_product(u, conj(u), InteractionKind::AlphaL, cfg.alpha);
            al += interaction_product(u, conj(u), InteractionKind::LAlpha, cfg.alpha);
            const double lhs = besov_norm(apply_D(al), {sigma, r_dual});
            const RadialField Du = apply_bracket_D(u);
            const double b = std::max(l2_norm(Du), besov_norm(Du, {0.25 + eps, qe}));
            return std::make_pair(lhs, b * b);
        }));
    return out;
}

std::vector<EstimateReport> verify_boundary(const VerifierConfig& cfg) {
    auto N_field = [&](const GridPtr& g, int i) {
        return random_radial_field(g, cfg.fields, 5 * i);
    };
    auto u_field = [&](const GridPtr& g, int i) {
        return random_radial_field(g, cfg.fields, 5 * i + 1);
    };
    std::vector<EstimateReport> out;
    out.push_back(run_estimate(
        "boundary_omega", cfg.grid, cfg.grid_fine, cfg.fields.count,
        [&](const GridPtr& g, int i) {
            const RadialField N = N_field(g, i), u = u_field(g, i);
            const double lhs = h1_norm(omega_transform(N, u, cfg.alpha));
            return std::make_pair(lhs, l2_norm(N) * h1_norm(u));
        }));
    out.push_back(run_estimate(
        "boundary_omega_tilde", cfg.grid, cfg.grid_fine, cfg.fields.count,
        [&](const GridPtr& g, int i) {
            const RadialField u = u_field(g, i);
            const double lhs = l2_norm(apply_D(omega_tilde_transform(u, u, cfg.alpha)));
            const double h1 = h1_norm(u);
            return std::make_pair(lhs, h1 * h1);
        }));
    return out;
}

std::vector<EstimateReport> verify_omega_strichartz(const VerifierConfig& cfg) {
    const double eps = cfg.eps;
    const double qe = q_of(eps), qme = q_of(-eps);
    auto N_field = [&](const GridPtr& g, int i) {
        return random_radial_field(g, cfg.fields, 7 * i);
    };
    auto u_field = [&](const GridPtr& g, int i) {
        return random_radial_field(g, cfg.fields, 7 * i + 1);
    };
    std::vector<EstimateReport> out;
    out.push_back(run_estimate(
        "omega_strichartz", cfg.grid, cfg.grid_fine, cfg.fields.count,
        [&](const GridPtr& g, int i) {
            const RadialField N = N_field(g, i), u = u_field(g, i);
            const double lhs =
                besov_norm(apply_bracket_D(omega_transform(N, u, cfg.alpha)), {0.25 + eps, qe});
            const double rhs = l2_norm(N) * lp_norm(apply_bracket_D(u), 6.0);
            return std::make_pair(lhs, rhs);
        }));
    out.push_back(run_estimate(
        "omega_tilde_strichartz", cfg.grid, cfg.grid_fine, cfg.fields.count,
        [&](const GridPtr& g, int i) {
            const RadialField u = u_field(g, i);
            const double lhs = besov_norm(apply_D(omega_tilde_transform(u, u, cfg.alpha)),
                                          {-0.25 - eps, qme});
            const double rhs = lp_norm(u, 6.0) * l2_norm(u);
            return std::make_pair(lhs, rhs);
        }));
    return out;
}

std::vector<EstimateReport> verify_cubic(const VerifierConfig& cfg) {
    auto N_field = [&](const GridPtr& g, int i) {
        return random_radial_field(g, cfg.fields, 11 * i);
    };
    auto u_field = [&](const GridPtr& g, int i) {
        return random_radial_field(g, cfg.fields, 11 * i + 1);
    };
    std::vector<EstimateReport> out;
    out.push_back(run_estimate(
        "cubic_omega_D_u2", cfg.grid, cfg.grid_fine, cfg.fields.count,
        [&](const GridPtr& g, int i) {
            const RadialField u = u_field(g, i);
            const RadialField u2 = physical_product_to_freq(u, conj(u));
            const double lhs = h1_norm(omega_transform(apply_D(u2), u, cfg.alpha));
            const double d6 = lp_norm(apply_bracket_D(u), 6.0);
            return std::make_pair(lhs, d6 * d6 * l2_norm(u));
        }));
    out.push_back(run_estimate(
        "cubic_omega_N_Nu", cfg.grid, cfg.grid_fine, cfg.fields.count,
        [&](const GridPtr& g, int i) {
            const RadialField N = N_field(g, i), u = u_field(g, i);
            const RadialField Nu = physical_product_to_freq(N, u);
            const double lhs =
                besov_norm(apply_bracket_D(omega_transform(N, Nu, cfg.alpha)), {0.0, 1.2});
            const double n2 = l2_norm(N);
            return std::make_pair(lhs, lp_norm(apply_bracket_D(u), 6.0) * n2 * n2);
        }));
    out.push_back(run_estimate(
        "cubic_omega_tilde_Nu_u", cfg.grid, cfg.grid_fine, cfg.fields.count,
        [&](const GridPtr& g, int i) {
            const RadialField N = N_field(g, i), u = u_field(g, i);
            const RadialField Nu = physical_product_to_freq(N, u);
            const double lhs = l2_norm(apply_D(omega_tilde_transform(Nu, u, cfg.alpha)));
            const double d6 = lp_norm(apply_bracket_D(u), 6.0);
            return std::make_pair(lhs, d6 * d6 * l2_norm(N));
        }));
    return out;
}

EstimateReport verify_coifman_meyer(const VerifierConfig& cfg, CMSymbol sym, int k1, int k2,
                                    double p, double q) {
    if (p < 1.0 || q < 1.0)
        throw std::invalid_argument("verify_coifman_meyer: exponents must be >= 1");
    const double inv_r = 1.0 / p + 1.0 / q;
    if (inv_r > 1.0)
        throw std::invalid_argument("verify_coifman_meyer: 1/r = 1/p + 1/q exceeds 1");
    const double r = 1.0 / inv_r;
    std::string name = "coifman_meyer_";
    name += sym == CMSymbol::identity ? "identity"
            : sym == CMSymbol::xl_band ? "xl_band"
                                       : "d_bracket_omega";
    name += "_k" + std::to_string(k1) + "_k" + std::to_string(k2);
    std::unique_ptr<BandedBilinearKernel> kern_base, kern_fine;
    if (sym != CMSymbol::identity) {
        const auto den = sym == CMSymbol::xl_band ? ResonanceDenominator::none
                                                  : ResonanceDenominator::schrodinger;
        kern_base = std::make_unique<BandedBilinearKernel>(
            cfg.cm_grid, xl_band_table(*cfg.cm_grid, cfg.alpha), den, cfg.alpha);
        kern_fine = std::make_unique<BandedBilinearKernel>(
            cfg.cm_grid_fine, xl_band_table(*cfg.cm_grid_fine, cfg.alpha), den, cfg.alpha);
    }
    EstimateReport rep = run_estimate(
        name, cfg.cm_grid, cfg.cm_grid_fine, cfg.fields.count,
        [&, sym, k1, k2, p, q, r](const GridPtr& g, int i) {
            RandomFieldSpec fs = cfg.fields;
            fs.k_lo = fs.k_hi = k1;
            const RadialField f = random_radial_field(g, fs, 13 * i);
            fs.k_lo = fs.k_hi = k2;
            const RadialField gg = random_radial_field(g, fs, 13 * i + 1);
            double lhs = 0.0;
            if (sym == CMSymbol::identity) {
                lhs = lp_norm(physical_product_to_freq(f, gg), r);
            } else {
                const auto& kern = g->N == cfg.cm_grid->N ? *kern_base : *kern_fine;
                RadialField tm = kern.apply(f, gg);
                if (sym == CMSymbol::d_bracket_omega) tm = apply_D(apply_bracket_D(tm));
                lhs = lp_norm(tm, r);
            }
            return std::make_pair(lhs, lp_norm(f, p) * lp_norm(gg, q));
        });
    if (sym == CMSymbol::identity)
        rep.pass = rep.pass && rep.max_ratio <= 1.0 + 1e-6 && rep.max_ratio_fine <= 1.0 + 1e-6;
    return rep;
}

std::vector<EstimateReport> verify_coifman_meyer_suite(const VerifierConfig& cfg) {
    std::vector<EstimateReport> out;
    out.push_back(verify_coifman_meyer(cfg, CMSymbol::identity, 2, -1, 4.0, 4.0));
    const std::vector<std::pair<int, int>> sweep = {{3, -2}, {3, -1}, {4, -3},
                                                    {4, -2}, {4, -1}, {4, 0}};
    for (auto [k1, k2] : sweep)
        out.push_back(verify_coifman_meyer(cfg, CMSymbol::d_bracket_omega, k1, k2, 4.0, 4.0));
    out.push_back(verify_coifman_meyer(cfg, CMSymbol::xl_band, 4, -2, 2.0, 2.0));
    return out;
}

std::vector<EstimateReport> verify_embedding_chain(const VerifierConfig& cfg) {
    const double eps = cfg.eps;
    const double qe = q_of(eps), qme = q_of(-eps);
    std::vector<EstimateReport> out;
    out.push_back(run_estimate(
        "embedding_chain", cfg.grid, cfg.grid_fine, cfg.fields.count,
        [&](const GridPtr& g, int i) {
            const RadialField f = random_radial_field(g, cfg.fields, 17 * i);
            const double h1 = besov_norm(f, {1.0, 2.0});
            const double b_plus = besov_norm(f, {0.25 + eps, qe});
            const double b_minus = besov_norm(f, {0.25 - eps, qme});
            const double l6 = lp_norm(f, 6.0);
            const double ratio =
                std::max({b_plus / h1, b_minus / b_plus, l6 / b_minus});
            // encode the worst chain link as lhs with unit rhs
            return std::make_pair(ratio, 1.0);
        }));
    return out;
}

std::vector<EstimateReport> verify_all(const VerifierConfig& cfg) {
    std::vector<EstimateReport> out;
    auto append = [&](std::vector<EstimateReport> v) {
        for (auto& r : v) out.push_back(std::move(r));
    };
    append(verify_bilinear_schrodinger(cfg));
    append(verify_bilinear_wave(cfg));
    append(verify_boundary(cfg));
    append(verify_omega_strichartz(cfg));
    append(verify_cubic(cfg));
    append(verify_coifman_meyer_suite(cfg));
    append(verify_embedding_chain(cfg));
    return out;
}

}  // namespace zak
