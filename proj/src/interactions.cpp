#include "zak/interactions.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "zak/littlewood_paley.hpp"
#include "zak/transform.hpp"

namespace zak {

namespace {

constexpr double kPi = std::numbers::pi;

bool in_alpha_band(int k, double alpha) {
    return std::abs(static_cast<double>(k) - std::log2(alpha)) <= 1.0;
}

// Physical-space piece of fhat under a frequency table.
RadialField table_piece(const RadialField& fhat, const std::vector<double>& tab) {
    RadialField piece = fhat;
    for (size_t m = 0; m < piece.values.size(); ++m) piece.values[m] *= tab[m];
    return inverse_transform(piece);
}

}  // namespace

RadialField interaction_product(const RadialField& u, const RadialField& v,
                                InteractionKind kind, double alpha) {
    require_space(u, Space::frequency, "interaction_product");
    require_space(v, Space::frequency, "interaction_product");
    require_same_grid(u, v, "interaction_product");
    const GridPtr grid = u.grid;
    const ProjectorBank& bank = projector_bank(grid);
    const int k_min = bank.range().k_min;
    const int k_max = bank.range().k_max;
    const int nb = k_max - k_min + 2;  // buckets: k_min-1 (bottom), k_min..k_max

    // Bucket shell tables; the bottom bucket absorbs all below-range mass so
    // the bucket sum telescopes exactly to chi_{<=k}.
    auto bucket_tab = [&](int kappa) -> const std::vector<double>& {
        return kappa == k_min - 1 ? bank.bottom() : bank.shell(kappa);
    };
    std::vector<std::optional<RadialField>> up(nb), vp(nb);
    auto u_piece = [&](int kappa) -> const RadialField& {
        auto& slot = up[kappa - (k_min - 1)];
        if (!slot) slot = table_piece(u, bucket_tab(kappa));
        return *slot;
    };
    auto v_piece = [&](int kappa) -> const RadialField& {
        auto& slot = vp[kappa - (k_min - 1)];
        if (!slot) slot = table_piece(v, bucket_tab(kappa));
        return *slot;
    };

    RadialField acc = make_field(grid, Space::physical);
    auto add_product = [&](const RadialField& a, const RadialField& b) {
        for (size_t j = 0; j < acc.values.size(); ++j)
            acc.values[j] += a.values[j] * b.values[j];
    };

    switch (kind) {
        case InteractionKind::HL:
        case InteractionKind::AlphaL:
        case InteractionKind::XL:
            for (int k = k_min + 4; k <= k_max; ++k) {
                if (kind == InteractionKind::AlphaL && !in_alpha_band(k, alpha)) continue;
                if (kind == InteractionKind::XL && in_alpha_band(k, alpha)) continue;
                add_product(u_piece(k), table_piece(v, bank.at_most(k - 5)));
            }
            break;
        case InteractionKind::LH:
        case InteractionKind::LAlpha:
        case InteractionKind::LX:
            for (int k = k_min + 4; k <= k_max; ++k) {
                if (kind == InteractionKind::LAlpha && !in_alpha_band(k, alpha)) continue;
                if (kind == InteractionKind::LX && in_alpha_band(k, alpha)) continue;
                add_product(table_piece(u, bank.at_most(k - 5)), v_piece(k));
            }
            break;
        case InteractionKind::HH:
            for (int k1 = k_min - 1; k1 <= k_max; ++k1)
                for (int k2 = std::max(k_min - 1, k1 - 4); k2 <= std::min(k_max, k1 + 4); ++k2)
                    add_product(u_piece(k1), v_piece(k2));
            break;
    }
    return forward_transform(acc);
}

double resonance_omega(double t, double s, double rho, double alpha) {
    if (t < 0.0 || s < 0.0 || rho < 0.0)
        throw std::domain_error("resonance_omega: negative frequency magnitude");
    const double tol = 1e-9 * (t + s + rho + 1.0);
    if (t < std::abs(rho - s) - tol || t > rho + s + tol)
        throw std::domain_error("resonance_omega: (t,s,rho) violates the triangle condition");
    return -rho * rho + alpha * t + s * s;
}

namespace {

// Quadrature core shared by the generic and banded kernels. phi(m, s_idx,
// rho_i) is the full inner integrand m(t,s,rho)*t*fhat(t) at grid node m.
// Inner trapezoid over t in [|rho-s|, rho+s] clipped to the grid, with
// linearly interpolated end caps; outer trapezoid weight drho per s node.
template <class Phi>
RadialField bilinear_apply_core(const GridPtr& grid, const RadialField& g, Phi&& phi,
                                const int* row_lo, const int* row_hi, bool parallel) {
    const RadialGrid& gr = *grid;
    const int N = gr.N;
    const double drho = gr.drho;
    RadialField out = make_field(grid, Space::frequency);

#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (int i = 0; i < N; ++i) {
        const double rho_i = gr.rho[i];
        cplx acc{0.0, 0.0};
        for (int s_idx = 0; s_idx < N; ++s_idx) {
            if (row_hi && row_hi[s_idx] < 0) continue;
            const cplx gs = g.values[s_idx];
            if (gs == cplx{0.0, 0.0}) continue;
            const double s = gr.rho[s_idx];
            const double t_lo = std::abs(rho_i - s);
            const double t_hi = rho_i + s;
            int m_lo = std::max(0, static_cast<int>(std::ceil(t_lo / drho - 1.0 - 1e-12)));
            int m_hi = std::min(N - 1, static_cast<int>(std::floor(t_hi / drho - 1.0 + 1e-12)));
            if (m_hi < 0 || m_lo > N - 1) continue;

            int mA = m_lo, mB = m_hi;
            if (row_lo) {
                mA = std::max(mA, row_lo[s_idx]);
                mB = std::min(mB, row_hi[s_idx]);
            }
            cplx inner{0.0, 0.0};
            if (mA <= mB) {
                for (int m = mA; m <= mB; ++m) inner += phi(m, s_idx, rho_i);
                if (m_lo >= mA) inner -= 0.5 * phi(m_lo, s_idx, rho_i);
                if (m_hi <= mB && m_hi != m_lo) inner -= 0.5 * phi(m_hi, s_idx, rho_i);
                else if (m_hi == m_lo) inner -= 0.5 * phi(m_lo, s_idx, rho_i);
                inner *= drho;
                // end caps between the clipped limits and the first/last node
                if (m_lo > 0 && t_lo < gr.rho[m_lo]) {
                    const double w = gr.rho[m_lo] - t_lo;
                    const double th = (t_lo - gr.rho[m_lo - 1]) / drho;
                    const cplx plo = (1.0 - th) * phi(m_lo - 1, s_idx, rho_i) +
                                     th * phi(m_lo, s_idx, rho_i);
                    inner += 0.5 * (plo + phi(m_lo, s_idx, rho_i)) * w;
                }
                if (m_hi < N - 1 && t_hi > gr.rho[m_hi]) {
                    const double w = t_hi - gr.rho[m_hi];
                    const double th = (t_hi - gr.rho[m_hi]) / drho;
                    const cplx phi_hi = (1.0 - th) * phi(m_hi, s_idx, rho_i) +
                                        th * phi(m_hi + 1, s_idx, rho_i);
                    inner += 0.5 * (phi(m_hi, s_idx, rho_i) + phi_hi) * w;
                }
            } else if (m_hi >= 0 && m_lo <= N - 1 && m_hi + 1 == m_lo) {
                // interval falls between two adjacent nodes
                const double thA = (t_lo - gr.rho[m_hi]) / drho;
                const double thB = (t_hi - gr.rho[m_hi]) / drho;
                const cplx pa = (1.0 - thA) * phi(m_hi, s_idx, rho_i) + thA * phi(m_lo, s_idx, rho_i);
                const cplx pb = (1.0 - thB) * phi(m_hi, s_idx, rho_i) + thB * phi(m_lo, s_idx, rho_i);
                inner = 0.5 * (pa + pb) * (t_hi - t_lo);
            }
            acc += inner * (s * gs) * drho;
        }
        out.values[i] = acc / (4.0 * kPi * kPi * rho_i);
    }
    return out;
}

}  // namespace

RadialField radial_bilinear_apply(const BilinearSymbol& sym, const RadialField& f,
                                  const RadialField& g) {
    require_space(f, Space::frequency, "radial_bilinear_apply");
    require_space(g, Space::frequency, "radial_bilinear_apply");
    require_same_grid(f, g, "radial_bilinear_apply");
    const RadialGrid& gr = *f.grid;
    std::atomic<bool> bad{false};
    auto phi = [&](int m, int s_idx, double rho_i) -> cplx {
        const double mv = sym.m(gr.rho[m], gr.rho[s_idx], rho_i);
        if (!std::isfinite(mv)) {
            bad.store(true, std::memory_order_relaxed);
            return cplx{0.0, 0.0};
        }
        return mv * gr.rho[m] * f.values[m];
    };
    RadialField out = bilinear_apply_core(f.grid, g, phi, nullptr, nullptr, true);
    if (bad.load())
        throw std::domain_error("radial_bilinear_apply: non-finite symbol sample");
    return out;
}

namespace ref {
RadialField radial_bilinear_apply(const BilinearSymbol& sym, const RadialField& f,
                                  const RadialField& g) {
    require_space(f, Space::frequency, "ref::radial_bilinear_apply");
    require_space(g, Space::frequency, "ref::radial_bilinear_apply");
    require_same_grid(f, g, "ref::radial_bilinear_apply");
    const RadialGrid& gr = *f.grid;
    auto phi = [&](int m, int s_idx, double rho_i) -> cplx {
        const double mv = sym.m(gr.rho[m], gr.rho[s_idx], rho_i);
        return mv * gr.rho[m] * f.values[m];
    };
    return bilinear_apply_core(f.grid, g, phi, nullptr, nullptr, false);
}
}  // namespace ref

BandedBilinearKernel::BandedBilinearKernel(GridPtr grid, std::vector<double> band,
                                           ResonanceDenominator denom, double alpha)
    : grid_(std::move(grid)), band_(std::move(band)), denom_(denom), alpha_(alpha) {
    const int N = grid_->N;
    if (static_cast<int>(band_.size()) != N * N)
        throw std::invalid_argument("BandedBilinearKernel: band table size mismatch");
    t_lo_idx_.assign(N, N);
    t_hi_idx_.assign(N, -1);
    for (int s = 0; s < N; ++s) {
        const double* row = band_.data() + static_cast<size_t>(s) * N;
        for (int t = 0; t < N; ++t) {
            if (row[t] != 0.0) {
                t_lo_idx_[s] = std::min(t_lo_idx_[s], t);
                t_hi_idx_[s] = t;
            }
        }
    }
}

RadialField BandedBilinearKernel::apply_impl(const RadialField& f, const RadialField& g,
                                             bool parallel) const {
    require_space(f, Space::frequency, "BandedBilinearKernel::apply");
    require_space(g, Space::frequency, "BandedBilinearKernel::apply");
    require_same_grid(f, g, "BandedBilinearKernel::apply");
    if (!same_grid(*f.grid, *grid_))
        throw std::logic_error("BandedBilinearKernel::apply: field grid differs from kernel grid");
    const RadialGrid& gr = *grid_;
    const int N = gr.N;
    const double* band = band_.data();
    const ResonanceDenominator den = denom_;
    const double alpha = alpha_;
    auto phi = [&, band, den, alpha](int m, int s_idx, double rho_i) -> cplx {
        const double b = band[static_cast<size_t>(s_idx) * N + m];
        if (b == 0.0) return cplx{0.0, 0.0};
        const double t = gr.rho[m];
        const double s = gr.rho[s_idx];
        double d = 1.0;
        if (den == ResonanceDenominator::schrodinger)
            d = -rho_i * rho_i + alpha * t + s * s;
        else if (den == ResonanceDenominator::wave)
            d = t * t - s * s - alpha * rho_i;
        return (b / d) * t * f.values[m];
    };
    return bilinear_apply_core(grid_, g, phi, t_lo_idx_.data(), t_hi_idx_.data(), parallel);
}

RadialField BandedBilinearKernel::apply(const RadialField& f, const RadialField& g) const {
    return apply_impl(f, g, true);
}

RadialField BandedBilinearKernel::apply_serial(const RadialField& f, const RadialField& g) const {
    return apply_impl(f, g, false);
}

namespace {

// Accumulate sum_k a_k(t) * b_k(s) as outer products restricted to the
// nonzero index ranges of each factor.
void accumulate_outer(std::vector<double>& band, int N, const std::vector<double>& at,
                      const std::vector<double>& bs) {
    int t0 = N, t1 = -1, s0 = N, s1 = -1;
    for (int i = 0; i < N; ++i) {
        if (at[i] != 0.0) { t0 = std::min(t0, i); t1 = i; }
        if (bs[i] != 0.0) { s0 = std::min(s0, i); s1 = i; }
    }
    if (t1 < 0 || s1 < 0) return;
    for (int s = s0; s <= s1; ++s) {
        double* row = band.data() + static_cast<size_t>(s) * N;
        const double b = bs[s];
        for (int t = t0; t <= t1; ++t) row[t] += at[t] * b;
    }
}

std::vector<double> band_table(const RadialGrid& g, double alpha, bool include_lx) {
    const int N = g.N;
    std::vector<double> band(static_cast<size_t>(N) * N, 0.0);
    const DyadicRange dr = dyadic_range(g);
    // extend past the resolved range so the shell sum covers the whole grid
    for (int k = dr.k_min - 2; k <= dr.k_max + 2; ++k) {
        if (in_alpha_band(k, alpha)) continue;
        std::vector<double> high(N), low(N);
        for (int i = 0; i < N; ++i) {
            high[i] = chi_k(g.rho[i], k);
            low[i] = chi_le(g.rho[i], k - 5);
        }
        accumulate_outer(band, N, high, low);       // XL: high factor in t
        if (include_lx) accumulate_outer(band, N, low, high);  // LX: high factor in s
    }
    return band;
}

}  // namespace

std::vector<double> xl_band_table(const RadialGrid& g, double alpha) {
    return band_table(g, alpha, false);
}

std::vector<double> xl_lx_band_table(const RadialGrid& g, double alpha) {
    return band_table(g, alpha, true);
}

namespace {

const BandedBilinearKernel& cached_kernel(const GridPtr& grid, double alpha, bool tilde) {
    static std::mutex mtx;
    static std::map<std::tuple<int, double, double, bool>, std::unique_ptr<BandedBilinearKernel>>
        cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(grid->N, grid->R, alpha, tilde);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto band = tilde ? xl_lx_band_table(*grid, alpha) : xl_band_table(*grid, alpha);
        auto den = tilde ? ResonanceDenominator::wave : ResonanceDenominator::schrodinger;
        it = cache.emplace(key, std::make_unique<BandedBilinearKernel>(grid, std::move(band),
                                                                       den, alpha))
                 .first;
    }
    return *it->second;
}

}  // namespace

const BandedBilinearKernel& omega_kernel(const GridPtr& grid, double alpha) {
    return cached_kernel(grid, alpha, false);
}

const BandedBilinearKernel& omega_tilde_kernel(const GridPtr& grid, double alpha) {
    return cached_kernel(grid, alpha, true);
}

RadialField omega_transform(const RadialField& N, const RadialField& u, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("omega_transform: alpha must be positive");
    return omega_kernel(N.grid, alpha).apply(N, u);
}

RadialField omega_tilde_transform(const RadialField& u, const RadialField& v, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("omega_tilde_transform: alpha must be positive");
    return omega_tilde_kernel(u.grid, alpha).apply(u, conj(v));
}

namespace {

ResonanceScan scan_impl(const RadialGrid& g, double alpha, double threshold, bool tilde) {
    const int N = g.N;
    const auto band = tilde ? xl_lx_band_table(g, alpha) : xl_band_table(g, alpha);
    ResonanceScan scan;
    scan.alpha = alpha;
    scan.c_min = std::numeric_limits<double>::infinity();
    scan.c_max = 0.0;
    const double drho = g.drho;
    for (int s_idx = 0; s_idx < N; ++s_idx) {
        const double s = g.rho[s_idx];
        const double* row = band.data() + static_cast<size_t>(s_idx) * N;
        for (int t_idx = 0; t_idx < N; ++t_idx) {
            if (row[t_idx] < threshold) continue;
            const double t = g.rho[t_idx];
            const int i_lo = std::max(0, static_cast<int>(std::ceil(std::abs(t - s) / drho - 1.0)));
            const int i_hi = std::min(N - 1, static_cast<int>(std::floor((t + s) / drho - 1.0)));
            for (int i = i_lo; i <= i_hi; ++i) {
                const double rho = g.rho[i];
                const double den = tilde ? t * t - s * s - alpha * rho
                                         : -rho * rho + alpha * t + s * s;
                const double ratio = std::abs(den) / (rho * rho + alpha * rho);
                scan.c_min = std::min(scan.c_min, ratio);
                scan.c_max = std::max(scan.c_max, ratio);
                ++scan.count;
            }
        }
    }
    return scan;
}

}  // namespace

ResonanceScan scan_resonance(const RadialGrid& g, double alpha, double band_threshold) {
    return scan_impl(g, alpha, band_threshold, false);
}

ResonanceScan scan_resonance_tilde(const RadialGrid& g, double alpha, double band_threshold) {
    return scan_impl(g, alpha, band_threshold, true);
}

}  // namespace zak
