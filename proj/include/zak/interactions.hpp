#pragma once

#include <cstdint>
#include <functional>

#include "zak/field.hpp"

namespace zak {

/// Relative-frequency interaction pieces of a product uv. The first factor
/// carries the high frequency in HL/AlphaL/XL; the second in LH/LAlpha/LX.
/// AlphaL/XL split HL by whether the high shell k satisfies
/// |k - log2(alpha)| <= 1; LAlpha/LX split LH the same way.
enum class InteractionKind { LH, HL, HH, AlphaL, LAlpha, XL, LX };

/// Dyadic interaction piece of the product uv, computed as a sum over shell
/// pairs of physical-space products. Inputs and output are frequency fields.
RadialField interaction_product(const RadialField& u, const RadialField& v,
                                InteractionKind kind, double alpha = 1.0);

/// Phase mismatch of the Schroedinger-wave interaction,
/// omega = -rho^2 + alpha*t + s^2 at (t,s,rho) = (|xi-eta|, |eta|, |xi|).
double resonance_omega(double t, double s, double rho, double alpha);

/// Scalar symbol m(|xi-eta|, |eta|, |xi|) of a radial bilinear operator.
struct BilinearSymbol {
    std::function<double(double t, double s, double rho)> m;
};

/// Radial bilinear operator
///   h_hat(rho) = 1/(4 pi^2 rho) int_0^inf int_{|rho-s|}^{rho+s}
///                m(t,s,rho) t f_hat(t) s g_hat(s) dt ds,
/// trapezoid quadrature on grid nodes with endpoint clipping. For m == 1 it
/// reproduces the transform of the pointwise product. O(N^2) per output node.
RadialField radial_bilinear_apply(const BilinearSymbol& m, const RadialField& f,
                                  const RadialField& g);

namespace ref {
/// Serial reference for the parallel kernel.
RadialField radial_bilinear_apply(const BilinearSymbol& m, const RadialField& f,
                                  const RadialField& g);
}  // namespace ref

enum class ResonanceDenominator {
    none,         // symbol = band(t,s)
    schrodinger,  // symbol = band(t,s) / (-rho^2 + alpha t + s^2)
    wave,         // symbol = band(t,s) / (t^2 - s^2 - alpha rho)
};

/// Bilinear kernel whose symbol factors as a precomputed N x N band table
/// times a cheap resonance denominator. This is the fast path for the
/// normal-form operators; apply() parallelizes over output nodes with a
/// deterministic summation order per node.
class BandedBilinearKernel {
public:
    BandedBilinearKernel(GridPtr grid, std::vector<double> band,
                         ResonanceDenominator denom, double alpha);

    RadialField apply(const RadialField& f, const RadialField& g) const;
    RadialField apply_serial(const RadialField& f, const RadialField& g) const;

    const std::vector<double>& band() const { return band_; }

private:
    RadialField apply_impl(const RadialField& f, const RadialField& g, bool parallel) const;

    GridPtr grid_;
    std::vector<double> band_;   // band_[s_idx * N + t_idx]
    std::vector<int> t_lo_idx_;  // per s: first t index with a nonzero band entry
    std::vector<int> t_hi_idx_;  // per s: last such index (-1 when the row is empty)
    ResonanceDenominator denom_;
    double alpha_;
};

/// P_XL(t,s): high factor t in dyadic shells away from the alpha band,
/// low factor s at most 2^{k-5}.
std::vector<double> xl_band_table(const RadialGrid& g, double alpha);

/// P_{XL+LX}(t,s).
std::vector<double> xl_lx_band_table(const RadialGrid& g, double alpha);

/// Normal-form operator Omega(N,u) with symbol P_XL / omega.
RadialField omega_transform(const RadialField& N, const RadialField& u, double alpha);

/// Normal-form operator for the wave component: symbol P_{XL+LX} over
/// t^2 - s^2 - alpha rho, second argument conjugated.
RadialField omega_tilde_transform(const RadialField& u, const RadialField& v, double alpha);

/// Shared per-(grid,alpha) kernels backing the two operators above.
const BandedBilinearKernel& omega_kernel(const GridPtr& grid, double alpha);
const BandedBilinearKernel& omega_tilde_kernel(const GridPtr& grid, double alpha);

/// Brute-force scan of |omega| / (rho^2 + alpha rho) over grid triples in the
/// sampled XL support (band value above threshold, triangle-compatible).
struct ResonanceScan {
    double alpha = 0.0;
    double c_min = 0.0;
    double c_max = 0.0;
    std::uint64_t count = 0;
};

ResonanceScan scan_resonance(const RadialGrid& g, double alpha, double band_threshold = 1e-3);

/// Same scan for the wave-side denominator |t^2 - s^2 - alpha rho| on XL+LX.
ResonanceScan scan_resonance_tilde(const RadialGrid& g, double alpha,
                                   double band_threshold = 1e-3);

}  // namespace zak
