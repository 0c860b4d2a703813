#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "zak/field.hpp"
#include "zak/interactions.hpp"
#include "zak/littlewood_paley.hpp"
#include "zak/transform.hpp"

using namespace zak;

namespace {

RadialField random_physical(const GridPtr& g, unsigned seed, double width) {
    RadialField f = make_field(g, Space::physical);
    for (int j = 0; j < g->N; ++j) {
        const double r = g->r[j];
        const double env = std::exp(-r * r / (2.0 * width * width));
        f.values[j] = cplx{env, 0.3 * r * env * (1.0 + 0.1 * (seed % 7))};
    }
    return f;
}

RadialField band_limited(const GridPtr& g, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const DyadicRange dr = dyadic_range(*g);
    RadialField fh = make_field(g, Space::frequency);
    for (int m = 0; m < g->N; ++m) {
        double window = chi_le(g->rho[m], dr.k_max - 1);
        fh.values[m] = cplx{gauss(rng), gauss(rng)} * window * std::exp(-0.05 * g->rho[m]);
    }
    return fh;
}

}  // namespace

TEST_CASE("identity-symbol bilinear operator reproduces the product transform") {
    const GridPtr g = make_grid(64.0, 256);
    const RadialField f = random_physical(g, 1, 1.0);
    const RadialField h = random_physical(g, 2, 1.3);
    const RadialField prod_hat = forward_transform(pointwise_product(f, h));
    const BilinearSymbol one{[](double, double, double) { return 1.0; }};
    const RadialField bil =
        radial_bilinear_apply(one, forward_transform(f), forward_transform(h));
    CHECK(sample_l2_diff(bil, prod_hat) / sample_l2(prod_hat) <= 1e-3);
}

TEST_CASE("parallel and serial bilinear paths agree") {
    const GridPtr g = make_grid(16.0, 128);
    const RadialField fh = forward_transform(random_physical(g, 3, 1.0));
    const RadialField gh = forward_transform(random_physical(g, 4, 2.0));
    const BilinearSymbol m{[](double t, double s, double rho) {
        return std::cos(0.1 * t) * std::exp(-0.01 * s * s) / (1.0 + rho);
    }};
    const RadialField a = radial_bilinear_apply(m, fh, gh);
    const RadialField b = ref::radial_bilinear_apply(m, fh, gh);
    CHECK(sample_l2_diff(a, b) <= 1e-13 * sample_l2(b));
}

TEST_CASE("resonance phase function and triangle guard") {
    CHECK(resonance_omega(1.0, 2.0, 2.5, 1.0) ==
          doctest::Approx(-2.5 * 2.5 + 1.0 + 4.0));
    CHECK_THROWS_AS(resonance_omega(1.0, 1.0, 5.0, 1.0), std::domain_error);
}

TEST_CASE("interaction pieces reassemble the full product") {
    const GridPtr g = make_grid(64.0, 256);
    for (unsigned seed : {10u, 11u, 12u}) {
        const RadialField uh = band_limited(g, seed);
        const RadialField vh = band_limited(g, seed + 100);
        const RadialField u = inverse_transform(uh);
        const RadialField v = inverse_transform(vh);
        const RadialField full = forward_transform(pointwise_product(u, v));

        RadialField sum = interaction_product(uh, vh, InteractionKind::LH);
        sum += interaction_product(uh, vh, InteractionKind::HL);
        sum += interaction_product(uh, vh, InteractionKind::HH);
        CHECK(sample_l2_diff(sum, full) / sample_l2(full) <= 1e-10);

        // the alpha-band split partitions HL and LH
        RadialField hl = interaction_product(uh, vh, InteractionKind::AlphaL);
        hl += interaction_product(uh, vh, InteractionKind::XL);
        const RadialField hl_direct = interaction_product(uh, vh, InteractionKind::HL);
        CHECK(sample_l2_diff(hl, hl_direct) / sample_l2(hl_direct) <= 1e-12);

        RadialField lh = interaction_product(uh, vh, InteractionKind::LAlpha);
        lh += interaction_product(uh, vh, InteractionKind::LX);
        const RadialField lh_direct = interaction_product(uh, vh, InteractionKind::LH);
        CHECK(sample_l2_diff(lh, lh_direct) / sample_l2(lh_direct) <= 1e-12);
    }
}

TEST_CASE("banded kernel parallel/serial agreement and finiteness") {
    const GridPtr g = make_grid(32.0, 256);
    const RadialField fh = band_limited(g, 21);
    const RadialField gh = band_limited(g, 22);
    const BandedBilinearKernel& kern = omega_kernel(g, 1.0);
    const RadialField a = kern.apply(fh, gh);
    const RadialField b = kern.apply_serial(fh, gh);
    CHECK(all_finite(a));
    CHECK(sample_l2_diff(a, b) == 0.0);

    const BandedBilinearKernel& tk = omega_tilde_kernel(g, 1.0);
    const RadialField c = tk.apply(fh, gh);
    CHECK(all_finite(c));
    CHECK(sample_l2_diff(c, tk.apply_serial(fh, gh)) == 0.0);
}

TEST_CASE("normal-form operators are bilinear") {
    const GridPtr g = make_grid(32.0, 256);
    const RadialField a = band_limited(g, 31);
    const RadialField b = band_limited(g, 32);
    const RadialField c = band_limited(g, 33);
    const cplx lam{0.7, -0.3};
    const RadialField lhs = omega_transform(a, lam * b + c, 1.0);
    RadialField rhs = lam * omega_transform(a, b, 1.0);
    rhs += omega_transform(a, c, 1.0);
    CHECK(sample_l2_diff(lhs, rhs) <= 1e-12 * sample_l2(rhs));
}

TEST_CASE("resonance quotient scan stays within the advertised bounds") {
    const GridPtr g = make_grid(32.0, 128);
    for (double alpha : {0.5, 1.0, 2.0}) {
        const ResonanceScan s = scan_resonance(*g, alpha);
        CHECK(s.count > 0);
        CHECK(s.c_min >= 1.0 / 16.0);
        CHECK(s.c_max <= 8.0);
        // determinism
        const ResonanceScan s2 = scan_resonance(*g, alpha);
        CHECK(s.c_min == s2.c_min);
        CHECK(s.c_max == s2.c_max);
        CHECK(s.count == s2.count);
    }
    const ResonanceScan t = scan_resonance_tilde(*g, 1.0);
    CHECK(t.count > 0);
    CHECK(t.c_min > 0.0);
    CHECK(std::isfinite(t.c_max));
}
