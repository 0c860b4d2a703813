#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zak/field.hpp"
#include "zak/verifier.hpp"

using namespace zak;

namespace {

VerifierConfig small_config() {
    VerifierConfig cfg = default_verifier_config(7, 6);
    return cfg;
}

}  // namespace

TEST_CASE("random fields are deterministic and resolution-consistent") {
    VerifierConfig cfg = small_config();
    const RadialField a = random_radial_field(cfg.grid, cfg.fields, 4);
    const RadialField b = random_radial_field(cfg.grid, cfg.fields, 4);
    CHECK(sample_l2_diff(a, b) == 0.0);
    const RadialField c = random_radial_field(cfg.grid, cfg.fields, 5);
    CHECK(sample_l2_diff(a, c) > 0.0);

    // the same (seed,index) describes the same function: the base nodes
    // rho = m pi / R are the even nodes of the doubled grid
    const RadialField fine = random_radial_field(cfg.grid_fine, cfg.fields, 4);
    double max_diff = 0.0;
    for (int m = 0; m < cfg.grid->N; ++m)
        max_diff = std::max(max_diff, std::abs(a.values[m] - fine.values[2 * m + 1]));
    CHECK(max_diff <= 1e-12);
}

TEST_CASE("identity-symbol Coifman-Meyer case is exact Hoelder") {
    const VerifierConfig cfg = small_config();
    const EstimateReport rep = verify_coifman_meyer(cfg, CMSymbol::identity, 2, -1, 4.0, 4.0);
    CHECK(rep.max_ratio <= 1.0 + 1e-6);
    CHECK(rep.max_ratio > 0.0);
    CHECK(rep.pass);
}

TEST_CASE("embedding chain ratios are finite and refinement-stable") {
    const VerifierConfig cfg = small_config();
    for (const EstimateReport& rep : verify_embedding_chain(cfg)) {
        CHECK(std::isfinite(rep.max_ratio));
        CHECK(rep.max_ratio > 0.0);
        CHECK(rep.refinement_factor < 1.5);
        CHECK(rep.pass);
    }
}

TEST_CASE("reports are deterministic for a fixed seed") {
    const VerifierConfig cfg = small_config();
    const auto a = verify_cubic(cfg);
    const auto b = verify_cubic(cfg);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].max_ratio == b[i].max_ratio);
        CHECK(a[i].median_ratio == b[i].median_ratio);
        CHECK(a[i].max_ratio_fine == b[i].max_ratio_fine);
    }
}

TEST_CASE("bilinear estimate reports carry samples and medians") {
    const VerifierConfig cfg = small_config();
    for (const EstimateReport& rep : verify_bilinear_schrodinger(cfg)) {
        CHECK(!rep.samples.empty());
        CHECK(rep.median_ratio <= rep.max_ratio + 1e-15);
        CHECK(std::isfinite(rep.max_ratio));
    }
}
