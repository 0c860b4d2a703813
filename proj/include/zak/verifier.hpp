#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zak/field.hpp"

namespace zak {

/// Reproducible random frequency data: per shell k in [k_lo,k_hi], a complex
/// Gaussian amplitude scaled by 2^{-k s_dec} and a random linear phase, so the
/// same (seed,index) describes the same underlying function on every grid.
struct RandomFieldSpec {
    std::uint64_t seed = 1;
    int k_lo = -4;
    int k_hi = 1;
    double s_dec = 1.0;
    int count = 50;
};

RadialField random_radial_field(const GridPtr& grid, const RandomFieldSpec& spec, int index);

struct EstimateSample {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

/// Empirical record for one inequality: per-sample ratios on the base grid,
/// and the max-ratio growth when the resolution is doubled (R and N together,
/// halving the frequency spacing).
struct EstimateReport {
    std::string lemma_id;
    std::vector<EstimateSample> samples;
    double max_ratio = 0.0;
    double median_ratio = 0.0;
    double max_ratio_fine = 0.0;
    double refinement_factor = 0.0;
    int skipped = 0;
    bool pass = false;
};

struct VerifierConfig {
    GridPtr grid;        // base resolution
    GridPtr grid_fine;   // doubled resolution (2R, 2N)
    GridPtr cm_grid;     // geometry for the Coifman-Meyer sweep (higher shells)
    GridPtr cm_grid_fine;
    double alpha = 1.0;
    double eps = 0.1;
    double theta0_schrodinger = 0.06;  // inside (0, 3/8 - 5 eps/2)
    double theta0_wave = 0.12;         // inside (0, 4 eps)
    RandomFieldSpec fields;
};

/// Default desk-scale configuration.
VerifierConfig default_verifier_config(std::uint64_t seed = 1, int count = 50);

std::vector<EstimateReport> verify_bilinear_schrodinger(const VerifierConfig& cfg);
std::vector<EstimateReport> verify_bilinear_wave(const VerifierConfig& cfg);
std::vector<EstimateReport> verify_boundary(const VerifierConfig& cfg);
std::vector<EstimateReport> verify_omega_strichartz(const VerifierConfig& cfg);
std::vector<EstimateReport> verify_cubic(const VerifierConfig& cfg);

enum class CMSymbol { identity, xl_band, d_bracket_omega };

/// ||T_m(f,g)||_r <= C ||f||_p ||g||_q with 1/r = 1/p + 1/q, on random fields
/// localized to shells k1 and k2. The identity symbol is the exact-Hoelder
/// sanity case.
EstimateReport verify_coifman_meyer(const VerifierConfig& cfg, CMSymbol sym, int k1, int k2,
                                    double p, double q);

/// identity case plus a 6-pair shell-offset sweep of the normal-form symbols.
std::vector<EstimateReport> verify_coifman_meyer_suite(const VerifierConfig& cfg);

std::vector<EstimateReport> verify_embedding_chain(const VerifierConfig& cfg);

std::vector<EstimateReport> verify_all(const VerifierConfig& cfg);

}  // namespace zak
