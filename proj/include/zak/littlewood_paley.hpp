#pragma once

#include "zak/field.hpp"

namespace zak {

/// Smooth cutoff: 1 on |x| <= 5/4, 0 on |x| >= 8/5, monotone in between.
double eta0(double x);

/// chi_k(x) = eta0(x/2^k) - eta0(x/2^{k-1}); supported in [5/8*2^k, 8/5*2^k].
double chi_k(double x, int k);

/// chi_{<=k}(x) = eta0(x/2^k).
double chi_le(double x, int k);

/// Dyadic shells fully resolvable on a grid.
struct DyadicRange {
    int k_min = 0;
    int k_max = 0;
};

DyadicRange dyadic_range(const RadialGrid& g);

/// Precomputed shell cutoff tables at the grid frequency nodes.
/// Shells k_min..k_max plus the bottom bucket chi_{<=k_min-1}; the at_most
/// tables cover k_min-7..k_max so chi_{<=k-5} lookups stay in range.
class ProjectorBank {
public:
    explicit ProjectorBank(GridPtr grid);

    const DyadicRange& range() const { return range_; }
    const std::vector<double>& shell(int k) const;
    const std::vector<double>& at_most(int k) const;
    const std::vector<double>& bottom() const;  // chi_{<=k_min-1}
    int at_most_floor() const { return range_.k_min - 7; }

private:
    GridPtr grid_;
    DyadicRange range_;
    std::vector<std::vector<double>> shells_;
    std::vector<std::vector<double>> at_most_;
    std::vector<double> bottom_;
};

/// Shared per-grid bank (read-only after construction).
const ProjectorBank& projector_bank(const GridPtr& grid);

enum class ProjectMode { single, at_most };

/// P_k f or P_{<=k} f. Accepts either space; the result is returned in the
/// input's space.
RadialField project(const RadialField& f, int k, ProjectMode mode);

/// Weighted radial Lebesgue norm, ||f||_p = (4 pi sum |f(r_j)|^p r_j^2 dr)^{1/p},
/// max over nodes for p = inf. Physical-space input.
double lebesgue_norm(const RadialField& f, double p);

struct BesovSpec {
    double s = 0.0;
    double p = 2.0;  // summation exponent is fixed to 2
};

/// Homogeneous Besov norm over the grid's dyadic range.
double besov_norm(const RadialField& f, const BesovSpec& spec);

/// Inhomogeneous Sobolev norm ||<D>^s f||_{L^p}.
double sobolev_norm(const RadialField& f, double s, double p);

/// Homogeneous L^2 Sobolev norm ||D^s f||_{L^2} (e.g. s = -1 for n_1 data).
double homogeneous_sobolev_norm(const RadialField& f, double s);

/// q(eps) = 12/(3+4 eps), the radial Strichartz Lebesgue exponent.
double q_of(double eps);

}  // namespace zak
