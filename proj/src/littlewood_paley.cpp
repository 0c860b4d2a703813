#include "zak/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "zak/transform.hpp"

namespace zak {

namespace {

double smooth_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

}  // namespace

double eta0(double x) {
    const double ax = std::abs(x);
    return smooth_step((8.0 / 5.0 - ax) / (8.0 / 5.0 - 5.0 / 4.0));
}

double chi_k(double x, int k) {
    return eta0(x * std::exp2(-k)) - eta0(x * std::exp2(-(k - 1)));
}

double chi_le(double x, int k) {
    return eta0(x * std::exp2(-k));
}

DyadicRange dyadic_range(const RadialGrid& g) {
    DyadicRange dr;
    dr.k_min = static_cast<int>(std::ceil(std::log2(g.rho.front()))) + 1;
    dr.k_max = static_cast<int>(std::floor(std::log2(g.rho.back()))) - 1;
    if (dr.k_max < dr.k_min)
        throw std::invalid_argument("dyadic_range: grid resolves no dyadic shell");
    return dr;
}

ProjectorBank::ProjectorBank(GridPtr grid) : grid_(std::move(grid)) {
    range_ = dyadic_range(*grid_);
    const int n = grid_->N;
    shells_.resize(range_.k_max - range_.k_min + 1);
    for (int k = range_.k_min; k <= range_.k_max; ++k) {
        auto& tab = shells_[k - range_.k_min];
        tab.resize(n);
        for (int m = 0; m < n; ++m) tab[m] = chi_k(grid_->rho[m], k);
    }
    const int lo = at_most_floor();
    at_most_.resize(range_.k_max - lo + 1);
    for (int k = lo; k <= range_.k_max; ++k) {
        auto& tab = at_most_[k - lo];
        tab.resize(n);
        for (int m = 0; m < n; ++m) tab[m] = chi_le(grid_->rho[m], k);
    }
    bottom_ = at_most_[range_.k_min - 1 - lo];
}

const std::vector<double>& ProjectorBank::shell(int k) const {
    if (k < range_.k_min || k > range_.k_max)
        throw std::out_of_range("ProjectorBank::shell: k outside dyadic range");
    return shells_[k - range_.k_min];
}

const std::vector<double>& ProjectorBank::at_most(int k) const {
    if (k < at_most_floor() || k > range_.k_max)
        throw std::out_of_range("ProjectorBank::at_most: k outside table range");
    return at_most_[k - at_most_floor()];
}

const std::vector<double>& ProjectorBank::bottom() const { return bottom_; }

const ProjectorBank& projector_bank(const GridPtr& grid) {
    static std::mutex mtx;
    static std::map<std::pair<int, double>, std::unique_ptr<ProjectorBank>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(grid->N, grid->R);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<ProjectorBank>(grid)).first;
    return *it->second;
}

RadialField project(const RadialField& f, int k, ProjectMode mode) {
    RadialField fhat = to_space(f, Space::frequency);
    const RadialGrid& g = *fhat.grid;
    for (int m = 0; m < g.N; ++m) {
        const double c = mode == ProjectMode::single ? chi_k(g.rho[m], k) : chi_le(g.rho[m], k);
        fhat.values[m] *= c;
    }
    return f.space == Space::frequency ? fhat : inverse_transform(fhat);
}

double lebesgue_norm(const RadialField& f, double p) {
    require_space(f, Space::physical, "lebesgue_norm");
    if (p < 1.0) throw std::invalid_argument("lebesgue_norm: p must be >= 1");
    const RadialGrid& g = *f.grid;
    if (std::isinf(p)) {
        double m = 0.0;
        for (const cplx& v : f.values) m = std::max(m, std::abs(v));
        return m;
    }
    double s = 0.0;
    for (int j = 0; j < g.N; ++j)
        s += std::pow(std::abs(f.values[j]), p) * g.r[j] * g.r[j];
    return std::pow(4.0 * std::numbers::pi * g.dr * s, 1.0 / p);
}

double besov_norm(const RadialField& f, const BesovSpec& spec) {
    if (spec.p < 1.0) throw std::invalid_argument("besov_norm: p must be >= 1");
    RadialField fhat = to_space(f, Space::frequency);
    const ProjectorBank& bank = projector_bank(fhat.grid);
    double acc = 0.0;
    for (int k = bank.range().k_min; k <= bank.range().k_max; ++k) {
        RadialField piece = fhat;
        const auto& tab = bank.shell(k);
        for (int m = 0; m < fhat.grid->N; ++m) piece.values[m] *= tab[m];
        const double term = std::exp2(k * spec.s) * lebesgue_norm(inverse_transform(piece), spec.p);
        acc += term * term;
    }
    return std::sqrt(acc);
}

double sobolev_norm(const RadialField& f, double s, double p) {
    RadialField fhat = to_space(f, Space::frequency);
    fhat = apply_radial_multiplier(fhat, std::function<double(double)>([s](double rho) {
        return std::pow(1.0 + rho * rho, 0.5 * s);
    }));
    return lebesgue_norm(inverse_transform(fhat), p);
}

double homogeneous_sobolev_norm(const RadialField& f, double s) {
    RadialField fhat = to_space(f, Space::frequency);
    fhat = apply_radial_multiplier(fhat, std::function<double(double)>([s](double rho) {
        return std::pow(rho, s);
    }));
    return lebesgue_norm(inverse_transform(fhat), 2.0);
}

double q_of(double eps) {
    const double inv = 0.25 + eps / 3.0;
    if (!(inv > 0.0) || inv > 1.0) throw std::invalid_argument("q_of: eps out of range");
    return 1.0 / inv;
}

}  // namespace zak
