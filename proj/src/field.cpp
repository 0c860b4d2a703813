#include "zak/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zak {

GridPtr make_grid(double R, int N) {
    if (!(R > 0.0)) throw std::invalid_argument("make_grid: R must be positive");
    if (N < 8) throw std::invalid_argument("make_grid: N must be at least 8");
    auto g = std::make_shared<RadialGrid>();
    g->R = R;
    g->N = N;
    g->dr = R / (N + 1);
    g->drho = std::numbers::pi / R;
    g->r.resize(N);
    g->rho.resize(N);
    for (int j = 0; j < N; ++j) {
        g->r[j] = (j + 1) * g->dr;
        g->rho[j] = (j + 1) * g->drho;
    }
    return g;
}

RadialField make_field(GridPtr grid, Space space) {
    RadialField f;
    f.grid = std::move(grid);
    f.values.assign(f.grid->N, cplx{0.0, 0.0});
    f.space = space;
    return f;
}

bool all_finite(const RadialField& f) {
    for (const cplx& v : f.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double sample_l2(const RadialField& f) {
    double s = 0.0;
    for (const cplx& v : f.values) s += std::norm(v);
    return std::sqrt(s);
}

double sample_l2_diff(const RadialField& a, const RadialField& b) {
    require_same_grid(a, b, "sample_l2_diff");
    double s = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i) s += std::norm(a.values[i] - b.values[i]);
    return std::sqrt(s);
}

RadialField operator+(const RadialField& a, const RadialField& b) {
    require_same_grid(a, b, "operator+");
    RadialField out = a;
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
}

RadialField operator-(const RadialField& a, const RadialField& b) {
    require_same_grid(a, b, "operator-");
    RadialField out = a;
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
    return out;
}

RadialField operator*(cplx c, const RadialField& f) {
    RadialField out = f;
    for (cplx& v : out.values) v *= c;
    return out;
}

RadialField& operator+=(RadialField& a, const RadialField& b) {
    require_same_grid(a, b, "operator+=");
    for (size_t i = 0; i < a.values.size(); ++i) a.values[i] += b.values[i];
    return a;
}

RadialField conj(const RadialField& f) {
    RadialField out = f;
    for (cplx& v : out.values) v = std::conj(v);
    return out;
}

RadialField pointwise_product(const RadialField& a, const RadialField& b) {
    require_space(a, Space::physical, "pointwise_product");
    require_space(b, Space::physical, "pointwise_product");
    require_same_grid(a, b, "pointwise_product");
    RadialField out = a;
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
    return out;
}

void require_space(const RadialField& f, Space s, const char* where) {
    if (f.space != s)
        throw std::logic_error(std::string(where) + ": field is in the wrong space");
}

void require_same_grid(const RadialField& a, const RadialField& b, const char* where) {
    if (!a.grid || !b.grid || !same_grid(*a.grid, *b.grid))
        throw std::logic_error(std::string(where) + ": fields live on different grids");
}

}  // namespace zak
