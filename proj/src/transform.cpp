#include "zak/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace zak {

namespace {

constexpr double kPi = std::numbers::pi;

// One cached DST-I plan (with scratch buffers) per grid size.
struct DstPlan {
    fftw_plan plan = nullptr;
    double* in = nullptr;
    double* out = nullptr;
    int n = 0;

    explicit DstPlan(int n_) : n(n_) {
        in = fftw_alloc_real(n);
        out = fftw_alloc_real(n);
        plan = fftw_plan_r2r_1d(n, in, out, FFTW_RODFT00, FFTW_ESTIMATE);
    }
    ~DstPlan() {
        fftw_destroy_plan(plan);
        fftw_free(in);
        fftw_free(out);
    }
};

std::mutex g_plan_mutex;
std::map<int, std::unique_ptr<DstPlan>>& plan_cache() {
    static std::map<int, std::unique_ptr<DstPlan>> cache;
    return cache;
}

// y_m = sum_{j=1}^{N} x_j sin(pi m j / (N+1)), m = 1..N.
// (FFTW RODFT00 computes twice this sum.)
void dst1(const std::vector<double>& x, std::vector<double>& y) {
    const int n = static_cast<int>(x.size());
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<DstPlan>(n)).first;
    DstPlan& p = *it->second;
    for (int j = 0; j < n; ++j) p.in[j] = x[j];
    fftw_execute(p.plan);
    y.resize(n);
    for (int m = 0; m < n; ++m) y[m] = 0.5 * p.out[m];
}

}  // namespace

RadialField forward_transform(const RadialField& f) {
    require_space(f, Space::physical, "forward_transform");
    const RadialGrid& g = *f.grid;
    std::vector<double> re(g.N), im(g.N), re_t, im_t;
    for (int j = 0; j < g.N; ++j) {
        re[j] = g.r[j] * f.values[j].real();
        im[j] = g.r[j] * f.values[j].imag();
    }
    dst1(re, re_t);
    dst1(im, im_t);
    RadialField out = make_field(f.grid, Space::frequency);
    const double c = 4.0 * kPi * g.dr;
    for (int m = 0; m < g.N; ++m)
        out.values[m] = cplx{re_t[m], im_t[m]} * (c / g.rho[m]);
    return out;
}

RadialField inverse_transform(const RadialField& fhat) {
    require_space(fhat, Space::frequency, "inverse_transform");
    const RadialGrid& g = *fhat.grid;
    std::vector<double> re(g.N), im(g.N), re_t, im_t;
    for (int m = 0; m < g.N; ++m) {
        re[m] = g.rho[m] * fhat.values[m].real();
        im[m] = g.rho[m] * fhat.values[m].imag();
    }
    dst1(re, re_t);
    dst1(im, im_t);
    RadialField out = make_field(fhat.grid, Space::physical);
    const double c = g.drho / (2.0 * kPi * kPi);
    for (int j = 0; j < g.N; ++j)
        out.values[j] = cplx{re_t[j], im_t[j]} * (c / g.r[j]);
    return out;
}

RadialField to_space(const RadialField& f, Space s) {
    if (f.space == s) return f;
    return s == Space::frequency ? forward_transform(f) : inverse_transform(f);
}

RadialField apply_radial_multiplier(const RadialField& fhat, const std::function<cplx(double)>& m) {
    require_space(fhat, Space::frequency, "apply_radial_multiplier");
    const RadialGrid& g = *fhat.grid;
    RadialField out = fhat;
    for (int k = 0; k < g.N; ++k) {
        const cplx mv = m(g.rho[k]);
        if (!std::isfinite(mv.real()) || !std::isfinite(mv.imag()))
            throw std::domain_error("apply_radial_multiplier: multiplier is singular at a grid node");
        out.values[k] *= mv;
    }
    return out;
}

RadialField apply_radial_multiplier(const RadialField& fhat, const std::function<double(double)>& m) {
    return apply_radial_multiplier(fhat, std::function<cplx(double)>([&m](double rho) {
        return cplx{m(rho), 0.0};
    }));
}

RadialField schrodinger_propagate(const RadialField& fhat, double t) {
    return apply_radial_multiplier(fhat, std::function<cplx(double)>([t](double rho) {
        return std::polar(1.0, t * rho * rho);
    }));
}

RadialField wave_propagate(const RadialField& fhat, double t, double alpha) {
    return apply_radial_multiplier(fhat, std::function<cplx(double)>([t, alpha](double rho) {
        return std::polar(1.0, alpha * t * rho);
    }));
}

namespace ref {

RadialField forward_transform(const RadialField& f) {
    require_space(f, Space::physical, "ref::forward_transform");
    const RadialGrid& g = *f.grid;
    RadialField out = make_field(f.grid, Space::frequency);
    const double c = 4.0 * kPi * g.dr;
    for (int m = 0; m < g.N; ++m) {
        cplx acc{0.0, 0.0};
        for (int j = 0; j < g.N; ++j)
            acc += f.values[j] * (g.r[j] * std::sin(g.rho[m] * g.r[j]));
        out.values[m] = acc * (c / g.rho[m]);
    }
    return out;
}

RadialField inverse_transform(const RadialField& fhat) {
    require_space(fhat, Space::frequency, "ref::inverse_transform");
    const RadialGrid& g = *fhat.grid;
    RadialField out = make_field(fhat.grid, Space::physical);
    const double c = g.drho / (2.0 * kPi * kPi);
    for (int j = 0; j < g.N; ++j) {
        cplx acc{0.0, 0.0};
        for (int m = 0; m < g.N; ++m)
            acc += fhat.values[m] * (g.rho[m] * std::sin(g.rho[m] * g.r[j]));
        out.values[j] = acc * (c / g.r[j]);
    }
    return out;
}

}  // namespace ref

}  // namespace zak
