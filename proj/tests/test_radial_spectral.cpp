#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "zak/field.hpp"
#include "zak/transform.hpp"

using namespace zak;

namespace {

constexpr double kPi = 3.14159265358979323846;

RadialField gaussian(const GridPtr& g) {
    RadialField f = make_field(g, Space::physical);
    for (int j = 0; j < g->N; ++j) f.values[j] = cplx{std::exp(-0.5 * g->r[j] * g->r[j]), 0.0};
    return f;
}

RadialField random_like(const GridPtr& g, Space s) {
    RadialField f = make_field(g, s);
    for (int j = 0; j < g->N; ++j) {
        const double x = g->r[j];
        f.values[j] = cplx{std::sin(1.7 * x) * std::exp(-0.01 * x * x),
                           std::cos(0.9 * x) * std::exp(-0.02 * x * x)};
    }
    return f;
}

}  // namespace

TEST_CASE("grid construction and validation") {
    const GridPtr g = make_grid(10.0, 16);
    CHECK(g->dr == doctest::Approx(10.0 / 17.0));
    CHECK(g->drho == doctest::Approx(kPi / 10.0));
    CHECK(g->r.front() == doctest::Approx(g->dr));
    CHECK(g->rho[3] == doctest::Approx(4.0 * kPi / 10.0));
    CHECK_THROWS_AS(make_grid(-1.0, 16), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(10.0, 4), std::invalid_argument);
}

TEST_CASE("gaussian transform matches the closed form") {
    const GridPtr g = make_grid(40.0, 2048);
    const RadialField fhat = forward_transform(gaussian(g));
    double max_rel = 0.0;
    for (int m = 0; m < g->N; ++m) {
        const double rho = g->rho[m];
        if (rho > 5.0) break;  // below the quadrature roundoff floor beyond here
        const double exact = std::pow(2.0 * kPi, 1.5) * std::exp(-0.5 * rho * rho);
        max_rel = std::max(max_rel, std::abs(fhat.values[m].real() - exact) / exact);
        max_rel = std::max(max_rel, std::abs(fhat.values[m].imag()) / exact);
    }
    CHECK(max_rel <= 1e-6);
}

TEST_CASE("round trip is exact to rounding") {
    const GridPtr g = make_grid(25.0, 512);
    const RadialField f = random_like(g, Space::physical);
    const RadialField back = inverse_transform(forward_transform(f));
    CHECK(sample_l2_diff(back, f) / sample_l2(f) <= 1e-12);

    const RadialField fh = random_like(g, Space::frequency);
    const RadialField fwd = forward_transform(inverse_transform(fh));
    CHECK(sample_l2_diff(fwd, fh) / sample_l2(fh) <= 1e-12);
}

TEST_CASE("discrete Plancherel identity") {
    const GridPtr g = make_grid(30.0, 600);
    const RadialField f = random_like(g, Space::physical);
    const RadialField fh = forward_transform(f);
    double phys = 0.0, freq = 0.0;
    for (int j = 0; j < g->N; ++j) {
        phys += std::norm(f.values[j]) * g->r[j] * g->r[j];
        freq += std::norm(fh.values[j]) * g->rho[j] * g->rho[j];
    }
    phys *= 4.0 * kPi * g->dr;
    freq *= g->drho / (2.0 * kPi * kPi);
    CHECK(phys == doctest::Approx(freq).epsilon(1e-12));
}

TEST_CASE("laplacian multiplier reproduces the closed form") {
    const GridPtr g = make_grid(40.0, 2048);
    RadialField fh = forward_transform(gaussian(g));
    fh = apply_radial_multiplier(
        fh, std::function<double(double)>([](double rho) { return -rho * rho; }));
    const RadialField lap = inverse_transform(fh);
    double max_err = 0.0;
    for (int j = 0; j < g->N; ++j) {
        const double r = g->r[j];
        if (r > 10.0) break;
        const double exact = (r * r - 3.0) * std::exp(-0.5 * r * r);
        max_err = std::max(max_err, std::abs(lap.values[j].real() - exact));
    }
    CHECK(max_err <= 1e-6);
}

TEST_CASE("fft path agrees with the direct-sum reference") {
    const GridPtr g = make_grid(20.0, 256);
    const RadialField f = random_like(g, Space::physical);
    const RadialField a = forward_transform(f);
    const RadialField b = ref::forward_transform(f);
    CHECK(sample_l2_diff(a, b) / sample_l2(b) <= 1e-12);

    const RadialField fh = random_like(g, Space::frequency);
    const RadialField c = inverse_transform(fh);
    const RadialField d = ref::inverse_transform(fh);
    CHECK(sample_l2_diff(c, d) / sample_l2(d) <= 1e-12);
}

TEST_CASE("propagators are unitary and invert") {
    const GridPtr g = make_grid(20.0, 256);
    const RadialField fh = random_like(g, Space::frequency);
    const RadialField s = schrodinger_propagate(fh, 0.37);
    CHECK(sample_l2(s) == doctest::Approx(sample_l2(fh)).epsilon(1e-13));
    CHECK(sample_l2_diff(schrodinger_propagate(s, -0.37), fh) <= 1e-12 * sample_l2(fh));
    const RadialField w = wave_propagate(fh, 0.52, 2.0);
    CHECK(sample_l2(w) == doctest::Approx(sample_l2(fh)).epsilon(1e-13));
    CHECK(sample_l2_diff(wave_propagate(w, -0.52, 2.0), fh) <= 1e-12 * sample_l2(fh));
}

TEST_CASE("non-finite multipliers are rejected") {
    const GridPtr g = make_grid(20.0, 256);
    const RadialField fh = random_like(g, Space::frequency);
    CHECK_THROWS_AS(apply_radial_multiplier(
                        fh, std::function<double(double)>([](double) {
                            return std::numeric_limits<double>::quiet_NaN();
                        })),
                    std::domain_error);
    CHECK_THROWS_AS(forward_transform(random_like(g, Space::frequency)), std::logic_error);
}
