// Timing comparison: fast transforms / parallel banded kernels vs the serial
// reference implementations, with a cross-check of the results.
#include <chrono>
#include <cmath>
#include <cstdio>

#include "zak/field.hpp"
#include "zak/interactions.hpp"
#include "zak/transform.hpp"

namespace {

using clock_t_ = std::chrono::steady_clock;

double seconds_since(clock_t_::time_point t0) {
    return std::chrono::duration<double>(clock_t_::now() - t0).count();
}

zak::RadialField test_field(const zak::GridPtr& g, double width) {
    zak::RadialField f = zak::make_field(g, zak::Space::physical);
    for (int j = 0; j < g->N; ++j) {
        const double r = g->r[j];
        f.values[j] = zak::cplx{std::exp(-r * r / (2.0 * width * width)), 0.1 * std::sin(r)};
    }
    return f;
}

}  // namespace

int main() {
    std::printf("%-28s %10s %10s %8s %10s\n", "case", "fast[s]", "serial[s]", "speedup",
                "rel.diff");

    for (int N : {512, 1024, 2048}) {
        const zak::GridPtr g = zak::make_grid(N / 16.0, N);
        const zak::RadialField f = test_field(g, 1.0);
        const int reps = 50;

        auto t0 = clock_t_::now();
        zak::RadialField a = zak::forward_transform(f);
        for (int i = 1; i < reps; ++i) a = zak::forward_transform(f);
        const double fast = seconds_since(t0) / reps;

        t0 = clock_t_::now();
        const zak::RadialField b = zak::ref::forward_transform(f);
        const double slow = seconds_since(t0);

        const double diff = zak::sample_l2_diff(a, b) / zak::sample_l2(b);
        std::printf("%-28s %10.3e %10.3e %8.1f %10.2e\n",
                    ("dst N=" + std::to_string(N)).c_str(), fast, slow, slow / fast, diff);
    }

    for (int N : {256, 512}) {
        const zak::GridPtr g = zak::make_grid(N / 2.0, N);
        const zak::RadialField fh = zak::forward_transform(test_field(g, 1.0));
        const zak::RadialField gh = zak::forward_transform(test_field(g, 2.0));
        const zak::BandedBilinearKernel& kern = zak::omega_kernel(g, 1.0);

        auto t0 = clock_t_::now();
        const zak::RadialField a = kern.apply(fh, gh);
        const double fast = seconds_since(t0);

        t0 = clock_t_::now();
        const zak::RadialField b = kern.apply_serial(fh, gh);
        const double slow = seconds_since(t0);

        const double diff = zak::sample_l2_diff(a, b) / zak::sample_l2(b);
        std::printf("%-28s %10.3e %10.3e %8.1f %10.2e\n",
                    ("omega kernel N=" + std::to_string(N)).c_str(), fast, slow, slow / fast,
                    diff);
    }
    return 0;
}
