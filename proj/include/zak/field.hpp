#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace zak {

using cplx = std::complex<double>;

/// Uniform radial grid on (0,R): r_j = j*dr, j=1..N, with the matching
/// frequency nodes rho_m = m*pi/R, m=1..N. Neither set contains zero,
/// so 1/rho multipliers are always defined on-grid.
struct RadialGrid {
    double R = 0.0;
    int N = 0;
    double dr = 0.0;
    double drho = 0.0;
    std::vector<double> r;
    std::vector<double> rho;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

GridPtr make_grid(double R, int N);

inline bool same_grid(const RadialGrid& a, const RadialGrid& b) {
    return a.N == b.N && a.R == b.R;
}

enum class Space { physical, frequency };

/// A sampled radial function, tagged by which side of the transform it
/// currently lives on.
struct RadialField {
    GridPtr grid;
    std::vector<cplx> values;
    Space space = Space::physical;
};

RadialField make_field(GridPtr grid, Space space);

bool all_finite(const RadialField& f);

/// l2 norm of the raw sample vector (no radial weight).
double sample_l2(const RadialField& f);

/// sample_l2 of (a - b); grids must match.
double sample_l2_diff(const RadialField& a, const RadialField& b);

RadialField operator+(const RadialField& a, const RadialField& b);
RadialField operator-(const RadialField& a, const RadialField& b);
RadialField operator*(cplx c, const RadialField& f);
RadialField& operator+=(RadialField& a, const RadialField& b);

RadialField conj(const RadialField& f);

/// Pointwise product of two physical-space fields.
RadialField pointwise_product(const RadialField& a, const RadialField& b);

void require_space(const RadialField& f, Space s, const char* where);
void require_same_grid(const RadialField& a, const RadialField& b, const char* where);

}  // namespace zak
