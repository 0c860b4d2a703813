#pragma once

#include <functional>

#include "zak/field.hpp"

namespace zak {

/// Radial 3D Fourier transform, f_hat(rho) = (4*pi/rho) * int_0^inf f(r) sin(rho r) r dr,
/// discretized as a type-I DST of r*f(r). O(N log N) via FFTW.
RadialField forward_transform(const RadialField& f);

/// Exact discrete inverse of forward_transform.
RadialField inverse_transform(const RadialField& fhat);

/// Convenience: return the field in the requested space, transforming if needed.
RadialField to_space(const RadialField& f, Space s);

RadialField apply_radial_multiplier(const RadialField& fhat, const std::function<double(double)>& m);
RadialField apply_radial_multiplier(const RadialField& fhat, const std::function<cplx(double)>& m);

/// Free Schroedinger flow: frequency symbol e^{i t rho^2}.
RadialField schrodinger_propagate(const RadialField& fhat, double t);

/// Free wave flow at speed alpha: frequency symbol e^{i alpha t rho}.
RadialField wave_propagate(const RadialField& fhat, double t, double alpha);

namespace ref {
/// Direct O(N^2) sine-sum versions, kept as the serial reference
/// implementation for testing and benchmarking the FFTW path.
RadialField forward_transform(const RadialField& f);
RadialField inverse_transform(const RadialField& fhat);
}  // namespace ref

}  // namespace zak
