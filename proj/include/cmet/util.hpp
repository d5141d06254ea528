#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>

namespace cmet {

using Complex = std::complex<double>;
using Rng = std::mt19937_64;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Absolute tolerance for comparisons of log-radii (annulus algebra works in
// log space so that moduli like 10^3*pi stay representable).
inline constexpr double kLogTol = 1e-12;

inline double sq(double x) { return x * x; }

inline double cross(Complex a, Complex b) {
    return a.real() * b.imag() - a.imag() * b.real();
}

inline double dot(Complex a, Complex b) {
    return a.real() * b.real() + a.imag() * b.imag();
}

inline bool nearly_equal(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
}

// 8-point Gauss-Legendre rule on [-1, 1].
inline constexpr double kGL8Nodes[8] = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
    0.7966664774136267,  0.9602898564975363};
inline constexpr double kGL8Weights[8] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

inline double uniform(Rng& rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
}

}  // namespace cmet
