#pragma once
// Shared error type, dimensional constants and small numeric helpers used
// across the library.  Every failure mode carries a stable machine-readable
// code string (e.g. "invalid-dimension") so callers and the CLI can map
// failures to exit codes without parsing prose.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zaremba {

struct error : std::runtime_error {
    std::string code;
    error(std::string code_, const std::string& what_)
        : std::runtime_error(code_ + ": " + what_), code(std::move(code_)) {}
};

inline constexpr double pi = 3.14159265358979323846264338327950288;

// Volume of the unit ball in R^n.  Computed by the two-step recurrence
// w_n = (2*pi/n) * w_{n-2} from the exact seeds w_0 = 1, w_1 = 2, so the
// recurrence identity holds to the last bit by construction (the closed form
// pi^{n/2}/Gamma(n/2+1) agrees to ~1 ulp and is cross-checked in the tests).
inline double unit_ball_volume(int n) {
    if (n < 1) throw error("invalid-dimension", "unit ball volume needs n >= 1");
    double w = (n % 2 == 0) ? 1.0 : 2.0;
    for (int k = (n % 2 == 0) ? 2 : 3; k <= n; k += 2) w *= 2.0 * pi / k;
    return w;
}

// n * w_n = surface area of the unit sphere; appears in every perimeter and
// annulus formula.
inline double sphere_area(int n) { return n * unit_ball_volume(n); }

inline double sqr(double x) { return x * x; }

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

inline std::vector<double> linspace(double a, double b, int nodes) {
    std::vector<double> x(nodes);
    for (int i = 0; i < nodes; ++i)
        x[i] = a + (b - a) * (nodes == 1 ? 0.0 : double(i) / (nodes - 1));
    if (nodes > 1) x.back() = b;
    return x;
}

// 16 log-spaced sample points in (lo, hi); the default abscissa grid for the
// parallel-set inequality checkers.
inline std::vector<double> log_spaced(double lo, double hi, int count = 16) {
    std::vector<double> x(count);
    double la = std::log(lo), lb = std::log(hi);
    for (int i = 0; i < count; ++i)
        x[i] = std::exp(la + (lb - la) * (count == 1 ? 0.0 : double(i) / (count - 1)));
    x.front() = lo;
    x.back() = hi;
    return x;
}

}  // namespace zaremba
