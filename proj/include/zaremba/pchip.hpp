#pragma once
// Shape-preserving monotone cubic interpolation (Fritsch-Carlson slopes,
// Hermite evaluation).  This is the one fitting primitive of the library: the
// Monte-Carlo volume profiles v(delta) are fitted with it and the parallel-set
// speed s(delta) is read off as its derivative.  Monotone data gives a
// monotone interpolant, so fitted profiles can never oscillate.

#include <cmath>
#include <vector>

#include "zaremba/common.hpp"

namespace zaremba {

struct pchip {
    std::vector<double> x, y, slope;

    bool valid() const { return x.size() >= 3 && x.size() == y.size(); }

    // Interior slopes: weighted harmonic mean of adjacent secants, zeroed at
    // local extrema.  Endpoints: non-centred three-point formula with the
    // Fritsch-Carlson clamps.  `left_slope`, when given, anchors the first
    // derivative to a known exact value (clamped into [0, 3*secant], the
    // region where monotonicity of the first cell is preserved).
    static pchip fit(std::vector<double> xs, std::vector<double> ys,
                     const double* left_slope = nullptr) {
        pchip f;
        f.x = std::move(xs);
        f.y = std::move(ys);
        const std::size_t m = f.x.size() - 1;  // cell count
        std::vector<double> h(m), d(m);
        for (std::size_t i = 0; i < m; ++i) {
            h[i] = f.x[i + 1] - f.x[i];
            d[i] = (f.y[i + 1] - f.y[i]) / h[i];
        }
        f.slope.assign(m + 1, 0.0);
        for (std::size_t i = 1; i < m; ++i) {
            if (d[i - 1] * d[i] <= 0.0) {
                f.slope[i] = 0.0;
            } else {
                double w1 = 2.0 * h[i] + h[i - 1];
                double w2 = h[i] + 2.0 * h[i - 1];
                f.slope[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
            }
        }
        auto endpoint = [](double h0, double h1, double d0, double d1) {
            double t = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
            if (t * d0 <= 0.0)
                t = 0.0;
            else if (d0 * d1 < 0.0 && std::fabs(t) > 3.0 * std::fabs(d0))
                t = 3.0 * d0;
            return t;
        };
        f.slope[0] = endpoint(h[0], h[1], d[0], d[1]);
        f.slope[m] = endpoint(h[m - 1], h[m - 2], d[m - 1], d[m - 2]);
        if (left_slope) {
            f.slope[0] = d[0] > 0.0 ? std::min(std::max(*left_slope, 0.0), 3.0 * d[0]) : 0.0;
        }
        return f;
    }

    std::size_t cell(double q) const {
        // first index with x[i] >= q, minus one, clipped into [0, cells-1]
        std::size_t lo = 0, hi = x.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (x[mid] < q)
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo == 0) return 0;
        if (lo >= x.size()) return x.size() - 2;
        return lo - 1;
    }

    double eval(double q) const {
        std::size_t i = cell(q);
        double h = x[i + 1] - x[i];
        double t = (q - x[i]) / h;
        double m0 = slope[i] * h, m1 = slope[i + 1] * h;
        double t2 = t * t, t3 = t2 * t;
        return (2 * t3 - 3 * t2 + 1) * y[i] + (t3 - 2 * t2 + t) * m0 +
               (-2 * t3 + 3 * t2) * y[i + 1] + (t3 - t2) * m1;
    }

    double deriv(double q) const {
        std::size_t i = cell(q);
        double h = x[i + 1] - x[i];
        double t = (q - x[i]) / h;
        double m0 = slope[i] * h, m1 = slope[i + 1] * h;
        double t2 = t * t;
        return ((6 * t2 - 6 * t) * y[i] + (3 * t2 - 4 * t + 1) * m0 +
                (-6 * t2 + 6 * t) * y[i + 1] + (3 * t2 - 2 * t) * m1) /
               h;
    }

    // Inverse of a nondecreasing interpolant by bisection.  80 halvings of
    // the full span put the result far below every tolerance in use.
    double inverse(double value) const {
        double lo = x.front(), hi = x.back();
        for (int k = 0; k < 80; ++k) {
            double mid = 0.5 * (lo + hi);
            if (eval(mid) < value)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }
};

}  // namespace zaremba
