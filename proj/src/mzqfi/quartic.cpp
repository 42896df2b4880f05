// Copyright 2026 The mzqfi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mzqfi/quartic.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>

#include "mzqfi/errors.hpp"

namespace mzqfi {

double QuarticCoeffs::eval(double x) const {
    return (((a4 * x + a3) * x + a2) * x + a1) * x + a0;
}

double QuarticCoeffs::max_abs() const {
    return std::max({std::abs(a4), std::abs(a3), std::abs(a2), std::abs(a1), std::abs(a0)});
}

namespace {

struct Poly {
    // Highest degree first, already scaled so max |c| = 1.
    std::array<double, 5> c{};

    double value(double x) const {
        double v = 0;
        for (double k : c) {
            v = v * x + k;
        }
        return v;
    }
    double slope(double x) const {
        double v = 0;
        for (int i = 0; i < 4; i++) {
            v = v * x + c[i] * (4 - i);
        }
        return v;
    }
};

// Newton steps confined to a sign-change bracket when one exists near x,
// otherwise plain Newton keeping the best iterate.
double polish(const Poly &p, double x) {
    constexpr double kWindow = 1e-6;
    double lo = x - kWindow;
    double hi = x + kWindow;
    double flo = p.value(lo);
    double fhi = p.value(hi);
    if (flo == 0) {
        return lo;
    }
    if (fhi == 0) {
        return hi;
    }
    if ((flo < 0) != (fhi < 0)) {
        for (int it = 0; it < 100 && hi - lo > 1e-16 * std::max(1.0, std::abs(x)); it++) {
            double fx = p.value(x);
            if (fx == 0) {
                return x;
            }
            if ((fx < 0) == (flo < 0)) {
                lo = x;
                flo = fx;
            } else {
                hi = x;
            }
            double d = p.slope(x);
            double next = d != 0 ? x - fx / d : lo - 1;
            x = (next > lo && next < hi) ? next : 0.5 * (lo + hi);
        }
        return x;
    }
    double best = x;
    double best_res = std::abs(p.value(x));
    for (int it = 0; it < 30; it++) {
        double d = p.slope(x);
        if (d == 0) {
            break;
        }
        x -= p.value(x) / d;
        double r = std::abs(p.value(x));
        if (r < best_res) {
            best = x;
            best_res = r;
        }
    }
    return best;
}

}  // namespace

std::vector<double> solve_quartic(const QuarticCoeffs &q) {
    double m = q.max_abs();
    if (!std::isfinite(m)) {
        fail(ErrorCode::InvalidArgument, "quartic coefficients must be finite");
    }
    if (m == 0) {
        fail(ErrorCode::AllCoeffsZero, "all quartic coefficients are zero");
    }
    Poly p;
    p.c = {q.a4 / m, q.a3 / m, q.a2 / m, q.a1 / m, q.a0 / m};

    int lead = 0;
    while (lead < 4 && std::abs(p.c[lead]) <= 1e-13) {
        p.c[lead] = 0;
        lead++;
    }
    int degree = 4 - lead;
    std::vector<double> raw;
    if (degree == 0) {
        return {};
    }
    if (degree == 1) {
        raw.push_back(-p.c[4] / p.c[3]);
    } else {
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
        for (int i = 0; i < degree; i++) {
            companion(0, i) = -p.c[lead + 1 + i] / p.c[lead];
        }
        for (int i = 1; i < degree; i++) {
            companion(i, i - 1) = 1;
        }
        Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
        for (const auto &z : solver.eigenvalues()) {
            if (std::abs(z.imag()) <= 1e-6 * std::max(1.0, std::abs(z))) {
                raw.push_back(z.real());
            }
        }
    }

    std::vector<double> roots;
    for (double x : raw) {
        if (x < -1.5 || x > 1.5) {
            continue;
        }
        x = polish(p, x);
        if (std::abs(p.value(x)) > 1e-9 || x < -1 - 1e-9 || x > 1 + 1e-9) {
            continue;
        }
        roots.push_back(std::clamp(x, -1.0, 1.0));
    }
    std::sort(roots.begin(), roots.end());
    std::vector<double> unique;
    for (double x : roots) {
        if (unique.empty() || x - unique.back() > 1e-9) {
            unique.push_back(x);
        }
    }
    return unique;
}

QuarticCoeffs asym_quartic(const CoeffBundle &b) {
    const auto &c = b.c;
    QuarticCoeffs q;
    q.a4 = 16 * (c[1] * c[1] + 4 * c[2] * c[2]);
    q.a3 = 16 * (4 * c[2] * c[3] + c[1] * c[4]);
    q.a2 = 4 * (4 * c[3] * c[3] - 4 * c[2] * c[2] - c[1] * c[1] + c[4] * c[4]);
    q.a1 = -4 * (2 * c[2] * c[3] + c[1] * c[4]);
    q.a0 = c[2] * c[2] - c[4] * c[4];
    return q;
}

}  // namespace mzqfi
