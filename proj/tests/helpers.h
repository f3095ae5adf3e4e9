// Copyright 2026 The qarrow Authors
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

#ifndef QARROW_TESTS_HELPERS_H
#define QARROW_TESTS_HELPERS_H

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "oracle.h"
#include "qarrow/superop.h"

namespace qarrow_test {

using qarrow::Amplitude;

/// Test-side data generator, independent of the library's SeededGenerator.
class TestRng {
   public:
    explicit TestRng(std::uint64_t seed) : engine_(seed) {
    }

    double real() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53 * 2 - 1;
    }
    Amplitude amplitude() {
        double re = real();
        return {re, real()};
    }
    std::size_t below(std::size_t n) {
        return static_cast<std::size_t>(engine_() % n);
    }
    qarrow::StateVector vector(const qarrow::Basis &b) {
        qarrow::StateVector v(b);
        for (std::size_t i = 0; i < v.size(); i++) {
            v[i] = amplitude();
        }
        return v;
    }
    qarrow::LinearOp linear(const qarrow::Basis &in, const qarrow::Basis &out) {
        std::vector<Amplitude> e(in.size() * out.size());
        for (auto &x : e) {
            x = amplitude();
        }
        return qarrow::LinearOp(in, out, e);
    }
    /// A random physical density: a convex mix of three random pure states.
    qarrow::DensityMatrix density(const qarrow::Basis &b) {
        qarrow::DensityMatrix d(b);
        double total = 0;
        std::vector<std::pair<double, qarrow::StateVector>> parts;
        for (int k = 0; k < 3; k++) {
            auto v = vector(b);
            double w = (real() + 1) / std::real(qarrow::dot(v, v));
            total += w * std::real(qarrow::dot(v, v));
            parts.emplace_back(w, v);
        }
        for (auto &[w, v] : parts) {
            auto p = qarrow::pure_density(v);
            for (std::size_t i = 0; i < b.size(); i++) {
                for (std::size_t j = 0; j < b.size(); j++) {
                    d.at(i, j) += w / total * p(i, j);
                }
            }
        }
        return d;
    }
    /// Any density-shaped matrix, possibly unphysical.
    qarrow::DensityMatrix matrix(const qarrow::Basis &b) {
        return qarrow::DensityMatrix(b, vector(qarrow::product({b, b})));
    }

   private:
    std::mt19937_64 engine_;
};

inline double diff(const qarrow::DensityMatrix &d, const oracle::Matrix &m) {
    double worst = 0;
    for (std::size_t i = 0; i < d.dim(); i++) {
        for (std::size_t j = 0; j < d.dim(); j++) {
            worst = std::max(worst, std::abs(d(i, j) - m[i][j]));
        }
    }
    return worst;
}

/// Compares a row-convention operator with a column-convention matrix.
inline double diff(const qarrow::LinearOp &f, const oracle::Matrix &m) {
    double worst = 0;
    for (std::size_t a = 0; a < f.in().size(); a++) {
        for (std::size_t b = 0; b < f.out().size(); b++) {
            worst = std::max(worst, std::abs(f(a, b) - m[b][a]));
        }
    }
    return worst;
}

/// Compares a superoperator with conjugation by a column-convention unitary.
inline double diff_conjugation(const qarrow::Superoperator &s, const oracle::Matrix &u) {
    const std::size_t n = s.in().size();
    double worst = 0;
    for (std::size_t a1 = 0; a1 < n; a1++) {
        for (std::size_t a2 = 0; a2 < n; a2++) {
            for (std::size_t b1 = 0; b1 < n; b1++) {
                for (std::size_t b2 = 0; b2 < n; b2++) {
                    auto expected = oracle::conjugation_entry(u, a1, a2, b1, b2);
                    worst = std::max(worst, std::abs(s.pair_map()(a1 * n + a2, b1 * n + b2) - expected));
                }
            }
        }
    }
    return worst;
}

inline double hermitian_defect(const qarrow::DensityMatrix &d) {
    double worst = 0;
    for (std::size_t i = 0; i < d.dim(); i++) {
        for (std::size_t j = 0; j < d.dim(); j++) {
            worst = std::max(worst, std::abs(d(i, j) - std::conj(d(j, i))));
        }
    }
    return worst;
}

inline qarrow::StateVector from_oracle(const qarrow::Basis &b, const oracle::Vector &v) {
    return qarrow::StateVector(b, std::vector<Amplitude>(v.begin(), v.end()));
}

}  // namespace qarrow_test

#endif
