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

#include "qarrow/vector.h"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qarrow {

StateVector::StateVector(Basis basis) : basis_(std::move(basis)), amplitudes_(basis_.size()) {
}

StateVector::StateVector(Basis basis, std::vector<Amplitude> amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != basis_.size()) {
        throw std::invalid_argument(
            "vector over " + basis_.name() + " needs " + std::to_string(basis_.size()) + " amplitudes, got " +
            std::to_string(amplitudes_.size()));
    }
}

Amplitude StateVector::at(std::string_view label) const {
    return amplitudes_[basis_.index_of(label)];
}

void require_same_basis(const Basis &expected, const Basis &actual, std::string_view what) {
    if (expected != actual) {
        throw std::invalid_argument(
            std::string(what) + ": basis mismatch, expected " + expected.name() + " but got " + actual.name());
    }
}

StateVector vec_return(const Basis &basis, std::size_t index) {
    if (index >= basis.size()) {
        throw std::invalid_argument("element index " + std::to_string(index) + " is not in basis " + basis.name());
    }
    StateVector v(basis);
    v[index] = 1.0;
    return v;
}

StateVector vec_return(const Basis &basis, std::string_view label) {
    return vec_return(basis, basis.index_of(label));
}

StateVector vec_bind(
    const StateVector &v, const Basis &target, const std::function<StateVector(std::size_t)> &next) {
    StateVector out(target);
    for (std::size_t a = 0; a < v.size(); a++) {
        if (v[a] == Amplitude{}) {
            continue;
        }
        StateVector image = next(a);
        require_same_basis(target, image.basis(), "bind");
        for (std::size_t b = 0; b < out.size(); b++) {
            out[b] += v[a] * image[b];
        }
    }
    return out;
}

StateVector zero(const Basis &basis) {
    return StateVector(basis);
}

StateVector plus(const StateVector &v, const StateVector &w) {
    require_same_basis(v.basis(), w.basis(), "plus");
    StateVector out(v.basis());
    for (std::size_t i = 0; i < v.size(); i++) {
        out[i] = v[i] + w[i];
    }
    return out;
}

StateVector minus(const StateVector &v, const StateVector &w) {
    require_same_basis(v.basis(), w.basis(), "minus");
    StateVector out(v.basis());
    for (std::size_t i = 0; i < v.size(); i++) {
        out[i] = v[i] - w[i];
    }
    return out;
}

StateVector scale(Amplitude k, const StateVector &v) {
    StateVector out(v.basis());
    for (std::size_t i = 0; i < v.size(); i++) {
        out[i] = k * v[i];
    }
    return out;
}

StateVector tensor(const StateVector &v, const StateVector &w) {
    StateVector out(product({v.basis(), w.basis()}));
    for (std::size_t a = 0; a < v.size(); a++) {
        for (std::size_t b = 0; b < w.size(); b++) {
            out[a * w.size() + b] = v[a] * w[b];
        }
    }
    return out;
}

Amplitude dot(const StateVector &v, const StateVector &w) {
    require_same_basis(v.basis(), w.basis(), "dot");
    Amplitude total{};
    for (std::size_t i = 0; i < v.size(); i++) {
        total += std::conj(v[i]) * w[i];
    }
    return total;
}

namespace {

constexpr std::array<std::string_view, 8> kStateNames = {"qFalse", "qTrue", "qFT", "qFmT", "epr", "p1", "p2", "p3"};

}  // namespace

std::span<const std::string_view> named_state_names() {
    return kStateNames;
}

StateVector named_state(std::string_view name) {
    const Basis &b = bool_basis();
    const double r = 1.0 / std::sqrt(2.0);
    StateVector f = vec_return(b, std::size_t{0});
    StateVector t = vec_return(b, std::size_t{1});
    if (name == "qFalse") {
        return f;
    }
    if (name == "qTrue") {
        return t;
    }
    StateVector ft = scale(r, plus(f, t));
    if (name == "qFT") {
        return ft;
    }
    if (name == "qFmT") {
        return scale(r, minus(f, t));
    }
    if (name == "epr") {
        StateVector e(product({b, b}));
        e[e.basis().index_of({"False", "False"})] = r;
        e[e.basis().index_of({"True", "True"})] = r;
        return e;
    }
    if (name == "p1") {
        return tensor(ft, f);
    }
    if (name == "p2") {
        return tensor(f, ft);
    }
    if (name == "p3") {
        return tensor(ft, ft);
    }
    std::string valid;
    for (auto n : kStateNames) {
        valid += valid.empty() ? "" : ", ";
        valid += n;
    }
    throw std::invalid_argument("unknown state '" + std::string(name) + "'; valid names: " + valid);
}

double max_abs_diff(const StateVector &v, const StateVector &w) {
    require_same_basis(v.basis(), w.basis(), "max_abs_diff");
    double worst = 0;
    for (std::size_t i = 0; i < v.size(); i++) {
        worst = std::max(worst, std::abs(v[i] - w[i]));
    }
    return worst;
}

}  // namespace qarrow
