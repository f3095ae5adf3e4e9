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

#include "qarrow/linear.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qarrow {

LinearOp::LinearOp(Basis in, Basis out)
    : in_(std::move(in)), out_(std::move(out)), entries_(in_.size() * out_.size()) {
}

LinearOp::LinearOp(Basis in, Basis out, std::vector<Amplitude> entries)
    : in_(std::move(in)), out_(std::move(out)), entries_(std::move(entries)) {
    if (entries_.size() != in_.size() * out_.size()) {
        throw std::invalid_argument("operator " + in_.name() + " -> " + out_.name() + " has wrong entry count");
    }
}

LinearOp LinearOp::from_rows(Basis in, const std::vector<StateVector> &rows) {
    if (rows.size() != in.size()) {
        throw std::invalid_argument("need one row per element of " + in.name());
    }
    if (rows.empty()) {
        throw std::invalid_argument("operator needs at least one row");
    }
    LinearOp op(std::move(in), rows[0].basis());
    for (std::size_t a = 0; a < rows.size(); a++) {
        require_same_basis(op.out(), rows[a].basis(), "LinearOp::from_rows");
        for (std::size_t b = 0; b < op.out().size(); b++) {
            op.at(a, b) = rows[a][b];
        }
    }
    return op;
}

StateVector LinearOp::row(std::size_t a) const {
    auto first = entries_.begin() + static_cast<std::ptrdiff_t>(a * out_.size());
    return StateVector(out_, std::vector<Amplitude>(first, first + static_cast<std::ptrdiff_t>(out_.size())));
}

StateVector vec_bind(const StateVector &v, const LinearOp &f) {
    require_same_basis(f.in(), v.basis(), "bind");
    StateVector out(f.out());
    for (std::size_t a = 0; a < v.size(); a++) {
        if (v[a] == Amplitude{}) {
            continue;
        }
        for (std::size_t b = 0; b < out.size(); b++) {
            out[b] += v[a] * f(a, b);
        }
    }
    return out;
}

LinearOp identity(const Basis &basis) {
    return fun2lin(basis, basis, [](std::size_t a) {
        return a;
    });
}

LinearOp zero_op(const Basis &in, const Basis &out) {
    return LinearOp(in, out);
}

LinearOp fun2lin(const Basis &in, const Basis &out, const ElementMap &fn) {
    LinearOp op(in, out);
    for (std::size_t a = 0; a < in.size(); a++) {
        std::size_t b = fn(a);
        if (b >= out.size()) {
            throw std::invalid_argument("fun2lin: function leaves basis " + out.name());
        }
        op.at(a, b) = 1.0;
    }
    return op;
}

LinearOp qnot() {
    return fun2lin(bool_basis(), bool_basis(), [](std::size_t a) {
        return 1 - a;
    });
}

LinearOp phase() {
    LinearOp op(bool_basis(), bool_basis());
    op.at(0, 0) = 1.0;
    op.at(1, 1) = Amplitude(0, 1);
    return op;
}

LinearOp hadamard() {
    return LinearOp::from_rows(bool_basis(), {named_state("qFT"), named_state("qFmT")});
}

LinearOp pauli_z() {
    LinearOp op(bool_basis(), bool_basis());
    op.at(0, 0) = 1.0;
    op.at(1, 1) = -1.0;
    return op;
}

LinearOp gate(std::string_view name) {
    if (name == "qnot") {
        return qnot();
    }
    if (name == "phase") {
        return phase();
    }
    if (name == "hadamard") {
        return hadamard();
    }
    if (name == "z") {
        return pauli_z();
    }
    throw std::invalid_argument("unknown gate '" + std::string(name) + "'; valid gates: qnot, phase, hadamard, z");
}

LinearOp controlled(const LinearOp &f) {
    require_same_basis(f.in(), f.out(), "controlled");
    const Basis &b = bool_basis();
    const Basis &a = f.in();
    Basis in = product({b, a});
    std::vector<StateVector> rows;
    rows.reserve(in.size());
    for (std::size_t control = 0; control < 2; control++) {
        for (std::size_t x = 0; x < a.size(); x++) {
            StateVector target = control ? f.row(x) : vec_return(a, x);
            rows.push_back(tensor(vec_return(b, control), target));
        }
    }
    return LinearOp::from_rows(in, rows);
}

LinearOp adjoint(const LinearOp &f) {
    LinearOp op(f.out(), f.in());
    for (std::size_t a = 0; a < f.in().size(); a++) {
        for (std::size_t b = 0; b < f.out().size(); b++) {
            op.at(b, a) = std::conj(f(a, b));
        }
    }
    return op;
}

LinearOp outer(const StateVector &v, const StateVector &w) {
    require_same_basis(v.basis(), w.basis(), "outer");
    LinearOp op(v.basis(), v.basis());
    for (std::size_t a1 = 0; a1 < v.size(); a1++) {
        for (std::size_t a2 = 0; a2 < w.size(); a2++) {
            op.at(a1, a2) = v[a1] * std::conj(w[a2]);
        }
    }
    return op;
}

LinearOp lin_plus(const LinearOp &f, const LinearOp &g) {
    require_same_basis(f.in(), g.in(), "lin_plus input");
    require_same_basis(f.out(), g.out(), "lin_plus output");
    std::vector<Amplitude> sum(f.entries().begin(), f.entries().end());
    for (std::size_t i = 0; i < sum.size(); i++) {
        sum[i] += g.entries()[i];
    }
    return LinearOp(f.in(), f.out(), std::move(sum));
}

LinearOp lin_tensor(const LinearOp &f, const LinearOp &g) {
    std::vector<StateVector> rows;
    rows.reserve(f.in().size() * g.in().size());
    for (std::size_t a = 0; a < f.in().size(); a++) {
        StateVector fa = f.row(a);
        for (std::size_t c = 0; c < g.in().size(); c++) {
            rows.push_back(tensor(fa, g.row(c)));
        }
    }
    return LinearOp::from_rows(product({f.in(), g.in()}), rows);
}

LinearOp compose(const LinearOp &f, const LinearOp &g) {
    require_same_basis(f.out(), g.in(), "compose");
    const std::size_t n_in = f.in().size();
    const std::size_t n_mid = f.out().size();
    const std::size_t n_out = g.out().size();
    LinearOp op(f.in(), g.out());
    // Fixed i-k-j order so results are bit-identical run to run.
    for (std::size_t a = 0; a < n_in; a++) {
        for (std::size_t m = 0; m < n_mid; m++) {
            Amplitude x = f(a, m);
            if (x == Amplitude{}) {
                continue;
            }
            for (std::size_t c = 0; c < n_out; c++) {
                op.at(a, c) += x * g(m, c);
            }
        }
    }
    return op;
}

double max_abs_diff(const LinearOp &f, const LinearOp &g) {
    require_same_basis(f.in(), g.in(), "max_abs_diff input");
    require_same_basis(f.out(), g.out(), "max_abs_diff output");
    double worst = 0;
    for (std::size_t i = 0; i < f.entries().size(); i++) {
        worst = std::max(worst, std::abs(f.entries()[i] - g.entries()[i]));
    }
    return worst;
}

}  // namespace qarrow
