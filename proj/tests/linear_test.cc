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

#include <gtest/gtest.h>

#include "helpers.h"

using namespace qarrow;
using qarrow_test::diff;
using qarrow_test::TestRng;

namespace {

const Amplitude kI(0, 1);
const double kR = 1 / std::sqrt(2.0);

}  // namespace

TEST(linear, fun2lin) {
    EXPECT_EQ(diff(fun2lin(bool_basis(), bool_basis(), [](std::size_t x) { return 1 - x; }), oracle::not2()), 0);
    EXPECT_EQ(max_abs_diff(fun2lin(bool_basis(), bool_basis(), [](std::size_t x) { return x; }),
                           identity(bool_basis())),
              0);
    auto swap = fun2lin(bool_power(2), bool_power(2), [](std::size_t xy) { return (xy % 2) * 2 + xy / 2; });
    oracle::Matrix expected = oracle::zeros(4);
    expected[0][0] = expected[1][2] = expected[2][1] = expected[3][3] = 1;
    EXPECT_EQ(diff(swap, expected), 0);
    EXPECT_THROW(fun2lin(bool_basis(), bool_basis(), [](std::size_t) { return 2; }), std::invalid_argument);
}

TEST(linear, gates) {
    EXPECT_EQ(gate("phase").row(1)[1], kI);
    EXPECT_EQ(gate("phase").row(1)[0], Amplitude(0));
    EXPECT_LE(max_abs_diff(gate("hadamard").row(0), named_state("qFT")), 1e-15);
    EXPECT_LE(max_abs_diff(gate("hadamard").row(1), named_state("qFmT")), 1e-15);
    EXPECT_EQ(gate("z").row(1)[1], Amplitude(-1));
    EXPECT_EQ(gate("qnot").row(0)[1], Amplitude(1));
    EXPECT_THROW(gate("sqrtnot"), std::invalid_argument);
}

TEST(linear, controlled) {
    auto epr = vec_bind(tensor(named_state("qFT"), named_state("qFalse")), controlled(qnot()));
    EXPECT_LE(max_abs_diff(epr, named_state("epr")), 1e-15);

    TestRng rng(5);
    auto f = rng.linear(bool_basis(), bool_basis());
    auto cf = controlled(f);
    const Basis &pair = cf.in();
    for (std::size_t a = 0; a < 2; a++) {
        auto row = cf.row(pair.index_of({"False", bool_basis().label(a)}));
        EXPECT_EQ(max_abs_diff(row, vec_return(pair, a)), 0);
    }

    // diag(1, 1, 1, i), expanded on the four basis elements by hand.
    oracle::Matrix cphase = oracle::zeros(4);
    cphase[0][0] = cphase[1][1] = cphase[2][2] = 1;
    cphase[3][3] = kI;
    EXPECT_EQ(diff(controlled(phase()), cphase), 0);
}

TEST(linear, adjoint) {
    EXPECT_EQ(diff(adjoint(phase()), oracle::aphase2()), 0);
    EXPECT_LE(max_abs_diff(adjoint(hadamard()), hadamard()), 1e-15);
    TestRng rng(6);
    auto f = rng.linear(bool_power(2), bool_basis());
    EXPECT_EQ(adjoint(f).in(), bool_basis());
    EXPECT_EQ(max_abs_diff(adjoint(adjoint(f)), f), 0);
}

TEST(linear, outer) {
    oracle::Matrix p0 = {{1, 0}, {0, 0}};
    oracle::Matrix half = {{0.5, 0.5}, {0.5, 0.5}};
    oracle::Matrix off = {{0, 1}, {0, 0}};
    // outer(v, w) displays as the matrix with entry (a1, a2) = v(a1) conj(w(a2)).
    auto as_matrix = [](const LinearOp &f) {
        oracle::Matrix m = oracle::zeros(f.in().size());
        for (std::size_t a = 0; a < f.in().size(); a++) {
            for (std::size_t b = 0; b < f.out().size(); b++) {
                m[a][b] = f(a, b);
            }
        }
        return m;
    };
    auto close = [](const oracle::Matrix &x, const oracle::Matrix &y) {
        double worst = 0;
        for (std::size_t i = 0; i < x.size(); i++) {
            for (std::size_t j = 0; j < x.size(); j++) {
                worst = std::max(worst, std::abs(x[i][j] - y[i][j]));
            }
        }
        return worst;
    };
    EXPECT_EQ(close(as_matrix(outer(named_state("qFalse"), named_state("qFalse"))), p0), 0);
    EXPECT_LE(close(as_matrix(outer(named_state("qFT"), named_state("qFT"))), half), 1e-15);
    EXPECT_EQ(close(as_matrix(outer(named_state("qFalse"), named_state("qTrue"))), off), 0);
    EXPECT_THROW(outer(named_state("qFalse"), named_state("epr")), std::invalid_argument);
}

TEST(linear, combinations) {
    auto ff = vec_return(bool_power(2), "(False,False)");
    auto ft = vec_return(bool_power(2), "(False,True)");
    EXPECT_EQ(max_abs_diff(vec_bind(ff, lin_tensor(identity(bool_basis()), qnot())), ft), 0);
    TestRng rng(7);
    auto f = rng.linear(bool_basis(), bool_power(2));
    EXPECT_EQ(max_abs_diff(lin_plus(f, zero_op(f.in(), f.out())), f), 0);
    auto hh = lin_tensor(hadamard(), hadamard()).row(0);
    for (std::size_t k = 0; k < 4; k++) {
        EXPECT_NEAR(std::abs(hh[k] - 0.5), 0, 1e-15);
    }
    EXPECT_THROW(lin_plus(f, identity(bool_basis())), std::invalid_argument);
}

TEST(linear, compose) {
    EXPECT_LE(max_abs_diff(compose(hadamard(), hadamard()), identity(bool_basis())), 1e-12);
    EXPECT_EQ(max_abs_diff(compose(qnot(), qnot()), identity(bool_basis())), 0);
    EXPECT_EQ(max_abs_diff(compose(phase(), adjoint(phase())), identity(bool_basis())), 0);
    EXPECT_THROW(compose(hadamard(), controlled(qnot())), std::invalid_argument);
}

TEST(linear, compose_applies_the_first_operator_first) {
    // Column convention: H then phase is phase * H.
    auto h_then_p = compose(hadamard(), phase());
    EXPECT_LE(diff(h_then_p, oracle::multiply(oracle::phase2(), oracle::hadamard2())), 1e-15);
}

TEST(linear, builtin_gates_are_unitary) {
    std::vector<LinearOp> gates = {qnot(), phase(), hadamard(), pauli_z()};
    for (std::size_t k = 0; k < 4; k++) {
        gates.push_back(controlled(gates[k]));
    }
    for (const auto &u : gates) {
        EXPECT_LE(max_abs_diff(compose(adjoint(u), u), identity(u.in())), 1e-12);
        EXPECT_LE(max_abs_diff(compose(u, adjoint(u)), identity(u.in())), 1e-12);
    }
}

TEST(linear, algebraic_properties) {
    TestRng rng(8);
    std::vector<Basis> bases = {bool_basis(), bool_power(2), bool_power(3)};
    for (int k = 0; k < 20; k++) {
        const Basis &a = bases[rng.below(3)];
        const Basis &b = bases[rng.below(3)];
        const Basis &c = bases[rng.below(3)];
        const Basis &d = bases[rng.below(3)];
        auto f = rng.linear(a, b);
        auto g = rng.linear(b, c);
        auto h = rng.linear(c, d);
        EXPECT_LE(max_abs_diff(compose(compose(f, g), h), compose(f, compose(g, h))), 1e-9);
        EXPECT_LE(max_abs_diff(adjoint(compose(f, g)), compose(adjoint(g), adjoint(f))), 1e-12);

        std::vector<std::size_t> ft(a.size()), gt(b.size());
        for (auto &x : ft) {
            x = rng.below(b.size());
        }
        for (auto &x : gt) {
            x = rng.below(c.size());
        }
        auto gf = fun2lin(a, c, [&](std::size_t x) { return gt[ft[x]]; });
        auto fg = compose(fun2lin(a, b, [&](std::size_t x) { return ft[x]; }),
                          fun2lin(b, c, [&](std::size_t x) { return gt[x]; }));
        EXPECT_LE(max_abs_diff(gf, fg), 1e-12);
    }
}
