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

#include <gtest/gtest.h>

#include "helpers.h"
#include "qarrow/linear.h"

using namespace qarrow;
using qarrow_test::TestRng;

namespace {

const double kR = 1 / std::sqrt(2.0);

void expect_amplitudes(const StateVector &v, std::vector<Amplitude> expected, double tol = 1e-12) {
    ASSERT_EQ(v.size(), expected.size());
    for (std::size_t i = 0; i < v.size(); i++) {
        EXPECT_NEAR(std::abs(v[i] - expected[i]), 0, tol) << "index " << i;
    }
}

}  // namespace

TEST(vector, return_is_a_unit_vector) {
    expect_amplitudes(vec_return(bool_basis(), "False"), {1, 0});
    expect_amplitudes(vec_return(bool_basis(), "True"), {0, 1});
    expect_amplitudes(vec_return(bool_power(2), "(True,True)"), {0, 0, 0, 1});
    EXPECT_THROW(vec_return(bool_basis(), "Maybe"), std::invalid_argument);
    EXPECT_THROW(vec_return(bool_basis(), 2), std::invalid_argument);
}

TEST(vector, bind_applies_gates) {
    expect_amplitudes(vec_bind(named_state("qFT"), hadamard()), {1, 0});
    expect_amplitudes(vec_bind(named_state("qFalse"), qnot()), {0, 1});
    expect_amplitudes(vec_bind(tensor(named_state("qFT"), named_state("qFalse")), controlled(qnot())),
                      {kR, 0, 0, kR});
    EXPECT_THROW(vec_bind(named_state("epr"), hadamard()), std::invalid_argument);
}

TEST(vector, arithmetic) {
    auto f = named_state("qFalse");
    auto t = named_state("qTrue");
    expect_amplitudes(scale(kR, plus(f, t)), {kR, kR});
    expect_amplitudes(scale(kR, minus(f, t)), {kR, -kR});
    TestRng rng(1);
    for (int k = 0; k < 20; k++) {
        auto v = rng.vector(bool_power(2));
        EXPECT_EQ(max_abs_diff(plus(v, zero(v.basis())), v), 0);
    }
    EXPECT_THROW(plus(f, named_state("epr")), std::invalid_argument);
}

TEST(vector, tensor) {
    expect_amplitudes(tensor(named_state("qFT"), named_state("qFalse")), {kR, 0, kR, 0});
    expect_amplitudes(tensor(named_state("qFalse"), named_state("qFalse")), {1, 0, 0, 0});
    expect_amplitudes(tensor(named_state("qFT"), named_state("qFT")), {0.5, 0.5, 0.5, 0.5});
    EXPECT_EQ(tensor(named_state("qFT"), named_state("epr")).basis(),
              product({bool_basis(), bool_power(2)}));
}

TEST(vector, dot) {
    EXPECT_NEAR(std::abs(dot(named_state("qFT"), named_state("qFT")) - 1.0), 0, 1e-12);
    EXPECT_NEAR(std::abs(dot(named_state("qFT"), named_state("qFmT"))), 0, 1e-12);
    EXPECT_EQ(dot(named_state("qFalse"), named_state("qTrue")), Amplitude(0));
    StateVector i(bool_basis(), {Amplitude(0, 1), 0});
    EXPECT_EQ(dot(i, named_state("qFalse")), Amplitude(0, -1));
    TestRng rng(2);
    for (int k = 0; k < 20; k++) {
        auto v = rng.vector(bool_power(3));
        auto d = dot(v, v);
        EXPECT_NEAR(d.imag(), 0, 1e-12);
        EXPECT_GE(d.real(), 0);
    }
}

TEST(vector, named_states) {
    expect_amplitudes(named_state("epr"), {kR, 0, 0, kR});
    expect_amplitudes(named_state("qFT"), {kR, kR});
    expect_amplitudes(named_state("p1"), {kR, 0, kR, 0});
    expect_amplitudes(named_state("p2"), {kR, kR, 0, 0});
    expect_amplitudes(named_state("p3"), {0.5, 0.5, 0.5, 0.5});
    EXPECT_NEAR(std::abs(dot(named_state("epr"), named_state("epr")) - 1.0), 0, 1e-12);
    try {
        named_state("bell");
        FAIL();
    } catch (const std::invalid_argument &e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("epr"), std::string::npos);
        EXPECT_NE(msg.find("qFmT"), std::string::npos);
    }
}

TEST(vector, monad_laws_hold_pointwise) {
    TestRng rng(3);
    std::vector<Basis> bases = {bool_basis(), bool_power(2), bool_power(3)};
    for (const auto &a : bases) {
        for (const auto &b : bases) {
            auto f = rng.linear(a, b);
            for (std::size_t x = 0; x < a.size(); x++) {
                EXPECT_LE(max_abs_diff(vec_bind(vec_return(a, x), f), f.row(x)), 1e-12);
            }
            auto v = rng.vector(a);
            auto back = vec_bind(v, a, [&](std::size_t y) { return vec_return(a, y); });
            EXPECT_LE(max_abs_diff(back, v), 1e-12);
            for (const auto &c : bases) {
                auto g = rng.linear(b, c);
                auto lhs = vec_bind(vec_bind(v, f), g);
                auto rhs = vec_bind(v, c, [&](std::size_t y) { return vec_bind(f.row(y), g); });
                EXPECT_LE(max_abs_diff(lhs, rhs), 1e-9);
            }
        }
    }
}

TEST(vector, bind_is_bilinear) {
    TestRng rng(4);
    for (int k = 0; k < 20; k++) {
        auto v = rng.vector(bool_power(2));
        auto w = rng.vector(bool_power(2));
        auto f = rng.linear(bool_power(2), bool_basis());
        Amplitude s = rng.amplitude();
        EXPECT_LE(max_abs_diff(vec_bind(plus(v, w), f), plus(vec_bind(v, f), vec_bind(w, f))), 1e-12);
        EXPECT_LE(max_abs_diff(vec_bind(scale(s, v), f), scale(s, vec_bind(v, f))), 1e-12);
    }
}

TEST(vector, nothing_normalizes) {
    StateVector v(bool_basis(), {3, 4});
    auto image = vec_bind(v, identity(bool_basis()));
    EXPECT_EQ(image[0], Amplitude(3));
    EXPECT_EQ(image[1], Amplitude(4));
}
