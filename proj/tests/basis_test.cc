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

#include "qarrow/basis.h"

#include <gtest/gtest.h>

using namespace qarrow;

TEST(basis, bool_basis) {
    const Basis &b = bool_basis();
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(b.labels(), (std::vector<std::string>{"False", "True"}));
    EXPECT_EQ(b.index_of("False"), 0u);
    EXPECT_EQ(b.index_of("True"), 1u);
    EXPECT_FALSE(b.is_product());
    EXPECT_EQ(b.arity(), 1u);
    EXPECT_EQ(b.leaf_count(), 1u);
}

TEST(basis, pair_is_row_major) {
    Basis b2 = product({bool_basis(), bool_basis()});
    ASSERT_EQ(b2.size(), 4u);
    EXPECT_EQ(b2.labels(),
              (std::vector<std::string>{"(False,False)", "(False,True)", "(True,False)", "(True,True)"}));
    EXPECT_EQ(b2.index_of({"True", "False"}), 2u);
    EXPECT_EQ(b2.index_of("(True,False)"), 2u);
    EXPECT_EQ(b2.name(), "(Bool,Bool)");
}

TEST(basis, triple) {
    Basis b3 = bool_power(3);
    ASSERT_EQ(b3.size(), 8u);
    EXPECT_EQ(b3.label(0), "(False,False,False)");
    EXPECT_EQ(b3.index_of({"True", "True", "True"}), 7u);
    EXPECT_EQ(b3.arity(), 3u);
    EXPECT_EQ(b3.components(6), (std::vector<std::size_t>{1, 1, 0}));
}

TEST(basis, singleton_product_is_identity) {
    const Basis b[] = {bool_basis()};
    EXPECT_EQ(product(b), bool_basis());
    EXPECT_EQ(bool_power(1), bool_basis());
}

TEST(basis, errors) {
    EXPECT_THROW(product(std::span<const Basis>()), std::invalid_argument);
    EXPECT_THROW(Basis("Empty", {}), std::invalid_argument);
    EXPECT_THROW(Basis("Dup", {"x", "x"}), std::invalid_argument);
    try {
        bool_basis().index_of("Maybe");
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("Maybe"), std::string::npos);
    }
}

TEST(basis, round_trip_every_element) {
    Basis color("Color", {"Red", "Green", "Blue"});
    std::vector<Basis> bases = {bool_basis(), bool_power(2), bool_power(3), color, product({color, bool_basis()}),
                                product({bool_basis(), product({color, bool_basis()})})};
    for (const auto &b : bases) {
        for (std::size_t i = 0; i < b.size(); i++) {
            EXPECT_EQ(b.index_of(b.element_at(i)), i) << b.name();
            auto c = b.components(i);
            EXPECT_EQ(b.from_components(c), i);
            auto leaves = b.leaves(i);
            EXPECT_EQ(b.from_leaves(leaves), i);
        }
    }
}

TEST(basis, nesting_flattens_to_the_same_order) {
    const Basis &b = bool_basis();
    Basis color("Color", {"Red", "Green", "Blue"});
    Basis flat = product({b, color, b});
    Basis right = product({b, product({color, b})});
    Basis left = product({product({b, color}), b});
    ASSERT_EQ(flat.size(), right.size());
    EXPECT_NE(flat, right);
    EXPECT_NE(right, left);
    for (std::size_t i = 0; i < flat.size(); i++) {
        EXPECT_EQ(flat.leaves(i), right.leaves(i));
        EXPECT_EQ(flat.leaves(i), left.leaves(i));
    }
    EXPECT_EQ(right.leaf_count(), 3u);
    auto leaf_bases = right.leaf_bases();
    ASSERT_EQ(leaf_bases.size(), 3u);
    EXPECT_EQ(leaf_bases[1], color);
}

TEST(basis, equality_is_structural) {
    EXPECT_EQ(product({bool_basis(), bool_basis()}), bool_power(2));
    EXPECT_NE(Basis("Bool", {"True", "False"}), bool_basis());
    EXPECT_EQ(Basis("Bool", {"False", "True"}), bool_basis());
}
