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

#ifndef QARROW_BASIS_H
#define QARROW_BASIS_H

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qarrow {

/// A finite, ordered set of distinguishable classical values.
///
/// A basis is either atomic (a named list of distinct labels) or a product of
/// other bases. Products are k-ary and keep their factor structure, so
/// `(A,(B,C))` and `((A,B),C)` are different bases even though they enumerate
/// the same flattened tuples. Elements are addressed by their 0-based index in
/// enumeration order; product elements are enumerated row-major (the leftmost
/// factor varies slowest). Bases are immutable and cheap to copy.
class Basis {
   public:
    /// Atomic basis. Throws std::invalid_argument on empty or repeated labels.
    Basis(std::string name, std::vector<std::string> labels);

    std::size_t size() const;
    const std::string &name() const;
    const std::string &label(std::size_t index) const;
    /// Same as label(); the inverse of index_of.
    const std::string &element_at(std::size_t index) const;
    const std::vector<std::string> &labels() const;

    /// Index of an element by label. Product labels are written `(x,y,...)`.
    std::size_t index_of(std::string_view label) const;
    /// Index of a product element given one label per top-level factor.
    std::size_t index_of(std::initializer_list<std::string_view> components) const;
    std::size_t index_of(std::span<const std::string> components) const;

    bool is_product() const;
    /// Number of top-level factors; 1 for an atomic basis.
    std::size_t arity() const;
    const std::vector<Basis> &factors() const;

    /// Top-level component indices of an element (one per factor).
    std::vector<std::size_t> components(std::size_t index) const;
    std::size_t from_components(std::span<const std::size_t> components) const;

    /// Nested-structure view: the atomic bases at the leaves, left to right.
    std::vector<Basis> leaf_bases() const;
    std::size_t leaf_count() const;
    /// Atomic indices of an element's flattened tuple.
    const std::vector<std::size_t> &leaves(std::size_t index) const;
    std::size_t from_leaves(std::span<const std::size_t> leaves) const;

    bool operator==(const Basis &other) const;
    bool operator!=(const Basis &other) const {
        return !(*this == other);
    }

   private:
    struct Data;
    explicit Basis(std::shared_ptr<const Data> data);
    friend Basis product(std::span<const Basis> parts);

    std::shared_ptr<const Data> data_;
};

/// The two-element basis [False, True].
const Basis &bool_basis();

/// Cartesian product of the given bases. A single part is returned unchanged.
/// Throws std::invalid_argument on an empty list.
Basis product(std::span<const Basis> parts);
Basis product(std::initializer_list<Basis> parts);

/// `count` copies of Bool as a flat k-ary product (plain Bool when count == 1).
Basis bool_power(std::size_t count);

}  // namespace qarrow

#endif
