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

#ifndef QARROW_SUPEROP_H
#define QARROW_SUPEROP_H

#include <functional>
#include <span>
#include <vector>

#include "qarrow/density.h"
#include "qarrow/linear.h"

namespace qarrow {

/// A superoperator from densities over A to densities over B.
///
/// Represented as a linear operator from the pair basis A x A to the pair
/// basis B x B: row (a1, a2) is the output density produced by the matrix unit
/// at (a1, a2). Superoperators are the arrows of this library: `arr` lifts
/// pure functions, `compose` sequences, and `first` acts on the left component
/// of a pair while carrying the right component along.
///
/// Nothing restricts a superoperator to be completely positive or trace
/// preserving; `arr` of a non-injective function is allowed and is not
/// physical in general.
class Superoperator {
   public:
    Superoperator(Basis in, Basis out, LinearOp pair_map);

    const Basis &in() const {
        return in_;
    }
    const Basis &out() const {
        return out_;
    }
    /// The (A x A) -> (B x B) matrix.
    const LinearOp &pair_map() const {
        return pair_map_;
    }
    /// Output density for the matrix unit at (a1, a2).
    DensityMatrix block(std::size_t a1, std::size_t a2) const;

   private:
    Basis in_;
    Basis out_;
    LinearOp pair_map_;
};

/// Maps the flattened leaf tuple of an input element to an output leaf tuple.
using LeafMap = std::function<std::vector<std::size_t>(std::span<const std::size_t>)>;

/// Block (a1, a2) = f(a1) (x) conj(f(a2)): conjugation by f.
Superoperator lin2super(const LinearOp &f);
/// Applies s to d (the density-level bind).
DensityMatrix apply(const Superoperator &s, const DensityMatrix &d);

/// Lifts a pure function by applying it to both the vector and the dual index.
Superoperator arr(const Basis &in, const Basis &out, const ElementMap &fn);
/// arr over leaf tuples, for functions that destructure nested products.
Superoperator arr_leaves(const Basis &in, const Basis &out, const LeafMap &fn);
Superoperator arr_identity(const Basis &basis);
/// Pure re-wiring: output leaf k is input leaf `leaf_order[k]`. The two bases
/// may nest their factors differently. Throws unless `leaf_order` is a
/// bijection that matches leaf bases.
Superoperator reshape(const Basis &in, const Basis &out, std::span<const std::size_t> leaf_order);
/// Permutes the top-level factors of a product: output component k is input
/// component `order[k]`. Throws unless `order` is a bijection.
Superoperator permute_arr(const Basis &in, std::span<const std::size_t> order);

/// Sequencing, s first.
Superoperator compose(const Superoperator &s, const Superoperator &t);
Superoperator operator>>(const Superoperator &s, const Superoperator &t);

/// s acting on the left component of A x carried.
Superoperator first(const Superoperator &s, const Basis &carried);
/// s acting on the right component of carried x A.
Superoperator second(const Superoperator &s, const Basis &carried);
/// s on the left and t on the right: first(s) >>> second(t).
Superoperator parallel(const Superoperator &s, const Superoperator &t);

/// Partial trace discarding the left component of a binary product.
Superoperator tr_l(const Basis &pair);
/// Measurement in the basis: A -> A x A, (collapsed state, observed value).
Superoperator meas(const Basis &basis);

struct SuperopDifference {
    bool equal;
    double max_difference;
    /// Location of the largest difference in the pair_map matrix.
    std::size_t row;
    std::size_t col;
};

/// Compares every basis block; by linearity this decides equality on all
/// densities. Throws on shape mismatch.
SuperopDifference extensional_equal(const Superoperator &s, const Superoperator &t, double tol);

}  // namespace qarrow

#endif
