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

#ifndef QARROW_VECTOR_H
#define QARROW_VECTOR_H

#include <complex>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "qarrow/basis.h"

namespace qarrow {

using Amplitude = std::complex<double>;

/// A vector of amplitudes indexed by the elements of a basis.
///
/// Vectors form a plain vector space: nothing here normalizes. The amplitude at
/// index i belongs to basis element i in enumeration order.
class StateVector {
   public:
    /// The zero vector over `basis`.
    explicit StateVector(Basis basis);
    StateVector(Basis basis, std::vector<Amplitude> amplitudes);

    const Basis &basis() const {
        return basis_;
    }
    std::size_t size() const {
        return amplitudes_.size();
    }
    Amplitude operator[](std::size_t index) const {
        return amplitudes_[index];
    }
    Amplitude &operator[](std::size_t index) {
        return amplitudes_[index];
    }
    Amplitude at(std::string_view label) const;
    std::span<const Amplitude> amplitudes() const {
        return amplitudes_;
    }

   private:
    Basis basis_;
    std::vector<Amplitude> amplitudes_;
};

/// Unit vector on one basis element (the monadic unit).
StateVector vec_return(const Basis &basis, std::size_t index);
StateVector vec_return(const Basis &basis, std::string_view label);

/// Monadic bind with the continuation given per basis element:
/// result(b) = sum over a of v(a) * next(a)(b). Every continuation result must
/// live over `target`.
StateVector vec_bind(
    const StateVector &v, const Basis &target, const std::function<StateVector(std::size_t)> &next);

StateVector zero(const Basis &basis);
StateVector plus(const StateVector &v, const StateVector &w);
StateVector minus(const StateVector &v, const StateVector &w);
StateVector scale(Amplitude k, const StateVector &v);
/// result(a,b) = v(a) * w(b) over product(v.basis, w.basis).
StateVector tensor(const StateVector &v, const StateVector &w);
/// sum over a of conj(v(a)) * w(a).
Amplitude dot(const StateVector &v, const StateVector &w);

/// One of qFalse, qTrue, qFT, qFmT, epr, p1, p2, p3.
StateVector named_state(std::string_view name);
std::span<const std::string_view> named_state_names();

/// Largest pointwise |v(a) - w(a)|. Throws on basis mismatch.
double max_abs_diff(const StateVector &v, const StateVector &w);

/// Throws std::invalid_argument naming both bases unless they are equal.
void require_same_basis(const Basis &expected, const Basis &actual, std::string_view what);

}  // namespace qarrow

#endif
