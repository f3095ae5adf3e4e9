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

#ifndef QARROW_LINEAR_H
#define QARROW_LINEAR_H

#include <functional>
#include <string_view>
#include <vector>

#include "qarrow/vector.h"

namespace qarrow {

/// A linear map given by its action on each input basis element.
///
/// Stored as a dense |in| x |out| matrix where entry (a, b) is the amplitude of
/// output element b in the image of input element a. Note this is the
/// transpose of the usual column convention: row a is the image vector of a.
class LinearOp {
   public:
    /// The zero operator.
    LinearOp(Basis in, Basis out);
    /// `entries` is row-major, |in| rows of |out| amplitudes.
    LinearOp(Basis in, Basis out, std::vector<Amplitude> entries);
    /// One image vector per input element.
    static LinearOp from_rows(Basis in, const std::vector<StateVector> &rows);

    const Basis &in() const {
        return in_;
    }
    const Basis &out() const {
        return out_;
    }
    Amplitude operator()(std::size_t a, std::size_t b) const {
        return entries_[a * out_.size() + b];
    }
    Amplitude &at(std::size_t a, std::size_t b) {
        return entries_[a * out_.size() + b];
    }
    /// Image of input element a.
    StateVector row(std::size_t a) const;
    std::span<const Amplitude> entries() const {
        return entries_;
    }

   private:
    Basis in_;
    Basis out_;
    std::vector<Amplitude> entries_;
};

/// Maps input element index to output element index.
using ElementMap = std::function<std::size_t(std::size_t)>;

/// Applies a linear operator to a vector: v >>= f.
StateVector vec_bind(const StateVector &v, const LinearOp &f);

LinearOp identity(const Basis &basis);
LinearOp zero_op(const Basis &in, const Basis &out);
/// Row a is vec_return(fn(a)).
LinearOp fun2lin(const Basis &in, const Basis &out, const ElementMap &fn);

LinearOp qnot();
LinearOp phase();
LinearOp hadamard();
/// Pauli-Z, diag(1, -1).
LinearOp pauli_z();
/// Looks up qnot, phase, hadamard or z by name.
LinearOp gate(std::string_view name);

/// Control on the first component: row (b, a) = return(b) (x) (b ? f(a) : return(a)).
LinearOp controlled(const LinearOp &f);
LinearOp adjoint(const LinearOp &f);
/// Entry (a1, a2) = v(a1) * conj(w(a2)).
LinearOp outer(const StateVector &v, const StateVector &w);
LinearOp lin_plus(const LinearOp &f, const LinearOp &g);
/// Row (a, c) = f(a) (x) g(c).
LinearOp lin_tensor(const LinearOp &f, const LinearOp &g);
/// Diagrammatic composition: f first, then g.
LinearOp compose(const LinearOp &f, const LinearOp &g);

double max_abs_diff(const LinearOp &f, const LinearOp &g);

}  // namespace qarrow

#endif
