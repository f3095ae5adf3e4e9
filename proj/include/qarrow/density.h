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

#ifndef QARROW_DENSITY_H
#define QARROW_DENSITY_H

#include <optional>
#include <string>
#include <vector>

#include "qarrow/vector.h"

namespace qarrow {

/// A density matrix over basis A, stored as a vector over the pair basis A x A.
///
/// Entry (a1, a2) is row a1, column a2. Only the shape is checked on
/// construction; intermediate values of the algebra need not be physical, so
/// hermiticity, positivity and trace are reported by `diagnose` instead.
class DensityMatrix {
   public:
    /// The zero matrix over `space`.
    explicit DensityMatrix(Basis space);
    /// `entries` must live over product(space, space).
    DensityMatrix(Basis space, StateVector entries);

    const Basis &space() const {
        return space_;
    }
    std::size_t dim() const {
        return space_.size();
    }
    Amplitude operator()(std::size_t a1, std::size_t a2) const {
        return entries_[a1 * space_.size() + a2];
    }
    Amplitude &at(std::size_t a1, std::size_t a2) {
        return entries_[a1 * space_.size() + a2];
    }
    /// The underlying vector over space x space.
    const StateVector &entries() const {
        return entries_;
    }

   private:
    Basis space_;
    StateVector entries_;
};

/// The uncurried outer product v >*< v.
DensityMatrix pure_density(const StateVector &v);
/// Real diagonal matrix with the given weights.
DensityMatrix diagonal_density(const Basis &space, const std::vector<double> &weights);
Amplitude trace(const DensityMatrix &d);
double max_abs_diff(const DensityMatrix &d, const DensityMatrix &e);

struct DensityDiagnostics {
    bool hermitian;
    bool psd;
    bool unit_trace;
    /// Largest of: hermiticity defect, negative-eigenvalue depth, |trace - 1|.
    double max_violation;
    double min_eigenvalue;

    bool physical() const {
        return hermitian && psd && unit_trace;
    }
};

/// Physicality report at tolerance `tol` (> 0). Eigenvalues are taken from the
/// Hermitian part of the matrix.
DensityDiagnostics diagnose(const DensityMatrix &d, double tol);

/// JSON object {"basis": [labels], "re": [[...]], "im": [[...]]}. When
/// `decimals` is set, every value is rounded to that many decimal places.
std::string to_json(const DensityMatrix &d, std::optional<int> decimals = std::nullopt);
/// Parses the JSON form. The result lives over an atomic basis built from the
/// listed labels.
DensityMatrix density_from_json(const std::string &text);
/// Parses the JSON form and attaches `space`, whose labels must match.
DensityMatrix density_from_json(const std::string &text, const Basis &space);
/// Aligned text table with row and column labels.
std::string to_text(const DensityMatrix &d, int decimals = 4);

}  // namespace qarrow

#endif
