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

#ifndef QARROW_LAWS_H
#define QARROW_LAWS_H

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qarrow/superop.h"

namespace qarrow {

/// Deterministic source of test data.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Doubles are formed as (x >> 11) * 2^-53 from the raw 64-bit
/// output, and indices as x mod n, so sequences do not depend on the
/// platform's distribution implementations.
class SeededGenerator {
   public:
    explicit SeededGenerator(std::uint64_t seed);

    std::uint64_t seed() const {
        return seed_;
    }
    /// Uniform in [0, 1).
    double uniform();
    /// Real and imaginary parts uniform in [-1, 1).
    Amplitude amplitude();
    /// Uniform in [0, n). Requires n > 0.
    std::size_t below(std::size_t n);

    StateVector vector(const Basis &basis);
    LinearOp linear(const Basis &in, const Basis &out);
    /// A random function as a table: entry a is the image of element a.
    std::vector<std::size_t> function_table(const Basis &in, const Basis &out);

   private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

struct LawReport {
    std::string name;
    std::size_t instances = 0;
    double max_residual = 0;
    bool pass = true;
    /// Describes the instance with the largest residual.
    std::string witness;
};

/// The monad operations under test. Replaceable so that broken
/// implementations can be shown to fail.
struct MonadOps {
    std::function<StateVector(const Basis &, std::size_t)> ret;
    std::function<StateVector(const StateVector &, const Basis &, const std::function<StateVector(std::size_t)> &)>
        bind;
};

/// The arrow operations under test.
struct ArrowOps {
    std::function<Superoperator(const Basis &, const Basis &, const ElementMap &)> arr;
    std::function<Superoperator(const Superoperator &, const Superoperator &)> compose;
    std::function<Superoperator(const Superoperator &, const Basis &)> first;
};

MonadOps library_monad_ops();
ArrowOps library_arrow_ops();

struct NamedArrow {
    std::string name;
    Superoperator op;
};

/// Size-1 basis, Bool, Bool^2, Bool^3.
std::vector<Basis> default_monad_bases();
/// lin2super of H, qnot and CNOT, meas on Bool, trL on Bool^2, arr swap.
std::vector<NamedArrow> default_arrow_pool();

/// Three reports, in law order. For each basis, `n_cases` random instances
/// of each law; targets of random linear operators are drawn from `bases`.
/// Throws if `bases` is empty or `n_cases` is zero.
std::vector<LawReport> check_monad_laws(SeededGenerator &gen, const std::vector<Basis> &bases, std::size_t n_cases,
                                        double tol, const MonadOps &ops = library_monad_ops());

/// Nine reports, in law order. Laws over pool members use every compatible
/// pair or triple; laws about arr use `random_cases` random functions between
/// the bases appearing in the pool. Carried components are Bool, and Bool^2
/// for the right side of law 7. Throws if the pool is empty or a law has no
/// instance.
std::vector<LawReport> check_arrow_laws(SeededGenerator &gen, const std::vector<NamedArrow> &pool, double tol,
                                        const ArrowOps &ops = library_arrow_ops(), std::size_t random_cases = 20);

/// Deliberately broken operations. Each must make at least one law fail.
namespace mutants {

/// bind whose summation omits the last element of the source basis.
MonadOps bind_skipping_last();
/// first that copies d1 into the dual slot instead of carrying d2.
ArrowOps first_dropping_dual();

}  // namespace mutants

}  // namespace qarrow

#endif
