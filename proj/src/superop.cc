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

#include "qarrow/superop.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qarrow {

namespace {

Basis pairs(const Basis &b) {
    return product({b, b});
}

void require_bijection(std::span<const std::size_t> order, std::size_t n, const char *what) {
    if (order.size() != n) {
        throw std::invalid_argument(std::string(what) + ": expected a permutation of " + std::to_string(n) + " positions");
    }
    std::vector<bool> seen(n);
    for (auto k : order) {
        if (k >= n || seen[k]) {
            throw std::invalid_argument(std::string(what) + ": order is not a bijection");
        }
        seen[k] = true;
    }
}

}  // namespace

Superoperator::Superoperator(Basis in, Basis out, LinearOp pair_map)
    : in_(std::move(in)), out_(std::move(out)), pair_map_(std::move(pair_map)) {
    require_same_basis(pairs(in_), pair_map_.in(), "Superoperator input");
    require_same_basis(pairs(out_), pair_map_.out(), "Superoperator output");
}

DensityMatrix Superoperator::block(std::size_t a1, std::size_t a2) const {
    return DensityMatrix(out_, pair_map_.row(a1 * in_.size() + a2));
}

Superoperator lin2super(const LinearOp &f) {
    const std::size_t n_in = f.in().size();
    const std::size_t n_out = f.out().size();
    LinearOp m(pairs(f.in()), pairs(f.out()));
    for (std::size_t a1 = 0; a1 < n_in; a1++) {
        for (std::size_t a2 = 0; a2 < n_in; a2++) {
            const std::size_t row = a1 * n_in + a2;
            for (std::size_t b1 = 0; b1 < n_out; b1++) {
                Amplitude x = f(a1, b1);
                if (x == Amplitude{}) {
                    continue;
                }
                for (std::size_t b2 = 0; b2 < n_out; b2++) {
                    m.at(row, b1 * n_out + b2) = x * std::conj(f(a2, b2));
                }
            }
        }
    }
    return Superoperator(f.in(), f.out(), std::move(m));
}

DensityMatrix apply(const Superoperator &s, const DensityMatrix &d) {
    require_same_basis(s.in(), d.space(), "apply");
    return DensityMatrix(s.out(), vec_bind(d.entries(), s.pair_map()));
}

Superoperator arr(const Basis &in, const Basis &out, const ElementMap &fn) {
    const std::size_t n_in = in.size();
    const std::size_t n_out = out.size();
    std::vector<std::size_t> image(n_in);
    for (std::size_t a = 0; a < n_in; a++) {
        image[a] = fn(a);
        if (image[a] >= n_out) {
            throw std::invalid_argument("arr: function leaves basis " + out.name());
        }
    }
    LinearOp m = fun2lin(pairs(in), pairs(out), [&](std::size_t pair) {
        return image[pair / n_in] * n_out + image[pair % n_in];
    });
    return Superoperator(in, out, std::move(m));
}

Superoperator arr_leaves(const Basis &in, const Basis &out, const LeafMap &fn) {
    return arr(in, out, [&](std::size_t a) {
        return out.from_leaves(fn(in.leaves(a)));
    });
}

Superoperator arr_identity(const Basis &basis) {
    return arr(basis, basis, [](std::size_t a) {
        return a;
    });
}

Superoperator reshape(const Basis &in, const Basis &out, std::span<const std::size_t> leaf_order) {
    require_bijection(leaf_order, in.leaf_count(), "reshape");
    if (out.leaf_count() != in.leaf_count()) {
        throw std::invalid_argument("reshape: " + in.name() + " and " + out.name() + " have different leaf counts");
    }
    auto in_leaves = in.leaf_bases();
    auto out_leaves = out.leaf_bases();
    for (std::size_t k = 0; k < leaf_order.size(); k++) {
        if (out_leaves[k] != in_leaves[leaf_order[k]]) {
            throw std::invalid_argument("reshape: leaf " + std::to_string(k) + " of " + out.name() + " does not match");
        }
    }
    std::vector<std::size_t> order(leaf_order.begin(), leaf_order.end());
    return arr_leaves(in, out, [order](std::span<const std::size_t> leaves) {
        std::vector<std::size_t> shuffled(order.size());
        for (std::size_t k = 0; k < order.size(); k++) {
            shuffled[k] = leaves[order[k]];
        }
        return shuffled;
    });
}

Superoperator permute_arr(const Basis &in, std::span<const std::size_t> order) {
    require_bijection(order, in.arity(), "permute_arr");
    if (!in.is_product()) {
        return arr_identity(in);
    }
    std::vector<Basis> parts;
    for (auto k : order) {
        parts.push_back(in.factors()[k]);
    }
    Basis out = product(parts);
    std::vector<std::size_t> ord(order.begin(), order.end());
    return arr(in, out, [&](std::size_t a) {
        auto c = in.components(a);
        std::vector<std::size_t> shuffled(ord.size());
        for (std::size_t k = 0; k < ord.size(); k++) {
            shuffled[k] = c[ord[k]];
        }
        return out.from_components(shuffled);
    });
}

Superoperator compose(const Superoperator &s, const Superoperator &t) {
    require_same_basis(s.out(), t.in(), ">>>");
    return Superoperator(s.in(), t.out(), compose(s.pair_map(), t.pair_map()));
}

Superoperator operator>>(const Superoperator &s, const Superoperator &t) {
    return compose(s, t);
}

Superoperator first(const Superoperator &s, const Basis &carried) {
    const Basis in = product({s.in(), carried});
    const Basis out = product({s.out(), carried});
    const std::size_t nA = s.in().size();
    const std::size_t nB = s.out().size();
    const std::size_t nD = carried.size();
    const std::size_t n_in = in.size();
    const std::size_t n_out = out.size();
    LinearOp m(pairs(in), pairs(out));
    for (std::size_t a1 = 0; a1 < nA; a1++) {
        for (std::size_t a2 = 0; a2 < nA; a2++) {
            const std::size_t s_row = a1 * nA + a2;
            for (std::size_t b1 = 0; b1 < nB; b1++) {
                for (std::size_t b2 = 0; b2 < nB; b2++) {
                    Amplitude x = s.pair_map()(s_row, b1 * nB + b2);
                    if (x == Amplitude{}) {
                        continue;
                    }
                    // The carried pair (d1, d2) passes through unchanged.
                    for (std::size_t d1 = 0; d1 < nD; d1++) {
                        for (std::size_t d2 = 0; d2 < nD; d2++) {
                            std::size_t row = (a1 * nD + d1) * n_in + (a2 * nD + d2);
                            std::size_t col = (b1 * nD + d1) * n_out + (b2 * nD + d2);
                            m.at(row, col) = x;
                        }
                    }
                }
            }
        }
    }
    return Superoperator(in, out, std::move(m));
}

Superoperator second(const Superoperator &s, const Basis &carried) {
    const std::size_t swap[] = {1, 0};
    Superoperator into = permute_arr(product({carried, s.in()}), swap);
    Superoperator back = permute_arr(product({s.out(), carried}), swap);
    return into >> first(s, carried) >> back;
}

Superoperator parallel(const Superoperator &s, const Superoperator &t) {
    return first(s, t.in()) >> second(t, s.out());
}

Superoperator tr_l(const Basis &pair) {
    if (!pair.is_product() || pair.arity() != 2) {
        throw std::invalid_argument("trL needs a binary product basis, got " + pair.name());
    }
    const Basis &left = pair.factors()[0];
    const Basis &right = pair.factors()[1];
    const std::size_t nA = left.size();
    const std::size_t nB = right.size();
    const std::size_t n_in = pair.size();
    LinearOp m(pairs(pair), pairs(right));
    for (std::size_t a = 0; a < nA; a++) {
        for (std::size_t b1 = 0; b1 < nB; b1++) {
            for (std::size_t b2 = 0; b2 < nB; b2++) {
                m.at((a * nB + b1) * n_in + (a * nB + b2), b1 * nB + b2) = 1.0;
            }
        }
    }
    return Superoperator(pair, right, std::move(m));
}

Superoperator meas(const Basis &basis) {
    const std::size_t n = basis.size();
    const Basis out = product({basis, basis});
    const std::size_t n_out = out.size();
    LinearOp m(pairs(basis), pairs(out));
    for (std::size_t a = 0; a < n; a++) {
        const std::size_t collapsed = a * n + a;
        m.at(a * n + a, collapsed * n_out + collapsed) = 1.0;
    }
    return Superoperator(basis, out, std::move(m));
}

SuperopDifference extensional_equal(const Superoperator &s, const Superoperator &t, double tol) {
    require_same_basis(s.in(), t.in(), "extensional_equal input");
    require_same_basis(s.out(), t.out(), "extensional_equal output");
    SuperopDifference r{true, 0.0, 0, 0};
    const std::size_t cols = s.pair_map().out().size();
    auto x = s.pair_map().entries();
    auto y = t.pair_map().entries();
    for (std::size_t i = 0; i < x.size(); i++) {
        double diff = std::abs(x[i] - y[i]);
        if (std::isnan(diff)) {
            diff = INFINITY;
        }
        if (diff > r.max_difference) {
            r.max_difference = diff;
            r.row = i / cols;
            r.col = i % cols;
        }
    }
    r.equal = r.max_difference <= tol;
    return r;
}

}  // namespace qarrow
