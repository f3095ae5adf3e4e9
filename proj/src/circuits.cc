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

#include "qarrow/circuits.h"

#include <initializer_list>
#include <stdexcept>

namespace qarrow {

namespace {

const Basis &bit() {
    return bool_basis();
}

const Basis &bit_pair() {
    static const Basis b = product({bit(), bit()});
    return b;
}

const Basis &bit_triple() {
    static const Basis b = bool_power(3);
    return b;
}

// Output leaf k takes input leaf order[k].
Superoperator rewire(const Basis &in, const Basis &out, std::initializer_list<std::size_t> order) {
    return reshape(in, out, std::span<const std::size_t>(order.begin(), order.size()));
}

}  // namespace

LinearOp toffoli_lin() {
    const Basis &b3 = bit_triple();
    const LinearOp h = hadamard();
    const LinearOp cnot = controlled(qnot());
    const LinearOp cphase = controlled(phase());
    const LinearOp caphase = controlled(adjoint(phase()));
    auto pair = [](std::size_t x, std::size_t y) {
        return x * 2 + y;
    };
    auto ret3 = [&](std::size_t t, std::size_t m, std::size_t b) {
        const std::size_t c[] = {t, m, b};
        return vec_return(b3, b3.from_components(c));
    };

    std::vector<StateVector> rows;
    for (std::size_t x = 0; x < b3.size(); x++) {
        auto in = b3.components(x);
        const std::size_t top = in[0], middle = in[1], bottom = in[2];
        rows.push_back(vec_bind(h.row(bottom), b3, [&](std::size_t b1) {
            return vec_bind(cphase.row(pair(middle, b1)), b3, [&](std::size_t mb) {
                const std::size_t m1 = mb / 2, b2 = mb % 2;
                return vec_bind(cnot.row(pair(top, m1)), b3, [&](std::size_t tm) {
                    const std::size_t t1 = tm / 2, m2 = tm % 2;
                    return vec_bind(caphase.row(pair(m2, b2)), b3, [&](std::size_t mb3) {
                        const std::size_t m3 = mb3 / 2, b3v = mb3 % 2;
                        return vec_bind(cnot.row(pair(t1, m3)), b3, [&](std::size_t tm4) {
                            const std::size_t t2 = tm4 / 2, m4 = tm4 % 2;
                            return vec_bind(cphase.row(pair(t2, b3v)), b3, [&](std::size_t tb) {
                                const std::size_t t3 = tb / 2, b4 = tb % 2;
                                return vec_bind(h.row(b4), b3, [&](std::size_t b5) {
                                    return ret3(t3, m4, b5);
                                });
                            });
                        });
                    });
                });
            });
        }));
    }
    return LinearOp::from_rows(b3, rows);
}

Superoperator toffoli_super() {
    const Basis &b = bit();
    const Basis &p = bit_pair();
    const Basis &flat = bit_triple();
    const Basis one_pair = product({b, p});  // (x, (y, z))
    const Basis pair_one = product({p, b});  // ((x, y), z)

    const Superoperator hadS = lin2super(hadamard());
    const Superoperator cnotS = lin2super(controlled(qnot()));
    const Superoperator cphaseS = lin2super(controlled(phase()));
    const Superoperator caphaseS = lin2super(controlled(adjoint(phase())));

    return rewire(flat, one_pair, {2, 0, 1})                         // (a0,b0,c0) -> (c0,(a0,b0))
           >> first(hadS, p) >> rewire(one_pair, pair_one, {2, 0, 1})  // (c1,(a0,b0)) -> ((b0,c1),a0)
           >> first(cphaseS, b) >> rewire(pair_one, pair_one, {2, 0, 1})  // ((b1,c2),a0) -> ((a0,b1),c2)
           >> first(cnotS, b) >> rewire(pair_one, pair_one, {1, 2, 0})  // ((a1,b2),c2) -> ((b2,c2),a1)
           >> first(caphaseS, b) >> rewire(pair_one, pair_one, {2, 0, 1})  // ((b3,c3),a1) -> ((a1,b3),c3)
           >> first(cnotS, b) >> rewire(pair_one, pair_one, {0, 2, 1})  // ((a2,b4),c3) -> ((a2,c3),b4)
           >> first(cphaseS, b) >> rewire(pair_one, one_pair, {1, 0, 2})  // ((a3,c4),b4) -> (c4,(a3,b4))
           >> first(hadS, p) >> rewire(one_pair, flat, {1, 2, 0});     // (c5,(a3,b4)) -> (a3,b4,c5)
}

Superoperator alice() {
    const Basis &p = bit_pair();
    const std::size_t swap[] = {1, 0};
    return permute_arr(p, swap)                   // (eprL,q) -> (q,eprL)
           >> lin2super(controlled(qnot()))       // (q1,e1)
           >> first(lin2super(hadamard()), bit())  // (q2,e1)
           >> meas(p)                             // ((q3,e2),(m1,m2))
           >> tr_l(product({p, p}));              // (m1,m2)
}

Superoperator bob() {
    const Basis &b = bit();
    const Basis pair_one = product({bit_pair(), b});
    return rewire(bit_triple(), pair_one, {2, 0, 1})                    // (eprR,m1,m2) -> ((m2,eprR),m1)
           >> first(lin2super(controlled(qnot())), b)                   // ((m2',e1),m1)
           >> rewire(pair_one, pair_one, {2, 1, 0})                     // -> ((m1,e1),m2')
           >> first(lin2super(controlled(pauli_z())), b)                // ((m1',e2),m2')
           >> rewire(pair_one, pair_one, {0, 2, 1})                     // -> ((m1',m2'),e2)
           >> tr_l(pair_one);
}

Superoperator teleport() {
    const Basis pair_one = product({bit_pair(), bit()});
    return rewire(bit_triple(), pair_one, {0, 2, 1})  // (eprL,eprR,q) -> ((eprL,q),eprR)
           >> first(alice(), bit())                   // ((m1,m2),eprR)
           >> rewire(pair_one, bit_triple(), {2, 0, 1})  // -> (eprR,m1,m2)
           >> bob();
}

DensityMatrix prepare_teleport_input(const StateVector &qubit) {
    require_same_basis(bit(), qubit.basis(), "prepare_teleport_input");
    const StateVector epr = named_state("epr");
    StateVector joint(bit_triple());
    for (std::size_t x = 0; x < joint.size(); x++) {
        auto c = bit_triple().components(x);
        joint[x] = epr[c[0] * 2 + c[1]] * qubit[c[2]];
    }
    return pure_density(joint);
}

Superoperator copy_op() {
    return arr(bit(), bit_pair(), [](std::size_t x) {
        return x * 2 + x;
    });
}

Superoperator weaken_op() {
    return arr(bit_pair(), bit(), [](std::size_t xy) {
        return xy % 2;
    });
}

StateVector default_teleport_qubit() {
    return StateVector(bit(), {Amplitude(0.6, 0), Amplitude(0, 0.8)});
}

const std::vector<CatalogCircuit> &circuit_catalog() {
    static const std::vector<CatalogCircuit> catalog = [] {
        const Basis &b3 = bit_triple();
        const std::size_t ttf = b3.index_of({"True", "True", "False"});
        const std::size_t ttt = b3.index_of({"True", "True", "True"});
        StateVector q = default_teleport_qubit();
        return std::vector<CatalogCircuit>{
            {"toffoli", "Toffoli on (a,b,c) from H, controlled phase and CNOT; input |True,True,False>",
             toffoli_super(), pure_density(vec_return(b3, ttf)), pure_density(vec_return(b3, ttt))},
            {"teleport", "teleportation of 0.6|False> + 0.8i|True> through a shared epr pair",
             teleport(), prepare_teleport_input(q), pure_density(q)},
        };
    }();
    return catalog;
}

const CatalogCircuit &find_circuit(std::string_view name) {
    for (const auto &c : circuit_catalog()) {
        if (c.name == name) {
            return c;
        }
    }
    throw std::invalid_argument("unknown circuit '" + std::string(name) + "'; valid circuits: toffoli, teleport");
}

}  // namespace qarrow
