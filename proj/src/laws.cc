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

#include "qarrow/laws.h"

#include <cmath>
#include <stdexcept>

namespace qarrow {

SeededGenerator::SeededGenerator(std::uint64_t seed) : seed_(seed), engine_(seed) {
}

double SeededGenerator::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Amplitude SeededGenerator::amplitude() {
    double re = 2 * uniform() - 1;
    double im = 2 * uniform() - 1;
    return {re, im};
}

std::size_t SeededGenerator::below(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("SeededGenerator::below: empty range");
    }
    return static_cast<std::size_t>(engine_() % n);
}

StateVector SeededGenerator::vector(const Basis &basis) {
    StateVector v(basis);
    for (std::size_t a = 0; a < v.size(); a++) {
        v[a] = amplitude();
    }
    return v;
}

LinearOp SeededGenerator::linear(const Basis &in, const Basis &out) {
    std::vector<Amplitude> entries(in.size() * out.size());
    for (auto &x : entries) {
        x = amplitude();
    }
    return LinearOp(in, out, std::move(entries));
}

std::vector<std::size_t> SeededGenerator::function_table(const Basis &in, const Basis &out) {
    std::vector<std::size_t> table(in.size());
    for (auto &x : table) {
        x = below(out.size());
    }
    return table;
}

MonadOps library_monad_ops() {
    return {
        [](const Basis &b, std::size_t a) {
            return vec_return(b, a);
        },
        [](const StateVector &v, const Basis &target, const std::function<StateVector(std::size_t)> &next) {
            return vec_bind(v, target, next);
        },
    };
}

ArrowOps library_arrow_ops() {
    return {
        [](const Basis &in, const Basis &out, const ElementMap &fn) {
            return arr(in, out, fn);
        },
        [](const Superoperator &s, const Superoperator &t) {
            return compose(s, t);
        },
        [](const Superoperator &s, const Basis &carried) {
            return first(s, carried);
        },
    };
}

std::vector<Basis> default_monad_bases() {
    return {Basis("Unit", {"()"}), bool_basis(), bool_power(2), bool_power(3)};
}

std::vector<NamedArrow> default_arrow_pool() {
    const Basis pair = bool_power(2);
    return {
        {"lin2super(hadamard)", lin2super(hadamard())},
        {"lin2super(qnot)", lin2super(qnot())},
        {"lin2super(cnot)", lin2super(controlled(qnot()))},
        {"meas(Bool)", meas(bool_basis())},
        {"trL(Bool,Bool)", tr_l(pair)},
        {"arr(swap)", arr(pair, pair, [](std::size_t xy) { return (xy % 2) * 2 + xy / 2; })},
    };
}

namespace {

class ReportBuilder {
   public:
    ReportBuilder(std::string name, double tol) : tol_(tol) {
        report_.name = std::move(name);
    }

    void record(double residual, const std::function<std::string()> &describe) {
        if (std::isnan(residual)) {
            residual = INFINITY;
        }
        if (report_.instances == 0 || residual > report_.max_residual) {
            report_.max_residual = residual;
            report_.witness = describe();
        }
        report_.instances++;
    }

    LawReport finish(const std::string &shapes) {
        if (report_.instances == 0) {
            throw std::invalid_argument(report_.name + ": no compatible instances among " + shapes);
        }
        report_.pass = report_.max_residual <= tol_;
        return report_;
    }

   private:
    double tol_;
    LawReport report_;
};

double residual(const Superoperator &s, const Superoperator &t) {
    if (s.in() != t.in() || s.out() != t.out()) {
        return INFINITY;
    }
    return extensional_equal(s, t, 0).max_difference;
}

std::string table_text(const std::vector<std::size_t> &table) {
    std::string out = "[";
    for (std::size_t k = 0; k < table.size(); k++) {
        out += (k ? "," : "") + std::to_string(table[k]);
    }
    return out + "]";
}

std::function<StateVector(std::size_t)> rows_of(const LinearOp &f) {
    return [&f](std::size_t a) {
        return f.row(a);
    };
}

}  // namespace

std::vector<LawReport> check_monad_laws(SeededGenerator &gen, const std::vector<Basis> &bases, std::size_t n_cases,
                                        double tol, const MonadOps &ops) {
    if (bases.empty() || n_cases == 0) {
        throw std::invalid_argument("check_monad_laws: need at least one basis and one case");
    }
    ReportBuilder left_unit("monad 1: return x >>= f = f x", tol);
    ReportBuilder right_unit("monad 2: m >>= return = m", tol);
    ReportBuilder assoc("monad 3: (m >>= f) >>= g = m >>= (\\x -> f x >>= g)", tol);

    for (const Basis &a : bases) {
        for (std::size_t k = 0; k < n_cases; k++) {
            const Basis &b = bases[gen.below(bases.size())];
            const Basis &c = bases[gen.below(bases.size())];
            const std::size_t x = gen.below(a.size());
            const StateVector m = gen.vector(a);
            const LinearOp f = gen.linear(a, b);
            const LinearOp g = gen.linear(b, c);
            auto where = [&] {
                return "case " + std::to_string(k) + " over " + a.name() + " -> " + b.name() + " -> " + c.name();
            };

            StateVector lhs1 = ops.bind(ops.ret(a, x), b, rows_of(f));
            left_unit.record(max_abs_diff(lhs1, f.row(x)), [&] {
                return where() + ", x = " + a.label(x);
            });

            StateVector lhs2 = ops.bind(m, a, [&](std::size_t y) {
                return ops.ret(a, y);
            });
            right_unit.record(max_abs_diff(lhs2, m), where);

            StateVector lhs3 = ops.bind(ops.bind(m, b, rows_of(f)), c, rows_of(g));
            StateVector rhs3 = ops.bind(m, c, [&](std::size_t y) {
                return ops.bind(f.row(y), c, rows_of(g));
            });
            assoc.record(max_abs_diff(lhs3, rhs3), where);
        }
    }
    std::string shapes = std::to_string(bases.size()) + " bases";
    return {left_unit.finish(shapes), right_unit.finish(shapes), assoc.finish(shapes)};
}

std::vector<LawReport> check_arrow_laws(SeededGenerator &gen, const std::vector<NamedArrow> &pool, double tol,
                                        const ArrowOps &ops, std::size_t random_cases) {
    if (pool.empty()) {
        throw std::invalid_argument("check_arrow_laws: empty operator pool");
    }
    std::vector<Basis> shapes;
    std::string shape_text;
    auto note_basis = [&](const Basis &b) {
        for (const auto &s : shapes) {
            if (s == b) {
                return;
            }
        }
        shapes.push_back(b);
    };
    for (const auto &f : pool) {
        note_basis(f.op.in());
        note_basis(f.op.out());
        shape_text += (shape_text.empty() ? "" : ", ") + f.name + " : " + f.op.in().name() + " -> " + f.op.out().name();
    }
    shape_text = "pool {" + shape_text + "}";

    const Basis &d = bool_basis();
    const std::vector<Basis> right_targets = {bool_basis(), bool_power(2)};
    auto arr_table = [&](const Basis &in, const Basis &out, std::vector<std::size_t> table) {
        return ops.arr(in, out, [table = std::move(table)](std::size_t a) {
            return table[a];
        });
    };
    auto arr_id = [&](const Basis &b) {
        return ops.arr(b, b, [](std::size_t a) {
            return a;
        });
    };
    auto random_shape = [&]() -> const Basis & {
        return shapes[gen.below(shapes.size())];
    };

    std::vector<LawReport> reports;

    ReportBuilder law1("arrow 1: arr id >>> f = f", tol);
    ReportBuilder law2("arrow 2: f >>> arr id = f", tol);
    for (const auto &f : pool) {
        law1.record(residual(ops.compose(arr_id(f.op.in()), f.op), f.op), [&] {
            return "f = " + f.name;
        });
        law2.record(residual(ops.compose(f.op, arr_id(f.op.out())), f.op), [&] {
            return "f = " + f.name;
        });
    }
    reports.push_back(law1.finish(shape_text));
    reports.push_back(law2.finish(shape_text));

    ReportBuilder law3("arrow 3: (f >>> g) >>> h = f >>> (g >>> h)", tol);
    for (const auto &f : pool) {
        for (const auto &g : pool) {
            if (f.op.out() != g.op.in()) {
                continue;
            }
            for (const auto &h : pool) {
                if (g.op.out() != h.op.in()) {
                    continue;
                }
                auto lhs = ops.compose(ops.compose(f.op, g.op), h.op);
                auto rhs = ops.compose(f.op, ops.compose(g.op, h.op));
                law3.record(residual(lhs, rhs), [&] {
                    return "f = " + f.name + ", g = " + g.name + ", h = " + h.name;
                });
            }
        }
    }
    reports.push_back(law3.finish(shape_text));

    ReportBuilder law4("arrow 4: arr (g . f) = arr f >>> arr g", tol);
    for (std::size_t k = 0; k < random_cases; k++) {
        const Basis &a = random_shape();
        const Basis &b = random_shape();
        const Basis &c = random_shape();
        auto f = gen.function_table(a, b);
        auto g = gen.function_table(b, c);
        std::vector<std::size_t> gf(a.size());
        for (std::size_t x = 0; x < a.size(); x++) {
            gf[x] = g[f[x]];
        }
        law4.record(residual(arr_table(a, c, gf), ops.compose(arr_table(a, b, f), arr_table(b, c, g))), [&] {
            return "f = " + table_text(f) + " : " + a.name() + " -> " + b.name() + ", g = " + table_text(g) + " : " +
                   b.name() + " -> " + c.name();
        });
    }
    reports.push_back(law4.finish(shape_text));

    ReportBuilder law5("arrow 5: first (arr f) = arr (f x id)", tol);
    for (std::size_t k = 0; k < random_cases; k++) {
        const Basis &a = random_shape();
        const Basis &b = random_shape();
        auto f = gen.function_table(a, b);
        const Basis in = product({a, d});
        const Basis out = product({b, d});
        std::vector<std::size_t> f_id(in.size());
        for (std::size_t x = 0; x < in.size(); x++) {
            auto c = in.components(x);
            const std::size_t img[] = {f[c[0]], c[1]};
            f_id[x] = out.from_components(img);
        }
        law5.record(residual(ops.first(arr_table(a, b, f), d), arr_table(in, out, f_id)), [&] {
            return "f = " + table_text(f) + " : " + a.name() + " -> " + b.name();
        });
    }
    reports.push_back(law5.finish(shape_text));

    ReportBuilder law6("arrow 6: first (f >>> g) = first f >>> first g", tol);
    for (const auto &f : pool) {
        for (const auto &g : pool) {
            if (f.op.out() != g.op.in()) {
                continue;
            }
            auto lhs = ops.first(ops.compose(f.op, g.op), d);
            auto rhs = ops.compose(ops.first(f.op, d), ops.first(g.op, d));
            law6.record(residual(lhs, rhs), [&] {
                return "f = " + f.name + ", g = " + g.name;
            });
        }
    }
    reports.push_back(law6.finish(shape_text));

    ReportBuilder law7("arrow 7: first f >>> arr (id x g) = arr (id x g) >>> first f", tol);
    for (const auto &f : pool) {
        for (std::size_t k = 0; k < random_cases; k++) {
            const Basis &target = right_targets[gen.below(right_targets.size())];
            auto g = gen.function_table(d, target);
            auto id_x_g = [&](const Basis &left) {
                const Basis in = product({left, d});
                const Basis out = product({left, target});
                std::vector<std::size_t> table(in.size());
                for (std::size_t x = 0; x < in.size(); x++) {
                    auto c = in.components(x);
                    const std::size_t img[] = {c[0], g[c[1]]};
                    table[x] = out.from_components(img);
                }
                return arr_table(in, out, table);
            };
            auto lhs = ops.compose(ops.first(f.op, d), id_x_g(f.op.out()));
            auto rhs = ops.compose(id_x_g(f.op.in()), ops.first(f.op, target));
            law7.record(residual(lhs, rhs), [&] {
                return "f = " + f.name + ", g = " + table_text(g) + " : Bool -> " + target.name();
            });
        }
    }
    reports.push_back(law7.finish(shape_text));

    ReportBuilder law8("arrow 8: first f >>> arr fst = arr fst >>> f", tol);
    for (const auto &f : pool) {
        auto fst = [&](const Basis &left) {
            return ops.arr(product({left, d}), left, [n = d.size()](std::size_t x) {
                return x / n;
            });
        };
        auto lhs = ops.compose(ops.first(f.op, d), fst(f.op.out()));
        auto rhs = ops.compose(fst(f.op.in()), f.op);
        law8.record(residual(lhs, rhs), [&] {
            return "f = " + f.name;
        });
    }
    reports.push_back(law8.finish(shape_text));

    ReportBuilder law9("arrow 9: first (first f) >>> arr assoc = arr assoc >>> first f", tol);
    for (const auto &f : pool) {
        const Basis &e = bool_basis();
        auto assoc = [&](const Basis &left) {
            const Basis in = product({product({left, d}), e});
            const Basis out = product({left, product({d, e})});
            // ((a,d),e) and (a,(d,e)) share the row-major index a*|D||E| + d*|E| + e.
            return ops.arr(in, out, [](std::size_t x) {
                return x;
            });
        };
        auto lhs = ops.compose(ops.first(ops.first(f.op, d), e), assoc(f.op.out()));
        auto rhs = ops.compose(assoc(f.op.in()), ops.first(f.op, product({d, e})));
        law9.record(residual(lhs, rhs), [&] {
            return "f = " + f.name;
        });
    }
    reports.push_back(law9.finish(shape_text));

    return reports;
}

namespace mutants {

MonadOps bind_skipping_last() {
    MonadOps ops = library_monad_ops();
    ops.bind = [](const StateVector &v, const Basis &target, const std::function<StateVector(std::size_t)> &next) {
        StateVector out(target);
        for (std::size_t a = 0; a + 1 < v.size(); a++) {
            StateVector image = next(a);
            for (std::size_t b = 0; b < out.size(); b++) {
                out[b] += v[a] * image[b];
            }
        }
        return out;
    };
    return ops;
}

ArrowOps first_dropping_dual() {
    ArrowOps ops = library_arrow_ops();
    ops.first = [](const Superoperator &s, const Basis &carried) {
        const Basis in = product({s.in(), carried});
        const Basis out = product({s.out(), carried});
        const std::size_t nA = s.in().size();
        const std::size_t nB = s.out().size();
        const std::size_t nD = carried.size();
        LinearOp m(product({in, in}), product({out, out}));
        for (std::size_t a1 = 0; a1 < nA; a1++) {
            for (std::size_t a2 = 0; a2 < nA; a2++) {
                for (std::size_t b1 = 0; b1 < nB; b1++) {
                    for (std::size_t b2 = 0; b2 < nB; b2++) {
                        Amplitude x = s.pair_map()(a1 * nA + a2, b1 * nB + b2);
                        for (std::size_t d1 = 0; d1 < nD; d1++) {
                            for (std::size_t d2 = 0; d2 < nD; d2++) {
                                std::size_t row = (a1 * nD + d1) * in.size() + (a2 * nD + d2);
                                std::size_t col = (b1 * nD + d1) * out.size() + (b2 * nD + d1);
                                m.at(row, col) += x;
                            }
                        }
                    }
                }
            }
        }
        return Superoperator(in, out, std::move(m));
    };
    return ops;
}

}  // namespace mutants

}  // namespace qarrow
