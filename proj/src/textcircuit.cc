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

#include "qarrow/textcircuit.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qarrow {

CircuitError::CircuitError(std::size_t line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {
}

namespace {

constexpr std::string_view kGates[] = {"H", "X", "PHASE", "APHASE", "Z"};
constexpr std::string_view kStates[] = {"F", "T", "FT", "FmT"};

bool is_gate(std::string_view g) {
    return std::find(std::begin(kGates), std::end(kGates), g) != std::end(kGates);
}

bool is_state(std::string_view s) {
    return std::find(std::begin(kStates), std::end(kStates), s) != std::end(kStates);
}

std::vector<std::string> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) {
        tokens.push_back(t);
    }
    return tokens;
}

class Parser {
   public:
    CircuitIR run(std::string_view text) {
        std::size_t line_no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) {
                end = text.size();
            }
            line_no++;
            line_ = line_no;
            auto tokens = tokenize(text.substr(start, end - start));
            if (!tokens.empty()) {
                directive(tokens);
            }
            start = end + 1;
        }
        if (!declared_) {
            throw CircuitError(1, "missing 'wires' declaration");
        }
        return std::move(ir_);
    }

   private:
    [[noreturn]] void fail(const std::string &message) const {
        throw CircuitError(line_, message);
    }

    void arity(const std::vector<std::string> &t, std::size_t expected, const char *usage) const {
        if (t.size() != expected) {
            fail("wrong number of arguments to '" + t[0] + "' (usage: " + usage + ")");
        }
    }

    void live(const std::string &wire) const {
        if (!declared_wires_.count(wire)) {
            fail("unknown wire '" + wire + "'");
        }
        if (discarded_.count(wire)) {
            fail("wire '" + wire + "' used after discard");
        }
    }

    void gate_name(const std::string &g) const {
        if (!is_gate(g)) {
            fail("unknown gate '" + g + "' (expected H, X, PHASE, APHASE or Z)");
        }
    }

    void directive(const std::vector<std::string> &t) {
        const std::string &d = t[0];
        if (d == "wires") {
            wires(t);
            return;
        }
        if (!declared_) {
            fail("expected 'wires' declaration before '" + d + "'");
        }
        if (d == "init") {
            init(t);
        } else if (d == "gate") {
            arity(t, 3, "gate <G> <wire>");
            gate_name(t[1]);
            live(t[2]);
            push(GateStep{t[1], t[2]});
        } else if (d == "cgate") {
            arity(t, 4, "cgate <G> <control> <target>");
            gate_name(t[1]);
            live(t[2]);
            live(t[3]);
            if (t[2] == t[3]) {
                fail("control and target are the same wire '" + t[2] + "'");
            }
            push(ControlledStep{t[1], t[2], t[3]});
        } else if (d == "measure") {
            arity(t, 2, "measure <wire>");
            live(t[1]);
            push(MeasureStep{t[1]});
        } else if (d == "discard") {
            arity(t, 2, "discard <wire>");
            live(t[1]);
            if (discarded_.size() + 1 == ir_.wires.size()) {
                fail("cannot discard '" + t[1] + "', the last live wire");
            }
            discarded_.insert(t[1]);
            push(DiscardStep{t[1]});
        } else {
            fail("unknown directive '" + d + "'");
        }
    }

    void wires(const std::vector<std::string> &t) {
        if (declared_) {
            fail("wires declared twice");
        }
        if (t.size() < 2) {
            fail("wrong number of arguments to 'wires' (usage: wires <name>+)");
        }
        declared_ = true;
        for (std::size_t k = 1; k < t.size(); k++) {
            if (!declared_wires_.insert(t[k]).second) {
                fail("duplicate wire '" + t[k] + "'");
            }
            ir_.wires.push_back(t[k]);
        }
    }

    void init(const std::vector<std::string> &t) {
        if (!ir_.steps.empty()) {
            fail("init after first gate");
        }
        if (t.size() != 3 && t.size() != 4) {
            fail("wrong number of arguments to 'init' (usage: init <wire> <state> or init <wire> <wire> epr)");
        }
        InitDirective init;
        init.line = line_;
        init.wires.assign(t.begin() + 1, t.end() - 1);
        init.state = t.back();
        for (const auto &w : init.wires) {
            if (!declared_wires_.count(w)) {
                fail("unknown wire '" + w + "'");
            }
            if (!initialized_.insert(w).second) {
                fail("wire '" + w + "' initialized twice");
            }
        }
        if (init.wires.size() == 1 && !is_state(init.state)) {
            fail("unknown state '" + init.state + "' (expected F, T, FT or FmT)");
        }
        if (init.wires.size() == 2) {
            if (init.state != "epr") {
                fail("unknown two-wire state '" + init.state + "' (expected epr)");
            }
            if (init.wires[0] == init.wires[1]) {
                fail("epr needs two distinct wires");
            }
        }
        ir_.inits.push_back(std::move(init));
    }

    template <typename Step>
    void push(Step s) {
        ir_.steps.push_back(CircuitStep{std::move(s), line_});
    }

    CircuitIR ir_;
    std::size_t line_ = 0;
    bool declared_ = false;
    std::set<std::string> declared_wires_;
    std::set<std::string> discarded_;
    std::set<std::string> initialized_;
};

std::string tuple_text(const std::vector<std::string> &names) {
    std::string out = "(";
    for (std::size_t k = 0; k < names.size(); k++) {
        out += (k ? "," : "") + names[k];
    }
    return out + ")";
}

class Router {
   public:
    explicit Router(const CircuitIR &ir) : live_(ir.wires) {
    }

    void step(const CircuitStep &s) {
        std::visit([this](const auto &a) { emit(a); }, s.action);
    }

    std::vector<PipelineStage> take_stages() {
        return std::move(stages_);
    }
    const std::vector<std::string> &live() const {
        return live_;
    }

   private:
    std::size_t position(const std::string &w) const {
        return static_cast<std::size_t>(std::find(live_.begin(), live_.end(), w) - live_.begin());
    }

    void emit(const GateStep &g) {
        on_wires({g.wire}, lin2super(circuit_gate(g.gate)), g.gate);
    }

    void emit(const ControlledStep &c) {
        on_wires({c.control, c.target}, lin2super(controlled(circuit_gate(c.gate))), "controlled " + c.gate);
    }

    void emit(const MeasureStep &m) {
        const Basis &bit = bool_basis();
        on_wires({m.wire}, meas(bit) >> tr_l(product({bit, bit})), "measure");
    }

    void emit(const DiscardStep &d) {
        std::vector<std::size_t> order;
        auto rest = front_order({d.wire}, order);
        const Basis split = product({bool_basis(), wire_basis(rest.size())});
        stages_.push_back({"route " + tuple_text(live_) + " -> (" + d.wire + "," + tuple_text(rest) + ")",
                           reshape(wire_basis(live_.size()), split, order)});
        stages_.push_back({"trL discarding " + d.wire, tr_l(split)});
        live_ = std::move(rest);
    }

    // Leaf order moving `operands` to the front; returns the remaining wires.
    std::vector<std::string> front_order(const std::vector<std::string> &operands, std::vector<std::size_t> &order) {
        std::vector<std::string> rest;
        for (const auto &w : operands) {
            order.push_back(position(w));
        }
        for (std::size_t k = 0; k < live_.size(); k++) {
            if (std::find(operands.begin(), operands.end(), live_[k]) == operands.end()) {
                order.push_back(k);
                rest.push_back(live_[k]);
            }
        }
        return rest;
    }

    void on_wires(const std::vector<std::string> &operands, const Superoperator &op, const std::string &label) {
        const std::string applied = label + " on " + tuple_text(operands);
        const Basis flat = wire_basis(live_.size());
        std::vector<std::size_t> order;
        auto rest = front_order(operands, order);
        std::vector<std::size_t> inverse(order.size());
        for (std::size_t k = 0; k < order.size(); k++) {
            inverse[order[k]] = k;
        }
        std::vector<std::string> moved = operands;
        moved.insert(moved.end(), rest.begin(), rest.end());

        if (rest.empty()) {
            bool in_place = std::is_sorted(order.begin(), order.end());
            if (!in_place) {
                stages_.push_back({"route " + tuple_text(live_) + " -> " + tuple_text(moved), reshape(flat, flat, order)});
            }
            stages_.push_back({applied, op});
            if (!in_place) {
                stages_.push_back(
                    {"route " + tuple_text(moved) + " -> " + tuple_text(live_), reshape(flat, flat, inverse)});
            }
            return;
        }

        const Basis carried = wire_basis(rest.size());
        const Basis split = product({op.in(), carried});
        const std::string nested = "(" + tuple_text(operands) + "," + tuple_text(rest) + ")";
        stages_.push_back({"route " + tuple_text(live_) + " -> " + nested, reshape(flat, split, order)});
        stages_.push_back({"first(" + applied + ")", first(op, carried)});
        stages_.push_back({"route " + nested + " -> " + tuple_text(live_), reshape(split, flat, inverse)});
    }

    std::vector<std::string> live_;
    std::vector<PipelineStage> stages_;
};

}  // namespace

CircuitIR parse_circuit(std::string_view text) {
    return Parser().run(text);
}

LinearOp circuit_gate(std::string_view name) {
    if (name == "H") {
        return hadamard();
    }
    if (name == "X") {
        return qnot();
    }
    if (name == "PHASE") {
        return phase();
    }
    if (name == "APHASE") {
        return adjoint(phase());
    }
    if (name == "Z") {
        return pauli_z();
    }
    throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

Basis wire_basis(std::size_t count) {
    return bool_power(count);
}

RoutedPipeline route(const CircuitIR &ir) {
    Router router(ir);
    for (const auto &s : ir.steps) {
        router.step(s);
    }
    auto stages = router.take_stages();
    Superoperator combined = arr_identity(wire_basis(ir.wires.size()));
    if (!stages.empty()) {
        combined = stages.front().op;
        for (std::size_t k = 1; k < stages.size(); k++) {
            combined = combined >> stages[k].op;
        }
    }
    return RoutedPipeline{std::move(stages), ir.wires, router.live(), std::move(combined)};
}

DensityMatrix initial_density(const CircuitIR &ir) {
    const std::size_t n = ir.wires.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < n; k++) {
        index[ir.wires[k]] = k;
    }
    std::vector<StateVector> singles(n, named_state("qFalse"));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const std::map<std::string, std::string> state_names = {
        {"F", "qFalse"}, {"T", "qTrue"}, {"FT", "qFT"}, {"FmT", "qFmT"}};
    std::vector<bool> paired(n);
    for (const auto &init : ir.inits) {
        if (init.wires.size() == 1) {
            singles[index.at(init.wires[0])] = named_state(state_names.at(init.state));
        } else {
            std::size_t a = index.at(init.wires[0]);
            std::size_t b = index.at(init.wires[1]);
            pairs.emplace_back(a, b);
            paired[a] = paired[b] = true;
        }
    }
    const StateVector epr = named_state("epr");
    StateVector joint(wire_basis(n));
    for (std::size_t x = 0; x < joint.size(); x++) {
        auto bit = [&](std::size_t wire) {
            return (x >> (n - 1 - wire)) & 1;
        };
        Amplitude amp = 1;
        for (std::size_t w = 0; w < n; w++) {
            if (!paired[w]) {
                amp *= singles[w][bit(w)];
            }
        }
        for (auto [a, b] : pairs) {
            amp *= epr[bit(a) * 2 + bit(b)];
        }
        joint[x] = amp;
    }
    return pure_density(joint);
}

}  // namespace qarrow
