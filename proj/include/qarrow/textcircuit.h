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

#ifndef QARROW_TEXTCIRCUIT_H
#define QARROW_TEXTCIRCUIT_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qarrow/superop.h"

namespace qarrow {

/// A diagnostic for a circuit file. what() reads "line N: ...".
class CircuitError : public std::runtime_error {
   public:
    CircuitError(std::size_t line, const std::string &message);
    std::size_t line() const {
        return line_;
    }

   private:
    std::size_t line_;
};

/// `init <wire> <state>` or `init <wire> <wire> epr`.
struct InitDirective {
    std::vector<std::string> wires;
    std::string state;
    std::size_t line = 0;
};

struct GateStep {
    std::string gate;
    std::string wire;
};
struct ControlledStep {
    std::string gate;
    std::string control;
    std::string target;
};
/// Leaves the classical outcome on the wire.
struct MeasureStep {
    std::string wire;
};
struct DiscardStep {
    std::string wire;
};

struct CircuitStep {
    std::variant<GateStep, ControlledStep, MeasureStep, DiscardStep> action;
    std::size_t line = 0;
};

/// A parsed circuit file. Wire names are unique; every step names wires that
/// are declared and not yet discarded.
struct CircuitIR {
    std::vector<std::string> wires;
    std::vector<InitDirective> inits;
    std::vector<CircuitStep> steps;
};

/// Parses the line-oriented circuit format:
///
///     wires <name>+                 exactly once, before anything else
///     init <wire> F|T|FT|FmT        any number, before the first step
///     init <wire> <wire> epr
///     gate <G> <wire>               G in H, X, PHASE, APHASE, Z
///     cgate <G> <control> <target>
///     measure <wire>
///     discard <wire>
///
/// `#` starts a comment. Wires without an init start as F. Throws
/// CircuitError on the first problem.
CircuitIR parse_circuit(std::string_view text);

/// The single-qubit gate named in a circuit file.
LinearOp circuit_gate(std::string_view name);

struct PipelineStage {
    std::string description;
    Superoperator op;
};

/// Stages act on the flat tuple of live wires, in declaration order.
struct RoutedPipeline {
    std::vector<PipelineStage> stages;
    std::vector<std::string> input_wires;
    std::vector<std::string> output_wires;
    /// All stages composed; the identity when there are no steps.
    Superoperator combined;
};

/// Compiles each step into re-wiring stages around `first` of the lifted
/// operation. An operation on every live wire in order is emitted bare.
RoutedPipeline route(const CircuitIR &ir);

/// Pure density over the declared wires built from the init directives.
DensityMatrix initial_density(const CircuitIR &ir);

/// The flat basis for `count` wires: Bool, or a product of Bools.
Basis wire_basis(std::size_t count);

}  // namespace qarrow

#endif
