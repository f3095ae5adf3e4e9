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

#include "qarrow/basis.h"

#include <stdexcept>
#include <unordered_map>

namespace qarrow {

struct Basis::Data {
    std::string name;
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index_by_label;
    std::vector<Basis> factors;
    std::vector<std::size_t> strides;
    std::vector<Basis> leaf_bases;  // empty for atomic bases
    std::size_t leaf_count = 1;
    std::vector<std::vector<std::size_t>> leaf_table;
};

namespace {

std::string join_parenthesized(const std::vector<const std::string *> &parts) {
    std::string out = "(";
    for (std::size_t k = 0; k < parts.size(); k++) {
        if (k) {
            out += ',';
        }
        out += *parts[k];
    }
    out += ')';
    return out;
}

std::unordered_map<std::string, std::size_t> index_labels(
    const std::string &name, const std::vector<std::string> &labels) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); i++) {
        if (!index.emplace(labels[i], i).second) {
            throw std::invalid_argument("basis '" + name + "' has repeated label '" + labels[i] + "'");
        }
    }
    return index;
}

}  // namespace

Basis::Basis(std::shared_ptr<const Data> data) : data_(std::move(data)) {
}

Basis::Basis(std::string name, std::vector<std::string> labels) {
    if (labels.empty()) {
        throw std::invalid_argument("basis '" + name + "' must have at least one element");
    }
    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->labels = std::move(labels);
    d->index_by_label = index_labels(d->name, d->labels);
    d->leaf_table.resize(d->labels.size());
    for (std::size_t i = 0; i < d->labels.size(); i++) {
        d->leaf_table[i] = {i};
    }
    data_ = d;
}

std::size_t Basis::size() const {
    return data_->labels.size();
}

const std::string &Basis::name() const {
    return data_->name;
}

const std::string &Basis::label(std::size_t index) const {
    return data_->labels.at(index);
}

const std::string &Basis::element_at(std::size_t index) const {
    return label(index);
}

const std::vector<std::string> &Basis::labels() const {
    return data_->labels;
}

std::size_t Basis::index_of(std::string_view label) const {
    auto it = data_->index_by_label.find(std::string(label));
    if (it == data_->index_by_label.end()) {
        throw std::invalid_argument("'" + std::string(label) + "' is not an element of basis " + data_->name);
    }
    return it->second;
}

std::size_t Basis::index_of(std::initializer_list<std::string_view> components) const {
    std::vector<std::string> owned(components.begin(), components.end());
    return index_of(std::span<const std::string>(owned));
}

std::size_t Basis::index_of(std::span<const std::string> components) const {
    if (!is_product()) {
        if (components.size() != 1) {
            throw std::invalid_argument("basis " + data_->name + " is not a product");
        }
        return index_of(components[0]);
    }
    if (components.size() != arity()) {
        throw std::invalid_argument(
            "expected " + std::to_string(arity()) + " components for basis " + data_->name + ", got " +
            std::to_string(components.size()));
    }
    std::vector<std::size_t> parts(components.size());
    for (std::size_t k = 0; k < components.size(); k++) {
        parts[k] = data_->factors[k].index_of(components[k]);
    }
    return from_components(parts);
}

bool Basis::is_product() const {
    return !data_->factors.empty();
}

std::size_t Basis::arity() const {
    return is_product() ? data_->factors.size() : 1;
}

const std::vector<Basis> &Basis::factors() const {
    return data_->factors;
}

std::vector<std::size_t> Basis::components(std::size_t index) const {
    if (index >= size()) {
        throw std::out_of_range("element index out of range for basis " + data_->name);
    }
    if (!is_product()) {
        return {index};
    }
    std::vector<std::size_t> out(arity());
    for (std::size_t k = 0; k < out.size(); k++) {
        out[k] = (index / data_->strides[k]) % data_->factors[k].size();
    }
    return out;
}

std::size_t Basis::from_components(std::span<const std::size_t> components) const {
    if (!is_product()) {
        if (components.size() != 1 || components[0] >= size()) {
            throw std::invalid_argument("bad component tuple for basis " + data_->name);
        }
        return components[0];
    }
    if (components.size() != arity()) {
        throw std::invalid_argument("bad component tuple for basis " + data_->name);
    }
    std::size_t index = 0;
    for (std::size_t k = 0; k < components.size(); k++) {
        if (components[k] >= data_->factors[k].size()) {
            throw std::invalid_argument("component out of range for basis " + data_->name);
        }
        index += components[k] * data_->strides[k];
    }
    return index;
}

std::vector<Basis> Basis::leaf_bases() const {
    if (!is_product()) {
        return {*this};
    }
    return data_->leaf_bases;
}

std::size_t Basis::leaf_count() const {
    return data_->leaf_count;
}

const std::vector<std::size_t> &Basis::leaves(std::size_t index) const {
    return data_->leaf_table.at(index);
}

std::size_t Basis::from_leaves(std::span<const std::size_t> leaves) const {
    if (leaves.size() != leaf_count()) {
        throw std::invalid_argument("expected " + std::to_string(leaf_count()) + " leaves for basis " + data_->name);
    }
    if (!is_product()) {
        if (leaves[0] >= size()) {
            throw std::invalid_argument("leaf out of range for basis " + data_->name);
        }
        return leaves[0];
    }
    std::size_t index = 0;
    std::size_t offset = 0;
    for (std::size_t k = 0; k < data_->factors.size(); k++) {
        const Basis &f = data_->factors[k];
        index += f.from_leaves(leaves.subspan(offset, f.leaf_count())) * data_->strides[k];
        offset += f.leaf_count();
    }
    return index;
}

bool Basis::operator==(const Basis &other) const {
    if (data_ == other.data_) {
        return true;
    }
    return data_->name == other.data_->name && data_->labels == other.data_->labels &&
           data_->factors.size() == other.data_->factors.size();
}

const Basis &bool_basis() {
    static const Basis b("Bool", {"False", "True"});
    return b;
}

Basis product(std::span<const Basis> parts) {
    if (parts.empty()) {
        throw std::invalid_argument("product of an empty list of bases");
    }
    if (parts.size() == 1) {
        return parts[0];
    }
    auto d = std::make_shared<Basis::Data>();
    d->factors.assign(parts.begin(), parts.end());

    std::vector<const std::string *> names;
    for (const auto &p : parts) {
        names.push_back(&p.name());
    }
    d->name = join_parenthesized(names);

    std::size_t total = 1;
    d->strides.resize(parts.size());
    for (std::size_t k = parts.size(); k-- > 0;) {
        d->strides[k] = total;
        total *= parts[k].size();
    }
    d->leaf_count = 0;
    for (const auto &p : parts) {
        auto sub = p.leaf_bases();
        d->leaf_bases.insert(d->leaf_bases.end(), sub.begin(), sub.end());
        d->leaf_count += sub.size();
    }

    d->labels.resize(total);
    d->leaf_table.resize(total);
    std::vector<const std::string *> component_labels(parts.size());
    for (std::size_t i = 0; i < total; i++) {
        for (std::size_t k = 0; k < parts.size(); k++) {
            std::size_t c = (i / d->strides[k]) % parts[k].size();
            component_labels[k] = &parts[k].label(c);
            const auto &sub = parts[k].leaves(c);
            d->leaf_table[i].insert(d->leaf_table[i].end(), sub.begin(), sub.end());
        }
        d->labels[i] = join_parenthesized(component_labels);
    }
    d->index_by_label = index_labels(d->name, d->labels);
    return Basis(std::shared_ptr<const Basis::Data>(std::move(d)));
}

Basis product(std::initializer_list<Basis> parts) {
    return product(std::span<const Basis>(parts.begin(), parts.size()));
}

Basis bool_power(std::size_t count) {
    if (count == 0) {
        throw std::invalid_argument("bool_power needs at least one factor");
    }
    std::vector<Basis> parts(count, bool_basis());
    return product(parts);
}

}  // namespace qarrow
