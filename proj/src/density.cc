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

#include "qarrow/density.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qarrow {

DensityMatrix::DensityMatrix(Basis space) : space_(space), entries_(product({space, space})) {
}

DensityMatrix::DensityMatrix(Basis space, StateVector entries) : space_(space), entries_(std::move(entries)) {
    require_same_basis(product({space_, space_}), entries_.basis(), "DensityMatrix");
}

DensityMatrix pure_density(const StateVector &v) {
    DensityMatrix d(v.basis());
    for (std::size_t a1 = 0; a1 < v.size(); a1++) {
        for (std::size_t a2 = 0; a2 < v.size(); a2++) {
            d.at(a1, a2) = v[a1] * std::conj(v[a2]);
        }
    }
    return d;
}

DensityMatrix diagonal_density(const Basis &space, const std::vector<double> &weights) {
    if (weights.size() != space.size()) {
        throw std::invalid_argument("diagonal_density: need one weight per element of " + space.name());
    }
    DensityMatrix d(space);
    for (std::size_t a = 0; a < weights.size(); a++) {
        d.at(a, a) = weights[a];
    }
    return d;
}

Amplitude trace(const DensityMatrix &d) {
    Amplitude total{};
    for (std::size_t a = 0; a < d.dim(); a++) {
        total += d(a, a);
    }
    return total;
}

double max_abs_diff(const DensityMatrix &d, const DensityMatrix &e) {
    return max_abs_diff(d.entries(), e.entries());
}

DensityDiagnostics diagnose(const DensityMatrix &d, double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("diagnose: tolerance must be positive");
    }
    const auto n = static_cast<Eigen::Index>(d.dim());
    double herm_defect = 0;
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j < n; j++) {
            auto a = d(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            auto b = d(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
            herm_defect = std::max(herm_defect, std::abs(a - std::conj(b)));
            m(i, j) = 0.5 * (a + std::conj(b));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    double min_eig = solver.eigenvalues().minCoeff();
    double trace_defect = std::abs(trace(d) - Amplitude(1.0));

    DensityDiagnostics r{};
    r.hermitian = herm_defect <= tol;
    r.psd = min_eig >= -tol;
    r.unit_trace = trace_defect <= tol;
    r.min_eigenvalue = min_eig;
    r.max_violation = std::max({herm_defect, std::max(0.0, -min_eig), trace_defect});
    return r;
}

namespace {

double rounded(double x, std::optional<int> decimals) {
    if (!decimals) {
        return x;
    }
    double scale = std::pow(10.0, *decimals);
    double r = std::round(x * scale) / scale;
    return r == 0 ? 0.0 : r;  // drop negative zero
}

DensityMatrix parse_entries(const nlohmann::json &j, const Basis &space) {
    const auto &re = j.at("re");
    const auto &im = j.at("im");
    const std::size_t n = space.size();
    if (re.size() != n || im.size() != n) {
        throw std::invalid_argument("density JSON: matrix size does not match basis");
    }
    DensityMatrix d(space);
    for (std::size_t a1 = 0; a1 < n; a1++) {
        if (re[a1].size() != n || im[a1].size() != n) {
            throw std::invalid_argument("density JSON: ragged row " + std::to_string(a1));
        }
        for (std::size_t a2 = 0; a2 < n; a2++) {
            d.at(a1, a2) = Amplitude(re[a1][a2].get<double>(), im[a1][a2].get<double>());
        }
    }
    return d;
}

}  // namespace

std::string to_json(const DensityMatrix &d, std::optional<int> decimals) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (std::size_t a1 = 0; a1 < d.dim(); a1++) {
        nlohmann::json re_row = nlohmann::json::array();
        nlohmann::json im_row = nlohmann::json::array();
        for (std::size_t a2 = 0; a2 < d.dim(); a2++) {
            re_row.push_back(rounded(d(a1, a2).real(), decimals));
            im_row.push_back(rounded(d(a1, a2).imag(), decimals));
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    nlohmann::json j;
    j["basis"] = d.space().labels();
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j.dump();
}

DensityMatrix density_from_json(const std::string &text) {
    auto j = nlohmann::json::parse(text);
    auto labels = j.at("basis").get<std::vector<std::string>>();
    return parse_entries(j, Basis("Labels", std::move(labels)));
}

DensityMatrix density_from_json(const std::string &text, const Basis &space) {
    auto j = nlohmann::json::parse(text);
    if (j.at("basis").get<std::vector<std::string>>() != space.labels()) {
        throw std::invalid_argument("density JSON: labels do not match basis " + space.name());
    }
    return parse_entries(j, space);
}

std::string to_text(const DensityMatrix &d, int decimals) {
    const double shown = 0.5 * std::pow(10.0, -decimals);
    auto cell = [&](Amplitude x) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(decimals);
        double re = std::abs(x.real()) < shown ? 0.0 : x.real();
        double im = std::abs(x.imag()) < shown ? 0.0 : x.imag();
        s << re;
        if (im != 0) {
            s << (im < 0 ? "-" : "+") << std::abs(im) << "i";
        }
        return s.str();
    };

    std::vector<std::vector<std::string>> cells(d.dim(), std::vector<std::string>(d.dim()));
    std::size_t width = 0;
    std::size_t label_width = 0;
    for (std::size_t a1 = 0; a1 < d.dim(); a1++) {
        label_width = std::max(label_width, d.space().label(a1).size());
        width = std::max(width, d.space().label(a1).size());
        for (std::size_t a2 = 0; a2 < d.dim(); a2++) {
            cells[a1][a2] = cell(d(a1, a2));
            width = std::max(width, cells[a1][a2].size());
        }
    }

    std::ostringstream out;
    out << std::string(label_width, ' ');
    for (std::size_t a2 = 0; a2 < d.dim(); a2++) {
        out << "  " << std::setw(static_cast<int>(width)) << d.space().label(a2);
    }
    out << '\n';
    for (std::size_t a1 = 0; a1 < d.dim(); a1++) {
        out << std::left << std::setw(static_cast<int>(label_width)) << d.space().label(a1) << std::right;
        for (std::size_t a2 = 0; a2 < d.dim(); a2++) {
            out << "  " << std::setw(static_cast<int>(width)) << cells[a1][a2];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace qarrow
