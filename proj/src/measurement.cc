// Copyright 2026 The mbqc-frame Authors
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

#include "mbqc/measurement.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mbqc {

namespace {

Matrix outer(const StateVector &v) {
    Matrix m(v.size());
    for (size_t i = 0; i < v.size(); i++) {
        for (size_t j = 0; j < v.size(); j++) {
            m(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return m;
}

double squared_norm(const std::vector<Complex> &v) {
    double total = 0;
    for (const auto &c : v) {
        total += std::norm(c);
    }
    return total;
}

Projection project(const StateVector &s, int label, const Matrix &projector, std::span<const size_t> targets) {
    auto v = apply_operator(projector, s.amplitudes(), s.num_qubits(), targets);
    double p = squared_norm(v);
    return Projection{label, p, std::move(v)};
}

}  // namespace

BasisMeasurement BasisMeasurement::on(size_t a, size_t b) const {
    BasisMeasurement r = *this;
    r.target_first = a;
    r.target_second = b;
    return r;
}

bool BasisMeasurement::is_orthonormal(double tol) const {
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            Complex expected = i == j ? Complex{1} : Complex{0};
            if (std::abs(inner_product(vectors[i], vectors[j]) - expected) > tol) {
                return false;
            }
        }
    }
    return true;
}

StateVector epr_state() {
    const double h = 1 / std::sqrt(2.0);
    return StateVector::from_amplitudes({h, 0, 0, h});
}

BasisMeasurement bell_basis(size_t a, size_t b) {
    return u_basis(Matrix::identity(2), a, b);
}

BasisMeasurement u_basis(const Matrix &u, size_t a, size_t b) {
    if (u.dim() != 2 || !u.is_unitary()) {
        throw std::invalid_argument("u_basis requires a 2x2 unitary.");
    }
    if (a == b) {
        throw std::invalid_argument("u_basis targets must be distinct.");
    }
    StateVector epr = epr_state();
    BasisMeasurement m{
        {StateVector(), StateVector(), StateVector(), StateVector()},
        a,
        b,
    };
    for (int i = 0; i < 4; i++) {
        m.vectors[i] = apply_unitary(u * letter_matrix(letter_from_index(i)), epr, {1});
    }
    return m;
}

std::vector<Projection> project_all(const StateVector &s, const Measurement &m) {
    std::vector<Projection> out;
    if (const auto *basis = std::get_if<BasisMeasurement>(&m)) {
        std::array<size_t, 2> targets{basis->target_first, basis->target_second};
        for (int i = 0; i < 4; i++) {
            out.push_back(project(s, i, outer(basis->vectors[i]), targets));
        }
    } else if (const auto *obs = std::get_if<SignedPauliObservable>(&m)) {
        std::array<size_t, 2> targets{obs->target_first, obs->target_second};
        Matrix o = observable_matrix(*obs);
        Matrix id = Matrix::identity(4);
        out.push_back(project(s, +1, (id + o) * Complex{0.5}, targets));
        out.push_back(project(s, -1, (id - o) * Complex{0.5}, targets));
    } else {
        const auto &comp = std::get<ComputationalMeasurement>(m);
        size_t dim = size_t{1} << comp.targets.size();
        for (size_t j = 0; j < dim; j++) {
            Matrix p(dim);
            p(j, j) = 1;
            out.push_back(project(s, static_cast<int>(j), p, comp.targets));
        }
    }
    return out;
}

MeasurementResult measure(const StateVector &s, const Measurement &m, OutcomeSource &outcomes) {
    auto projections = project_all(s, m);
    std::vector<double> probabilities;
    bool any = false;
    for (const auto &p : projections) {
        probabilities.push_back(p.probability);
        any = any || p.probability >= kPruneThreshold;
    }
    if (!any) {
        throw std::runtime_error("All outcome probabilities vanish; the state is numerically corrupted.");
    }
    size_t k = outcomes.choose(probabilities);
    if (k >= projections.size() || projections[k].probability < kPruneThreshold) {
        throw std::logic_error("OutcomeSource picked an impossible outcome.");
    }
    auto &chosen = projections[k];
    return MeasurementResult{chosen.label, chosen.probability, StateVector::normalized(std::move(chosen.unnormalized))};
}

std::pair<int, StateVector> measure_basis(const StateVector &s, const BasisMeasurement &m, OutcomeSource &outcomes) {
    auto r = measure(s, m, outcomes);
    return {r.label, std::move(r.state)};
}

std::pair<int, StateVector> measure_observable(
    const StateVector &s, const SignedPauliObservable &o, OutcomeSource &outcomes) {
    auto r = measure(s, o, outcomes);
    return {r.label, std::move(r.state)};
}

std::vector<OutcomeBranch> enumerate_branches(const StateVector &s, std::span<const Measurement> plan) {
    if (plan.empty()) {
        throw std::invalid_argument("enumerate_branches requires a nonempty plan.");
    }
    std::vector<OutcomeBranch> frontier{{{}, 1.0, s}};
    for (const auto &m : plan) {
        std::vector<OutcomeBranch> next;
        for (const auto &branch : frontier) {
            for (auto &p : project_all(branch.post_state, m)) {
                double joint = branch.probability * p.probability;
                if (joint < kPruneThreshold) {
                    continue;
                }
                auto labels = branch.outcome_labels;
                labels.push_back(p.label);
                next.push_back({std::move(labels), joint, StateVector::normalized(std::move(p.unnormalized))});
            }
        }
        frontier = std::move(next);
    }
    return frontier;
}

ScriptedOutcomes::ScriptedOutcomes(std::vector<size_t> prefix) : prefix_(std::move(prefix)) {
}

size_t ScriptedOutcomes::choose(std::span<const double> probabilities) {
    std::vector<size_t> feasible;
    for (size_t k = 0; k < probabilities.size(); k++) {
        if (probabilities[k] >= kPruneThreshold) {
            feasible.push_back(k);
        }
    }
    if (feasible.empty()) {
        throw std::runtime_error("All outcome probabilities vanish; the state is numerically corrupted.");
    }
    size_t depth = choices_.size();
    size_t pick = depth < prefix_.size() ? prefix_[depth] : feasible.front();
    if (pick >= probabilities.size() || probabilities[pick] < kPruneThreshold) {
        std::stringstream ss;
        ss << "Scripted outcome " << pick << " at decision " << depth << " is impossible.";
        throw std::logic_error(ss.str());
    }
    choices_.push_back(pick);
    feasible_.push_back(std::move(feasible));
    probability_ *= probabilities[pick];
    return pick;
}

}  // namespace mbqc
