// Copyright 2026 The ctmpem Authors
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

#include "ctmpem/ctmp_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "ctmpem/error.hpp"

namespace ctmpem {

namespace {

constexpr std::pair<GeneratorKind, std::string_view> kKindNames[] = {
    {GeneratorKind::single_excite, "single_excite"},   {GeneratorKind::single_decay, "single_decay"},
    {GeneratorKind::pair_excite, "pair_excite"},       {GeneratorKind::pair_decay, "pair_decay"},
    {GeneratorKind::exchange_01_10, "exchange_01_10"}, {GeneratorKind::exchange_10_01, "exchange_10_01"},
};

}  // namespace

std::string_view to_string(GeneratorKind kind) {
  for (auto [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

GeneratorKind generator_kind_from_string(std::string_view name) {
  for (auto [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw ArgumentError("unknown generator kind '" + std::string(name) + "'");
}

Bits GeneratorTerm::source_mask() const {
  return arity() == 1 ? bit(qubits[0]) : (bit(qubits[0]) | bit(qubits[1]));
}

Bits GeneratorTerm::source_value() const {
  switch (kind) {
    case GeneratorKind::single_excite:
    case GeneratorKind::pair_excite:
      return 0;
    case GeneratorKind::single_decay:
    case GeneratorKind::pair_decay:
      return source_mask();
    case GeneratorKind::exchange_01_10:
      return bit(qubits[1]);
    case GeneratorKind::exchange_10_01:
      return bit(qubits[0]);
  }
  return 0;
}

GeneratorTerm GeneratorTerm::pair(GeneratorKind kind, int a, int b, double rate) {
  if (a > b) {
    std::swap(a, b);
    if (kind == GeneratorKind::exchange_01_10) {
      kind = GeneratorKind::exchange_10_01;
    } else if (kind == GeneratorKind::exchange_10_01) {
      kind = GeneratorKind::exchange_01_10;
    }
  }
  return {kind, {a, b}, rate};
}

CtmpModel::CtmpModel(int num_qubits) : num_qubits_(num_qubits), gamma_(0.0) {
  if (num_qubits < 1 || num_qubits > kMaxBitsWidth) {
    throw SizeError("model width " + std::to_string(num_qubits) + " out of range");
  }
}

CtmpModel::CtmpModel(int num_qubits, std::vector<GeneratorTerm> terms) : CtmpModel(num_qubits) {
  for (const auto &t : terms) {
    add_term(t);
  }
  refresh_gamma();
}

void CtmpModel::validate(const GeneratorTerm &term) const {
  auto in_range = [&](int q) { return q >= 0 && q < num_qubits_; };
  if (!in_range(term.qubits[0]) || (term.arity() == 2 && !in_range(term.qubits[1]))) {
    throw ArgumentError("generator " + std::string(to_string(term.kind)) + " acts outside " +
                        std::to_string(num_qubits_) + " qubits");
  }
  if (term.arity() == 2 && term.qubits[0] == term.qubits[1]) {
    throw ArgumentError("pair generator needs two distinct qubits");
  }
  if (!(term.rate >= 0.0) || !std::isfinite(term.rate)) {
    throw ArgumentError("generator rates must be finite and nonnegative");
  }
}

void CtmpModel::compile(const GeneratorTerm &term) {
  masks_.push_back(term.source_mask());
  values_.push_back(term.source_value());
  rates_.push_back(term.rate);
}

void CtmpModel::add_term(const GeneratorTerm &input) {
  GeneratorTerm term = input;
  if (term.arity() == 1) {
    term.qubits[1] = term.qubits[0];
  } else {
    term = GeneratorTerm::pair(term.kind, term.qubits[0], term.qubits[1], term.rate);
  }
  validate(term);
  for (const auto &t : terms_) {
    if (t.kind == term.kind && t.qubits == term.qubits) {
      throw ArgumentError("duplicate generator " + std::string(to_string(term.kind)) + " on qubits " +
                          std::to_string(term.qubits[0]) + "," + std::to_string(term.qubits[1]));
    }
  }
  terms_.push_back(term);
  compile(term);
  gamma_.reset();
}

void CtmpModel::set_rate(std::size_t index, double rate) {
  GeneratorTerm t = terms_.at(index);
  t.rate = rate;
  validate(t);
  terms_[index].rate = rate;
  rates_[index] = rate;
  gamma_.reset();
}

double CtmpModel::gamma() const {
  if (!gamma_) {
    throw ConsistencyError("model gamma is stale; call refresh_gamma() after mutating the model");
  }
  return *gamma_;
}

void CtmpModel::refresh_gamma(GammaMode mode) { gamma_ = compute_gamma(*this, mode); }

double CtmpModel::outflow(Bits x) const {
  double total = 0.0;
  const std::size_t count = masks_.size();
  for (std::size_t k = 0; k < count; ++k) {
    if ((x & masks_[k]) == values_[k]) {
      total += rates_[k];
    }
  }
  return total;
}

Bits CtmpModel::transition(Bits x, double threshold) const {
  double cumulative = 0.0;
  const std::size_t count = masks_.size();
  for (std::size_t k = 0; k < count; ++k) {
    if ((x & masks_[k]) == values_[k]) {
      cumulative += rates_[k];
      if (threshold < cumulative) {
        return x ^ masks_[k];
      }
    }
  }
  return x;
}

CtmpModel CtmpModel::restricted(int num_qubits) const {
  CtmpModel out(num_qubits);
  for (const auto &t : terms_) {
    if (t.qubits[0] < num_qubits && t.qubits[1] < num_qubits) {
      out.add_term(t);
    }
  }
  out.refresh_gamma();
  return out;
}

CtmpModel CtmpModel::scaled(double factor) const {
  CtmpModel out(num_qubits_);
  for (auto t : terms_) {
    t.rate *= factor;
    out.add_term(t);
  }
  out.refresh_gamma();
  return out;
}

std::optional<double> CtmpModel::find_rate(GeneratorKind kind, int a, int b) const {
  GeneratorTerm key = is_pair_kind(kind) ? GeneratorTerm::pair(kind, a, b, 0.0) : GeneratorTerm::single(kind, a, 0.0);
  for (const auto &t : terms_) {
    if (t.kind == key.kind && t.qubits == key.qubits) {
      return t.rate;
    }
  }
  return std::nullopt;
}

double compute_gamma(const CtmpModel &model, GammaMode mode) {
  const int n = model.num_qubits();
  if (mode == GammaMode::automatic) {
    mode = n <= CtmpModel::kMaxExactGammaQubits ? GammaMode::exact : GammaMode::upper_bound;
  }
  if (mode == GammaMode::exact) {
    if (n > CtmpModel::kMaxExactGammaQubits) {
      throw SizeError("exact gamma enumerates 2^n strings and is limited to 16 qubits; use upper_bound");
    }
    double best = 0.0;
    const Bits end = bit(n);
    for (Bits x = 0; x < end; ++x) {
      best = std::max(best, model.outflow(x));
    }
    return best;
  }

  // Per qubit: the two single kinds are mutually exclusive at any x.
  std::vector<std::array<double, 2>> single(static_cast<std::size_t>(n), {0.0, 0.0});
  // Per pair: one source pattern per kind, also mutually exclusive.
  std::map<std::pair<int, int>, std::array<double, 4>> pairs;
  for (const auto &t : model.terms()) {
    switch (t.kind) {
      case GeneratorKind::single_excite:
        single[static_cast<std::size_t>(t.qubits[0])][0] += t.rate;
        break;
      case GeneratorKind::single_decay:
        single[static_cast<std::size_t>(t.qubits[0])][1] += t.rate;
        break;
      default: {
        auto &slots = pairs[{t.qubits[0], t.qubits[1]}];
        slots[static_cast<std::size_t>(t.kind) - static_cast<std::size_t>(GeneratorKind::pair_excite)] += t.rate;
        break;
      }
    }
  }
  double bound = 0.0;
  for (const auto &s : single) {
    bound += std::max(s[0], s[1]);
  }
  for (const auto &[key, slots] : pairs) {
    bound += *std::max_element(slots.begin(), slots.end());
  }
  return bound;
}

Eigen::MatrixXd dense_generator(const CtmpModel &model) {
  const int n = model.num_qubits();
  if (n > kMaxDenseQubits) {
    throw SizeError("dense generator limited to " + std::to_string(kMaxDenseQubits) + " qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto &t : model.terms()) {
    const Bits mask = t.source_mask();
    const Bits value = t.source_value();
    for (Bits x = 0; x < static_cast<Bits>(dim); ++x) {
      if ((x & mask) == value) {
        g(static_cast<Eigen::Index>(x ^ t.flip_mask()), static_cast<Eigen::Index>(x)) += t.rate;
        g(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) -= t.rate;
      }
    }
  }
  return g;
}

}  // namespace ctmpem
