// Copyright 2026 The mprates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mprates/entropy.hpp"

#include <cmath>

#include "mprates/errors.hpp"

namespace mprates {

double spectrum_entropy(const Eigen::VectorXd& eigenvalues) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double p = eigenvalues(i);
    if (p < -tol::kValidation) {
      throw ValidityError("negative eigenvalue " + std::to_string(p) +
                          " in entropy spectrum");
    }
    if (p <= tol::kZeroEigenvalue) continue;
    s -= p * std::log2(p);
  }
  return s < 0.0 ? 0.0 : s;
}

double von_neumann_entropy(const MixedState& rho) {
  return spectrum_entropy(hermitian_eigenvalues(rho.matrix()));
}

double von_neumann_entropy(const Matrix& rho) {
  return spectrum_entropy(hermitian_eigenvalues(rho));
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ArgumentError("binary_entropy: argument " + std::to_string(x) +
                        " outside [0, 1]");
  }
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

EntropyProfile::EntropyProfile(SubsystemLayout layout,
                               std::map<PartySet, double> entries, bool pure,
                               double total)
    : layout_(std::move(layout)),
      entries_(std::move(entries)),
      pure_(pure),
      total_(pure ? 0.0 : total) {
  const auto n = layout_.num_parties();
  const auto full = layout_.all();
  for (const auto& [set, value] : entries_) {
    layout_.require_proper(set);
    if (value < -tol::kEquality) {
      throw ValidityError("negative entropy for " + layout_.name_of(set));
    }
  }
  if (pure_) {
    auto given = entries_;
    for (const auto& [set, value] : given) {
      auto comp = set.complement(n);
      auto it = entries_.find(comp);
      if (it == entries_.end()) {
        entries_.emplace(comp, value);
      } else if (std::abs(it->second - value) > tol::kEquality) {
        throw ValidityError("pure profile violates S(T) = S(complement) for " +
                            layout_.name_of(set));
      }
    }
  }
  for (std::uint32_t b = 1; b < full.bits(); ++b) {
    if (!entries_.contains(PartySet(b))) {
      throw ArgumentError("profile is missing subset " +
                          layout_.name_of(PartySet(b)));
    }
  }
}

EntropyProfile EntropyProfile::pure_tripartite(double a, double b, double c,
                                               std::vector<std::string> labels) {
  auto dim_for = [](double s) {
    return std::max(2, static_cast<int>(std::ceil(std::exp2(s) - 1e-9)));
  };
  std::vector<int> dims{dim_for(a), dim_for(b), dim_for(c)};
  SubsystemLayout layout(std::move(labels), std::move(dims));
  std::map<PartySet, double> e{{PartySet::single(0), a},
                               {PartySet::single(1), b},
                               {PartySet::single(2), c}};
  return EntropyProfile(std::move(layout), std::move(e), true);
}

double EntropyProfile::at(PartySet set) const {
  if (set == layout_.all()) return total_;
  auto it = entries_.find(set);
  if (it == entries_.end()) {
    throw ArgumentError("no entropy recorded for subset '" +
                        layout_.name_of(set) + "'");
  }
  return it->second;
}

double EntropyProfile::at(const std::vector<std::string>& labels) const {
  return at(layout_.subset(labels));
}

EntropyProfile permute_profile(const EntropyProfile& profile,
                               const std::vector<std::size_t>& order) {
  const auto& old = profile.layout();
  const auto n = old.num_parties();
  if (order.size() != n) {
    throw ArgumentError("permute_profile: order length does not match");
  }
  std::vector<std::string> labels;
  std::vector<int> dims;
  std::uint32_t seen = 0;
  for (auto o : order) {
    if (o >= n || ((seen >> o) & 1u)) {
      throw ArgumentError("permute_profile: order is not a permutation");
    }
    seen |= 1u << o;
    labels.push_back(old.parties()[o]);
    dims.push_back(old.dim(o));
  }
  SubsystemLayout layout(std::move(labels), std::move(dims));
  std::map<PartySet, double> entries;
  for (std::uint32_t b = 1; b < layout.all().bits(); ++b) {
    PartySet old_set;
    for (std::size_t k = 0; k < n; ++k) {
      if ((b >> k) & 1u) old_set = old_set | PartySet::single(order[k]);
    }
    entries.emplace(PartySet(b), profile.at(old_set));
  }
  return EntropyProfile(std::move(layout), std::move(entries), profile.pure(),
                        profile.at(old.all()));
}

EntropyProfile entropy_profile(const AnyState& state, std::size_t party_cap) {
  const auto& layout = layout_of(state);
  if (layout.num_parties() > party_cap) {
    throw CapacityError("entropy profile of " +
                        std::to_string(layout.num_parties()) +
                        " parties exceeds the cap of " +
                        std::to_string(party_cap));
  }
  const auto full = layout.all();
  std::map<PartySet, double> entries;
  for (std::uint32_t b = 1; b < full.bits(); ++b) {
    const PartySet set(b);
    entries.emplace(set, von_neumann_entropy(partial_trace(state, set)));
  }
  const bool pure = is_pure(state);
  const double total =
      pure ? 0.0 : von_neumann_entropy(std::get<MixedState>(state));
  return EntropyProfile(layout, std::move(entries), pure, total);
}

}  // namespace mprates
