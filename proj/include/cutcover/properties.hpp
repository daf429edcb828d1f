#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "cutcover/family.hpp"

namespace cutcover {

enum class Property {
  symmetry,
  pliable,
  structural_submodularity,
  sparse_crossing,
  disjoint_cores,
  gamma,
  gamma_star,
};

std::string_view property_name(Property p);

/// Verdict of one family-property checker.
///
/// When `holds` is false, `counterexample` is the lexicographically least
/// witness of the violation in member order:
///   symmetry                 {S}                  V−S absent
///   pliable                  {A, B}               fewer than two corners present
///   structural_submodularity {A, B}               crossing pair missing a clause
///   sparse_crossing          {S, C1, C2}          S crosses cores C1 and C2
///   disjoint_cores           {C1, C2}             intersecting cores
///   gamma / gamma_star       {C, S0, S1, ..., Sk} remainder non-empty and absent
struct PropertyReport {
  Property property = Property::symmetry;
  bool holds = true;
  std::vector<NodeSet> counterexample;

  // Populated by the (γ)/(γ*) checkers only.
  std::uint64_t tuples_tested = 0;
  std::uint64_t tuples_total = 0;  // saturates at UINT64_MAX
  std::size_t max_k = 0;
  bool exhaustive = true;
};

PropertyReport check_symmetry(const SetFamily& f);
PropertyReport check_pliable(const SetFamily& f);
PropertyReport check_structural_submodularity(const SetFamily& f);
PropertyReport check_sparse_crossing(const SetFamily& f);
PropertyReport check_disjoint_cores(const SetFamily& f);

/// k = 1 case of check_gamma_star, always exhaustive.
PropertyReport check_gamma(const SetFamily& f);

inline constexpr std::uint64_t kDefaultSampleBudget = 100'000;

/// Remainder condition over tuples (C, S0, S1..Sk): C a core of `f`, S0 ∈ f
/// crossing C, S1..Sk pairwise-disjoint proper subsets of S0 in `f` that each
/// cross C. Holds when S0 − (S1 ∪ … ∪ Sk ∪ C) is empty or a member.
///
/// Exhaustive when the number of tuples is at most `sample_budget`; otherwise
/// `sample_budget` tuples are drawn uniformly with a generator seeded by
/// `seed`.
PropertyReport check_gamma_star(const SetFamily& f, std::uint64_t sample_budget = kDefaultSampleBudget,
                                std::uint64_t seed = 0);

/// Re-evaluates the violated condition recorded in a failing report against
/// `f`. True when the counterexample really violates the property.
bool replay_counterexample(const SetFamily& f, const PropertyReport& report);

}  // namespace cutcover
