#pragma once

// Serial, from-scratch implementations kept as test oracles for the
// parallel kernels. None of these share code paths with their counterparts.

#include <cstddef>

#include "cutcover/family.hpp"
#include "cutcover/graph.hpp"
#include "cutcover/properties.hpp"

namespace cutcover::reference {

/// Evaluates cut_capacity for every subset; no Gray code, no scaling.
SetFamily enumerate_small_cuts(const CapGraph& g, const Rational& lambda);

/// Quadratic minimality filter.
SetFamily cores(const SetFamily& f);

PropertyReport check_symmetry(const SetFamily& f);
PropertyReport check_pliable(const SetFamily& f);
PropertyReport check_structural_submodularity(const SetFamily& f);
PropertyReport check_sparse_crossing(const SetFamily& f);
PropertyReport check_disjoint_cores(const SetFamily& f);
/// Exhaustive (γ*) check by brute force over all subfamilies of candidate sets.
PropertyReport check_gamma_star(const SetFamily& f);

}  // namespace cutcover::reference
