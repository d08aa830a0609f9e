#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bnloci/curve.hpp"
#include "bnloci/multidegree.hpp"

namespace bnloci {

/// Sign pattern of a semistable multidegree on a circular curve: the
/// positions where d_i = g_i - 1 (minus) and d_i = g_i + 1 (plus).  Valid
/// patterns have equally many of each, alternating in cyclic order; ell = 0
/// (both empty) characterizes the unique stable multidegree.
/// Positions are 0-based vertex indices, ascending.
struct CircularPattern {
    int gamma = 0;
    std::vector<int> minus_positions;
    std::vector<int> plus_positions;

    int ell() const { return static_cast<int>(minus_positions.size()); }
};

/// Two components of genera genus1, genus2 joined by `nodes` >= 1 nodes.
/// Labels are "C1", "C2".  Total genus genus1 + genus2 + nodes - 1.
NodalCurve two_component_curve(int genus1, int genus2, int nodes);

/// Cycle of gamma = |genera| >= 3 components, consecutive ones (and the
/// first and last) meeting in a single node.  Labels "C1".."Cgamma".
/// Total genus 1 + sum of genera.
NodalCurve circular_curve(const std::vector<int>& genera);

/// Extracts the sign pattern of d on the circular curve with the given
/// genera, or nothing when d does not have the semistable shape (an entry
/// outside {g_i - 1, g_i, g_i + 1}, or signs failing to alternate around
/// the cycle).
std::optional<CircularPattern> circular_pattern(const std::vector<int>& genera,
                                                const Multidegree& d);

/// All semistable multidegrees of total degree g - 1 on the circular curve,
/// generated from the valid sign patterns (not by testing the semistability
/// inequalities).  Deterministic order: the stable multidegree first, then
/// ascending by sign-position bitmask, minus-first before plus-first.
std::vector<Multidegree> circular_semistable_multidegrees(const std::vector<int>& genera);

/// Closed-form number of irreducible components of W_d(C) on a circular
/// curve with all genera >= 1 and d strictly semistable of total degree
/// g - 1.  Evaluates, after rotating labels so position 1 carries a minus
/// sign,
///     n(d) = 1 + sum over r,s of (j_r - k_r) * (k_{s+1} - j_s)
/// with k_{ell+1} = gamma + 1.  Throws std::invalid_argument when a genus
/// is < 1, when d is not semistable, or when d is stable.
long long circular_component_count(const std::vector<int>& genera, const Multidegree& d);

/// The alternating multidegree (g_1 - 1, g_2 + 1, ..., g_{2l} + 1) on a
/// circular curve with an even number >= 4 of components.  Throws
/// std::invalid_argument for odd or too-short genera lists.
Multidegree alternating_multidegree(const std::vector<int>& genera);

/// Case analysis of the two strictly semistable multidegrees
/// d = (g1 - 1, g2 - 1 + k) and e = (g1 - 1 + k, g2 - 1) on a
/// two-component curve: which of the four genus-vanishing cases applies and
/// the expected component labels of W_d and W_e in that case.
struct TwoComponentClassification {
    char case_tag = '?';  // 'a': g1=g2=0, 'b': g1=0, 'c': g2=0, 'd': neither
    Multidegree d;
    Multidegree e;
    std::vector<Subcurve> w_d_subcurves;  // label subcurves of W_d components
    std::vector<Subcurve> w_e_subcurves;
    std::vector<std::string> w_d_names;   // twisted-Abel names, e.g. "A_d", "A_{e,C1}"
    std::vector<std::string> w_e_names;

    int w_d_count() const { return static_cast<int>(w_d_subcurves.size()); }
    int w_e_count() const { return static_cast<int>(w_e_subcurves.size()); }
};

TwoComponentClassification two_component_classification(int genus1, int genus2, int nodes);

}  // namespace bnloci
