#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bnloci/curve.hpp"
#include "bnloci/multidegree.hpp"
#include "bnloci/twister.hpp"

namespace bnloci {

/// Certificate for one irreducible component of the degree-(g-1)
/// Brill-Noether locus W_d(C): a connected subcurve z together with the
/// restricted multidegree e_z (effective, of total degree g_z - 1, and
/// semistable on z).  When the globally twisted multidegree
/// e = d - deg(O_C(z')) is effective, the component is the twisted Abel
/// locus A_{e,z'}(C) and global_e records e.
struct ComponentLabel {
    Subcurve subcurve;
    Multidegree restricted;               // e_z, indexed by the members of subcurve
    std::optional<Multidegree> global_e;  // e on the whole curve, when effective

    bool twisted_abel() const { return global_e.has_value(); }
};

/// Decomposition of W_d(C).  full_jacobian is set exactly when d was not
/// semistable, in which case W_d(C) is the whole multidegree-d Jacobian and
/// the component list is empty.  A semistable d may still yield an empty
/// component list (the locus is empty).
struct Decomposition {
    bool full_jacobian = false;
    std::vector<ComponentLabel> components;
};

/// Twisted-Abel normal form A_{e,T}(C) of a component: the effective
/// multidegree e together with the twist coefficients (the indicator of the
/// complementary subcurve).
struct TwistedAbelForm {
    Multidegree multidegree;
    TwisterCoefficients twist;
};

/// Multidegree on z obtained from d by subtracting, at each vertex of z,
/// the number of edges leaving z.  Equals the restriction to z of
/// d - deg(O_C(z')).  z must be nonempty.
Multidegree induced_restricted(const NodalCurve& curve, const Multidegree& d, const Subcurve& z);

/// All nonempty subcurves z (connected or not) with induced_restricted
/// effective, in ascending bitmask order.
std::vector<Subcurve> s_set(const NodalCurve& curve, const Multidegree& d);

/// The component labels of W_d(C): one for each connected nonempty z whose
/// induced restricted multidegree is effective, of total degree g_z - 1,
/// and semistable on the induced curve of z.  Ordered by ascending subcurve
/// bitmask.  Throws std::invalid_argument unless g >= 2, |d| = g - 1 and d
/// is semistable; use classify() for arbitrary d.
std::vector<ComponentLabel> enumerate_components(const NodalCurve& curve, const Multidegree& d);

/// Full decomposition of W_d(C) at total degree g - 1: the whole Jacobian
/// when d is not semistable, otherwise the component labels.  Throws
/// std::invalid_argument unless g >= 2 and |d| = g - 1.
Decomposition classify(const NodalCurve& curve, const Multidegree& d);

/// Dimension of the component, computed through the restriction-fibration
/// bookkeeping (g_z - 1) + g_{z'} + (k_z - n_z - n_{z'} + 1), which must
/// equal g - 1.  Throws std::logic_error if the identity fails, which would
/// indicate a bug rather than bad input.
long long component_dimension(const NodalCurve& curve, const ComponentLabel& label);

/// Twisted-Abel normal form of the component labelled by z, when the global
/// multidegree e = d - deg(O_C(z')) is effective; nothing otherwise.
std::optional<TwistedAbelForm> twisted_abel_form(const NodalCurve& curve, const Multidegree& d,
                                                 const Subcurve& z);

using ComponentPairing = std::vector<std::pair<ComponentLabel, ComponentLabel>>;

/// Component-level correspondence between W_d(C) and W_e(C) when e - d lies
/// in the twister lattice: a bijection pairing labels whose twisted-Abel
/// presentations coincide after composing with the connecting twist (such
/// pairs carry the same underlying effective multidegree); labels whose
/// composed twist has disconnected support have no canonical partner and
/// are paired off in subcurve order.  Returns nothing when e - d is not a
/// twister multidegree.  Requires every vertex genus >= 1 and both
/// multidegrees semistable of total degree g - 1; throws
/// std::invalid_argument otherwise.
std::optional<ComponentPairing> correspondence(const NodalCurve& curve, const Multidegree& d,
                                               const Multidegree& e);

}  // namespace bnloci
