#include "bnloci/multidegree.hpp"

#include <numeric>
#include <stdexcept>

namespace bnloci {

long long Multidegree::total() const {
    return std::accumulate(values_.begin(), values_.end(), 0LL);
}

bool Multidegree::is_effective() const {
    for (long long v : values_) {
        if (v < 0) return false;
    }
    return true;
}

Multidegree& Multidegree::operator+=(const Multidegree& other) {
    if (size() != other.size()) throw std::invalid_argument("multidegree: size mismatch");
    for (int i = 0; i < size(); ++i) values_[i] += other.values_[i];
    return *this;
}

Multidegree& Multidegree::operator-=(const Multidegree& other) {
    if (size() != other.size()) throw std::invalid_argument("multidegree: size mismatch");
    for (int i = 0; i < size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

void require_matching_size(const NodalCurve& curve, const Multidegree& d) {
    if (d.size() != curve.component_count()) {
        throw std::invalid_argument("multidegree: " + std::to_string(d.size()) +
                                    " entries for a curve with " +
                                    std::to_string(curve.component_count()) + " components");
    }
}

Multidegree restrict_to(const Multidegree& d, const Subcurve& z) {
    std::vector<long long> values;
    values.reserve(static_cast<std::size_t>(z.size()));
    for (int v : z.members()) values.push_back(d[v]);
    return Multidegree(std::move(values));
}

long long omega_restricted_degree(const NodalCurve& curve, const Subcurve& z) {
    require_valid_subcurve(curve, z);
    return 2 * subcurve_genus(curve, z) - 2 * n_components(curve, z) + edge_cut(curve, z);
}

namespace {

enum class Strictness { Weak, Strict };

// The canonical inequality for a connected proper subcurve z, with both
// sides multiplied by 2(2g-2) > 0 to stay in integers:
//   2(2g-2) d_z  >=  2|d| deg(omega|_z) - (2g-2) k_z.
bool passes_canonical(const NodalCurve& curve, const Multidegree& d, const Subcurve& z,
                      long long genus, Strictness strictness) {
    const long long dz = restrict_to(d, z).total();
    const long long two_g_minus_2 = 2 * genus - 2;
    const long long lhs = 2 * two_g_minus_2 * dz;
    const long long rhs =
        2 * d.total() * omega_restricted_degree(curve, z) - two_g_minus_2 * edge_cut(curve, z);
    return strictness == Strictness::Strict ? lhs > rhs : lhs >= rhs;
}

std::optional<Subcurve> first_canonical_failure(const NodalCurve& curve, const Multidegree& d,
                                                Strictness strictness) {
    require_matching_size(curve, d);
    const long long genus = total_genus(curve);
    if (genus < 2) {
        throw std::invalid_argument("semistability: requires total genus >= 2, got " +
                                    std::to_string(genus));
    }
    const auto full = Subcurve::full(curve.component_count());
    for (const Subcurve& z : connected_subcurves(curve)) {
        if (z == full) continue;
        if (!passes_canonical(curve, d, z, genus, strictness)) return z;
    }
    return std::nullopt;
}

}  // namespace

bool is_semistable(const NodalCurve& curve, const Multidegree& d) {
    return !first_canonical_failure(curve, d, Strictness::Weak).has_value();
}

bool is_stable(const NodalCurve& curve, const Multidegree& d) {
    return !first_canonical_failure(curve, d, Strictness::Strict).has_value();
}

std::optional<Subcurve> semistability_witness(const NodalCurve& curve, const Multidegree& d) {
    return first_canonical_failure(curve, d, Strictness::Weak);
}

bool is_semistable_g1(const NodalCurve& curve, const Multidegree& d) {
    require_matching_size(curve, d);
    const long long genus = total_genus(curve);
    if (d.total() != genus - 1) {
        throw std::invalid_argument("semistability: total degree " + std::to_string(d.total()) +
                                    " differs from g - 1 = " + std::to_string(genus - 1));
    }
    const auto full = Subcurve::full(curve.component_count());
    for (const Subcurve& z : connected_subcurves(curve)) {
        if (z == full) continue;
        // d_z >= g_z - n_z with n_z = 1 for connected z.
        if (restrict_to(d, z).total() < subcurve_genus(curve, z) - 1) return false;
    }
    return true;
}

}  // namespace bnloci
