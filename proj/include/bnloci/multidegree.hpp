#pragma once

#include <optional>
#include <vector>

#include "bnloci/curve.hpp"

namespace bnloci {

/// Integer degree vector indexed by the vertex order of an associated
/// NodalCurve.  The pairing with a curve is checked by every operation that
/// takes both.
class Multidegree {
public:
    Multidegree() = default;
    explicit Multidegree(std::vector<long long> values) : values_(std::move(values)) {}

    static Multidegree zero(int size) { return Multidegree(std::vector<long long>(size, 0)); }

    int size() const { return static_cast<int>(values_.size()); }
    long long operator[](int i) const { return values_.at(i); }
    const std::vector<long long>& values() const { return values_; }

    long long total() const;
    bool is_effective() const;

    Multidegree& operator+=(const Multidegree& other);
    Multidegree& operator-=(const Multidegree& other);
    friend Multidegree operator+(Multidegree lhs, const Multidegree& rhs) { return lhs += rhs; }
    friend Multidegree operator-(Multidegree lhs, const Multidegree& rhs) { return lhs -= rhs; }

    bool operator==(const Multidegree&) const = default;

private:
    std::vector<long long> values_;
};

/// Sub-vector of d on the members of z, in ascending vertex order.
Multidegree restrict_to(const Multidegree& d, const Subcurve& z);

/// Degree of the dualizing sheaf of the curve restricted to z:
/// 2 g_z - 2 n_z + k_z.  z must be nonempty.
long long omega_restricted_degree(const NodalCurve& curve, const Subcurve& z);

/// Canonical semistability of d: for every nonempty proper connected
/// subcurve z,
///     d_z >= |d| * deg(omega|_z) / (2g - 2) - k_z / 2,
/// evaluated exactly by cross-multiplication.  Quantifying over connected z
/// only is equivalent to quantifying over all proper subcurves because both
/// sides are additive over the connected components of z.
/// Throws std::invalid_argument when total_genus(curve) < 2.
bool is_semistable(const NodalCurve& curve, const Multidegree& d);

/// Specialized semistability test at total degree g - 1: for every nonempty
/// proper connected subcurve z, d_z >= g_z - n_z (with n_z = 1).  Defined
/// for every genus; throws std::invalid_argument when |d| != g - 1.
bool is_semistable_g1(const NodalCurve& curve, const Multidegree& d);

/// Strict form of is_semistable.  Same preconditions.
bool is_stable(const NodalCurve& curve, const Multidegree& d);

/// First (in bitmask order) nonempty proper connected subcurve violating the
/// semistability inequality, or nothing when d is semistable.  Same
/// preconditions as is_semistable.
std::optional<Subcurve> semistability_witness(const NodalCurve& curve, const Multidegree& d);

/// Throws std::invalid_argument unless d has one entry per component.
void require_matching_size(const NodalCurve& curve, const Multidegree& d);

}  // namespace bnloci
