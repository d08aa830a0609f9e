#pragma once

#include <optional>
#include <vector>

#include "bnloci/curve.hpp"
#include "bnloci/multidegree.hpp"

namespace bnloci {

/// Integer coefficient vector c of a formal sum of components, one entry per
/// vertex.  Acts on multidegrees through the dual-graph Laplacian; two
/// vectors differing by a constant act identically, and normalized()
/// produces the canonical representative with minimum entry 0.
class TwisterCoefficients {
public:
    TwisterCoefficients() = default;
    explicit TwisterCoefficients(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {}

    static TwisterCoefficients zero(int size);
    /// Indicator vector of z within a curve with `size` vertices.
    static TwisterCoefficients indicator(const Subcurve& z, int size);

    int size() const { return static_cast<int>(coeffs_.size()); }
    long long operator[](int i) const { return coeffs_.at(i); }
    const std::vector<long long>& values() const { return coeffs_; }

    TwisterCoefficients normalized() const;

    TwisterCoefficients& operator+=(const TwisterCoefficients& other);
    friend TwisterCoefficients operator+(TwisterCoefficients lhs, const TwisterCoefficients& rhs) {
        return lhs += rhs;
    }

    bool operator==(const TwisterCoefficients&) const = default;

private:
    std::vector<long long> coeffs_;
};

/// Multidegree of the twister with coefficients c: entry at v is
/// sum over u of m(u,v) * (c_u - c_v), i.e. the negated graph-Laplacian
/// image of c.  Always of total degree 0.
Multidegree twister_multidegree(const NodalCurve& curve, const TwisterCoefficients& c);

/// Vertices where the normalized coefficients vanish; always nonempty.
Subcurve support_subcurve(const NodalCurve& curve, const TwisterCoefficients& c);

/// Normalized coefficients c with twister_multidegree(curve, c) == delta,
/// or nothing when delta is outside the twister lattice.  A solution, when
/// it exists, is unique up to adding a constant, so the normalized
/// representative is canonical.  A delta of nonzero total degree has no
/// solution.
std::optional<TwisterCoefficients> solve_twister(const NodalCurve& curve,
                                                 const Multidegree& delta);

}  // namespace bnloci
