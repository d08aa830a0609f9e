#include "bnloci/twister.hpp"

#include <algorithm>
#include <stdexcept>

#include "bnloci/smith.hpp"

namespace bnloci {

TwisterCoefficients TwisterCoefficients::zero(int size) {
    return TwisterCoefficients(std::vector<long long>(size, 0));
}

TwisterCoefficients TwisterCoefficients::indicator(const Subcurve& z, int size) {
    std::vector<long long> coeffs(size, 0);
    for (int v : z.members()) {
        if (v >= size) throw std::invalid_argument("twister: subcurve exceeds coefficient size");
        coeffs[v] = 1;
    }
    return TwisterCoefficients(std::move(coeffs));
}

TwisterCoefficients TwisterCoefficients::normalized() const {
    if (coeffs_.empty()) return *this;
    const long long low = *std::min_element(coeffs_.begin(), coeffs_.end());
    std::vector<long long> shifted(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) shifted[i] = coeffs_[i] - low;
    return TwisterCoefficients(std::move(shifted));
}

TwisterCoefficients& TwisterCoefficients::operator+=(const TwisterCoefficients& other) {
    if (size() != other.size()) throw std::invalid_argument("twister: size mismatch");
    for (int i = 0; i < size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

namespace {

void require_matching_size(const NodalCurve& curve, const TwisterCoefficients& c) {
    if (c.size() != curve.component_count()) {
        throw std::invalid_argument("twister: coefficient count differs from component count");
    }
}

}  // namespace

Multidegree twister_multidegree(const NodalCurve& curve, const TwisterCoefficients& c) {
    require_matching_size(curve, c);
    const int n = curve.component_count();
    std::vector<long long> degree(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) {
            degree[v] += static_cast<long long>(curve.multiplicity(u, v)) * (c[u] - c[v]);
        }
    }
    return Multidegree(std::move(degree));
}

Subcurve support_subcurve(const NodalCurve& curve, const TwisterCoefficients& c) {
    require_matching_size(curve, c);
    const TwisterCoefficients canon = c.normalized();
    std::uint64_t bits = 0;
    for (int v = 0; v < canon.size(); ++v) {
        if (canon[v] == 0) bits |= std::uint64_t{1} << v;
    }
    return Subcurve(bits);
}

std::optional<TwisterCoefficients> solve_twister(const NodalCurve& curve,
                                                 const Multidegree& delta) {
    require_matching_size(curve, delta);
    if (delta.total() != 0) return std::nullopt;

    // twister_multidegree is -L c for the graph Laplacian L, so solve
    // L c = -delta exactly over the integers.
    const int n = curve.component_count();
    BigMatrix laplacian(n, std::vector<BigInt>(n, 0));
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) {
            if (u == v) {
                laplacian[v][v] = curve.vertex_degree(v);
            } else {
                laplacian[v][u] = -curve.multiplicity(u, v);
            }
        }
    }
    std::vector<BigInt> rhs(n);
    for (int v = 0; v < n; ++v) rhs[v] = -delta[v];

    const auto solution = solve_integer_system(laplacian, rhs);
    if (!solution) return std::nullopt;

    // The kernel is the constant vectors, so normalizing pins the canonical
    // representative (and keeps entries small before narrowing).
    const BigInt low = *std::min_element(solution->begin(), solution->end());
    std::vector<long long> coeffs(solution->size());
    for (std::size_t i = 0; i < solution->size(); ++i) {
        coeffs[i] = static_cast<long long>((*solution)[i] - low);
    }
    return TwisterCoefficients(std::move(coeffs));
}

}  // namespace bnloci
