#include "bnloci/curve.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace bnloci {

Subcurve Subcurve::full(int vertex_count) {
    if (vertex_count <= 0 || vertex_count > 64) {
        throw std::invalid_argument("subcurve: vertex count must be in 1..64");
    }
    if (vertex_count == 64) return Subcurve(~std::uint64_t{0});
    return Subcurve((std::uint64_t{1} << vertex_count) - 1);
}

Subcurve Subcurve::single(int vertex) {
    if (vertex < 0 || vertex >= 64) {
        throw std::invalid_argument("subcurve: vertex index out of range");
    }
    return Subcurve(std::uint64_t{1} << vertex);
}

Subcurve Subcurve::from_members(std::span<const int> members) {
    std::uint64_t bits = 0;
    for (int v : members) {
        if (v < 0 || v >= 64) {
            throw std::invalid_argument("subcurve: vertex index out of range");
        }
        bits |= std::uint64_t{1} << v;
    }
    return Subcurve(bits);
}

int Subcurve::size() const { return std::popcount(bits_); }

std::vector<int> Subcurve::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
        out.push_back(std::countr_zero(rest));
    }
    return out;
}

NodalCurve::NodalCurve(std::vector<VertexInfo> vertices,
                       const std::vector<std::pair<int, int>>& edges)
    : vertices_(std::move(vertices)) {
    const int n = component_count();
    if (n == 0) throw std::invalid_argument("curve: at least one component required");
    if (n > 64) throw std::invalid_argument("curve: at most 64 components supported");

    std::unordered_set<std::string> seen;
    for (const auto& v : vertices_) {
        if (v.genus < 0) {
            throw std::invalid_argument("curve: component genus must be nonnegative: " + v.label);
        }
        if (!seen.insert(v.label).second) {
            throw std::invalid_argument("curve: duplicate component label: " + v.label);
        }
    }

    multiplicity_.assign(static_cast<std::size_t>(n) * n, 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("curve: edge endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument(
                "curve: self-loop on " + vertices_[u].label +
                "; a node joining a component to itself belongs in that component's genus");
        }
        ++multiplicity_[static_cast<std::size_t>(u) * n + v];
        ++multiplicity_[static_cast<std::size_t>(v) * n + u];
        ++edge_total_;
    }

    // Connectivity over the whole vertex set.
    std::vector<int> stack{0};
    std::uint64_t reached = 1;
    while (!stack.empty()) {
        const int at = stack.back();
        stack.pop_back();
        for (int to = 0; to < n; ++to) {
            if (multiplicity(at, to) > 0 && !((reached >> to) & 1u)) {
                reached |= std::uint64_t{1} << to;
                stack.push_back(to);
            }
        }
    }
    if (reached != Subcurve::full(n).bits()) {
        throw std::invalid_argument("curve: dual graph must be connected");
    }
}

std::optional<int> NodalCurve::index_of(std::string_view label) const {
    for (int i = 0; i < component_count(); ++i) {
        if (vertices_[i].label == label) return i;
    }
    return std::nullopt;
}

int NodalCurve::multiplicity(int u, int v) const {
    return multiplicity_.at(static_cast<std::size_t>(u) * component_count() + v);
}

long long NodalCurve::vertex_degree(int v) const {
    long long total = 0;
    for (int u = 0; u < component_count(); ++u) total += multiplicity(u, v);
    return total;
}

void require_valid_subcurve(const NodalCurve& curve, const Subcurve& z) {
    if (z.empty()) throw std::invalid_argument("subcurve: must be nonempty");
    const std::uint64_t universe = Subcurve::full(curve.component_count()).bits();
    if ((z.bits() & ~universe) != 0) {
        throw std::invalid_argument("subcurve: references nonexistent components");
    }
}

long long total_genus(const NodalCurve& curve) {
    long long genus_sum = 0;
    for (const auto& v : curve.vertices()) genus_sum += v.genus;
    return curve.edge_total() - curve.component_count() + 1 + genus_sum;
}

Subcurve complement(const NodalCurve& curve, const Subcurve& z) {
    require_valid_subcurve(curve, z);
    return Subcurve(Subcurve::full(curve.component_count()).bits() & ~z.bits());
}

long long edge_cut(const NodalCurve& curve, const Subcurve& z) {
    if (z.empty()) return 0;
    require_valid_subcurve(curve, z);
    long long cut = 0;
    for (int u : z.members()) {
        for (int v = 0; v < curve.component_count(); ++v) {
            if (!z.contains(v)) cut += curve.multiplicity(u, v);
        }
    }
    return cut;
}

namespace {

// Members of z reachable from `start` through edges internal to z.
std::uint64_t reachable_within(const NodalCurve& curve, std::uint64_t bits, int start) {
    std::uint64_t reached = std::uint64_t{1} << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        const int at = stack.back();
        stack.pop_back();
        for (int to = 0; to < curve.component_count(); ++to) {
            const std::uint64_t to_bit = std::uint64_t{1} << to;
            if ((bits & to_bit) && !(reached & to_bit) && curve.multiplicity(at, to) > 0) {
                reached |= to_bit;
                stack.push_back(to);
            }
        }
    }
    return reached;
}

}  // namespace

int n_components(const NodalCurve& curve, const Subcurve& z) {
    if (z.empty()) return 0;
    require_valid_subcurve(curve, z);
    int pieces = 0;
    std::uint64_t rest = z.bits();
    while (rest != 0) {
        const int start = std::countr_zero(rest);
        rest &= ~reachable_within(curve, rest, start);
        ++pieces;
    }
    return pieces;
}

long long subcurve_genus(const NodalCurve& curve, const Subcurve& z) {
    if (z.empty()) return 0;
    require_valid_subcurve(curve, z);
    long long genus_sum = 0;
    long long internal_edges = 0;
    const auto members = z.members();
    for (std::size_t a = 0; a < members.size(); ++a) {
        genus_sum += curve.vertex(members[a]).genus;
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            internal_edges += curve.multiplicity(members[a], members[b]);
        }
    }
    return genus_sum + internal_edges - z.size() + n_components(curve, z);
}

std::vector<Subcurve> connected_subcurves(const NodalCurve& curve) {
    const int n = curve.component_count();
    std::vector<Subcurve> out;
    const std::uint64_t universe = Subcurve::full(n).bits();
    for (std::uint64_t bits = 1; bits <= universe; ++bits) {
        const int start = std::countr_zero(bits);
        if (reachable_within(curve, bits, start) == bits) {
            out.emplace_back(bits);
        }
        if (bits == universe) break;  // guards the 64-vertex wraparound
    }
    return out;
}

NodalCurve induced_curve(const NodalCurve& curve, const Subcurve& z) {
    require_valid_subcurve(curve, z);
    const auto members = z.members();
    std::vector<VertexInfo> vertices;
    vertices.reserve(members.size());
    for (int v : members) vertices.push_back(curve.vertex(v));
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            const int count = curve.multiplicity(members[a], members[b]);
            for (int i = 0; i < count; ++i) {
                edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
            }
        }
    }
    return NodalCurve(std::move(vertices), edges);
}

}  // namespace bnloci
