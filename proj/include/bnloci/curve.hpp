#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bnloci {

/// One irreducible component of a nodal curve: a vertex of the dual graph
/// carrying the component's geometric genus.
struct VertexInfo {
    std::string label;
    int genus = 0;

    bool operator==(const VertexInfo&) const = default;
};

/// A subcurve: a set of vertex indices stored as a bitmask over the fixed
/// vertex order of some NodalCurve.  Bit i corresponds to vertex i, so the
/// natural integer order of masks is the canonical enumeration order used
/// throughout the library.
///
/// The empty set is representable; it only arises as the complement of the
/// whole curve and carries genus 0 and zero connected components by
/// convention.
class Subcurve {
public:
    Subcurve() = default;
    explicit Subcurve(std::uint64_t bits) : bits_(bits) {}

    static Subcurve full(int vertex_count);
    static Subcurve single(int vertex);
    static Subcurve from_members(std::span<const int> members);

    std::uint64_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int size() const;
    bool contains(int vertex) const { return (bits_ >> vertex) & 1u; }

    /// Member vertex indices in ascending order.
    std::vector<int> members() const;

    bool operator==(const Subcurve&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// Dual graph of a nodal curve: a connected multigraph whose vertices are the
/// irreducible components (with genus decoration) and whose edge
/// multiplicities count the nodes joining two distinct components.
///
/// Self-loops are rejected: a node joining a component to itself is already
/// accounted for in that component's genus.  Immutable after construction.
class NodalCurve {
public:
    /// Edges are unordered pairs of vertex indices; a repeated pair raises
    /// the multiplicity.  Throws std::invalid_argument if the vertex list is
    /// empty, a label repeats, a genus is negative, an edge index is out of
    /// range or forms a self-loop, or the multigraph is disconnected.
    NodalCurve(std::vector<VertexInfo> vertices,
               const std::vector<std::pair<int, int>>& edges);

    /// Number of irreducible components (vertices of the dual graph).
    int component_count() const { return static_cast<int>(vertices_.size()); }

    const VertexInfo& vertex(int i) const { return vertices_.at(i); }
    const std::vector<VertexInfo>& vertices() const { return vertices_; }
    std::optional<int> index_of(std::string_view label) const;

    /// Number of nodes joining components u and v (0 when u == v).
    int multiplicity(int u, int v) const;

    /// Total number of nodes between distinct components.
    long long edge_total() const { return edge_total_; }

    /// Sum of multiplicities at vertex v.
    long long vertex_degree(int v) const;

    bool operator==(const NodalCurve&) const = default;

private:
    std::vector<VertexInfo> vertices_;
    std::vector<int> multiplicity_;  // flattened component_count x component_count
    long long edge_total_ = 0;
};

/// Arithmetic genus of the whole curve: |E| - |V| + 1 + sum of vertex genera.
long long total_genus(const NodalCurve& curve);

/// Complementary subcurve; empty exactly when z is the whole curve.
Subcurve complement(const NodalCurve& curve, const Subcurve& z);

/// Total multiplicity of edges with exactly one endpoint in z.
long long edge_cut(const NodalCurve& curve, const Subcurve& z);

/// Number of connected components of the sub-multigraph induced on z
/// (0 for the empty set).
int n_components(const NodalCurve& curve, const Subcurve& z);

/// Arithmetic genus of the subcurve z with its induced edges:
/// sum of genera + internal edges - |z| + n_components(z).  Additive over
/// the connected components of z; 0 for the empty set.
long long subcurve_genus(const NodalCurve& curve, const Subcurve& z);

/// All nonempty subcurves inducing a connected sub-multigraph, in ascending
/// bitmask order.  The whole curve is always the last entry.
std::vector<Subcurve> connected_subcurves(const NodalCurve& curve);

/// The sub-multigraph induced on z as a standalone curve.  Vertex order is
/// the ascending member order of z.  z must be nonempty and connected,
/// since a NodalCurve is connected by construction.
NodalCurve induced_curve(const NodalCurve& curve, const Subcurve& z);

/// Throws std::invalid_argument unless z is a nonempty subset of the
/// curve's vertex set.
void require_valid_subcurve(const NodalCurve& curve, const Subcurve& z);

}  // namespace bnloci
