#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bnloci/curve.hpp"
#include "bnloci/multidegree.hpp"

namespace testsupport {

using bnloci::Multidegree;
using bnloci::NodalCurve;
using bnloci::Subcurve;
using bnloci::VertexInfo;

/// Deterministic integer in [lo, hi].  Uses the raw engine output so the
/// sequence is identical across standard libraries for a fixed seed.
inline long long pick(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Random connected multigraph curve: a random spanning tree with random
/// edge multiplicities, plus a few extra edges, never exceeding max_mult per
/// vertex pair.  Genera are uniform in [0, max_genus].
inline NodalCurve random_connected_curve(std::mt19937_64& rng, int min_gamma, int max_gamma,
                                         int max_mult, int max_genus) {
    const int gamma = static_cast<int>(pick(rng, min_gamma, max_gamma));
    std::vector<VertexInfo> vertices;
    vertices.reserve(gamma);
    for (int i = 0; i < gamma; ++i) {
        vertices.push_back({"C" + std::to_string(i + 1),
                            static_cast<int>(pick(rng, 0, max_genus))});
    }
    std::vector<std::vector<int>> count(gamma, std::vector<int>(gamma, 0));
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < gamma; ++v) {
        const int parent = static_cast<int>(pick(rng, 0, v - 1));
        const int mult = static_cast<int>(pick(rng, 1, max_mult));
        count[parent][v] = mult;
        for (int m = 0; m < mult; ++m) edges.emplace_back(parent, v);
    }
    if (gamma >= 2) {
        const int extras = static_cast<int>(pick(rng, 0, gamma));
        for (int t = 0; t < extras; ++t) {
            const int u = static_cast<int>(pick(rng, 0, gamma - 1));
            const int v = static_cast<int>(pick(rng, 0, gamma - 1));
            if (u == v) continue;
            const int lo = u < v ? u : v;
            const int hi = u < v ? v : u;
            if (count[lo][hi] >= max_mult) continue;
            ++count[lo][hi];
            edges.emplace_back(lo, hi);
        }
    }
    return NodalCurve(std::move(vertices), edges);
}

/// Random connected curve with total genus >= 2 (resamples until so).
inline NodalCurve random_curve_genus2(std::mt19937_64& rng, int min_gamma, int max_gamma,
                                      int max_mult, int max_genus) {
    while (true) {
        NodalCurve curve = random_connected_curve(rng, min_gamma, max_gamma, max_mult, max_genus);
        if (bnloci::total_genus(curve) >= 2) return curve;
    }
}

/// Random multidegree with the given entry bounds and exact total, or
/// nothing when the bounds make that total unreachable.
inline std::optional<Multidegree> random_multidegree_with_total(std::mt19937_64& rng, int size,
                                                                long long total, long long lo,
                                                                long long hi) {
    if (size * lo > total || size * hi < total) return std::nullopt;
    std::vector<long long> values(size);
    long long current = 0;
    for (auto& value : values) {
        value = pick(rng, lo, hi);
        current += value;
    }
    while (current != total) {
        const int i = static_cast<int>(pick(rng, 0, size - 1));
        if (current < total && values[i] < hi) {
            ++values[i];
            ++current;
        } else if (current > total && values[i] > lo) {
            --values[i];
            --current;
        }
    }
    return Multidegree(std::move(values));
}

/// Number of connected pieces of a vertex subset, by repeated breadth-first
/// search.  Deliberately independent of the library's n_components.
inline long long naive_piece_count(const NodalCurve& curve, std::uint64_t mask) {
    long long pieces = 0;
    std::uint64_t remaining = mask;
    while (remaining != 0) {
        ++pieces;
        int start = 0;
        while (((remaining >> start) & 1u) == 0) ++start;
        std::vector<int> queue{start};
        std::uint64_t seen = std::uint64_t{1} << start;
        while (!queue.empty()) {
            const int v = queue.back();
            queue.pop_back();
            for (int u = 0; u < curve.component_count(); ++u) {
                if (((remaining >> u) & 1u) && !((seen >> u) & 1u) &&
                    curve.multiplicity(u, v) > 0) {
                    seen |= std::uint64_t{1} << u;
                    queue.push_back(u);
                }
            }
        }
        remaining &= ~seen;
    }
    return pieces;
}

inline bool naive_connected(const NodalCurve& curve, std::uint64_t mask) {
    return mask != 0 && naive_piece_count(curve, mask) == 1;
}

/// Independent subcurve genus: sum of genera + internal edges - |Z| + pieces.
inline long long naive_subcurve_genus(const NodalCurve& curve, std::uint64_t mask) {
    long long genus_sum = 0;
    long long internal = 0;
    long long size = 0;
    for (int v = 0; v < curve.component_count(); ++v) {
        if (((mask >> v) & 1u) == 0) continue;
        ++size;
        genus_sum += curve.vertex(v).genus;
        for (int u = v + 1; u < curve.component_count(); ++u) {
            if ((mask >> u) & 1u) internal += curve.multiplicity(u, v);
        }
    }
    return genus_sum + internal - size + naive_piece_count(curve, mask);
}

/// Degree-(g-1) semistability checked the slow way: over every nonempty
/// proper subset, connected or not.
inline bool naive_semistable_g1(const NodalCurve& curve, const Multidegree& d) {
    const int gamma = curve.component_count();
    const std::uint64_t universe = (std::uint64_t{1} << gamma) - 1;
    for (std::uint64_t mask = 1; mask < universe; ++mask) {
        long long d_z = 0;
        for (int v = 0; v < gamma; ++v) {
            if ((mask >> v) & 1u) d_z += d[v];
        }
        if (d_z < naive_subcurve_genus(curve, mask) - naive_piece_count(curve, mask)) return false;
    }
    return true;
}

/// Exact general semistability over every nonempty proper subset, by
/// cross-multiplying the canonical inequality with 2(2g-2).
inline bool naive_semistable_general(const NodalCurve& curve, const Multidegree& d) {
    const int gamma = curve.component_count();
    const long long g = bnloci::total_genus(curve);
    const std::uint64_t universe = (std::uint64_t{1} << gamma) - 1;
    for (std::uint64_t mask = 1; mask < universe; ++mask) {
        long long d_z = 0;
        long long cut = 0;
        for (int v = 0; v < gamma; ++v) {
            if (((mask >> v) & 1u) == 0) continue;
            d_z += d[v];
            for (int u = 0; u < gamma; ++u) {
                if (((mask >> u) & 1u) == 0) cut += curve.multiplicity(u, v);
            }
        }
        const long long omega =
            2 * naive_subcurve_genus(curve, mask) - 2 * naive_piece_count(curve, mask) + cut;
        if (2 * (2 * g - 2) * d_z < 2 * d.total() * omega - cut * (2 * g - 2)) return false;
    }
    return true;
}

}  // namespace testsupport
