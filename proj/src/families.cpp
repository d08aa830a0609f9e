#include "bnloci/families.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace bnloci {

namespace {

std::vector<VertexInfo> labelled_vertices(const std::vector<int>& genera) {
    std::vector<VertexInfo> vertices;
    vertices.reserve(genera.size());
    for (std::size_t i = 0; i < genera.size(); ++i) {
        vertices.push_back({"C" + std::to_string(i + 1), genera[i]});
    }
    return vertices;
}

}  // namespace

NodalCurve two_component_curve(int genus1, int genus2, int nodes) {
    if (nodes < 1) {
        throw std::invalid_argument("two-component curve: needs at least one node, got " +
                                    std::to_string(nodes));
    }
    std::vector<std::pair<int, int>> edges(static_cast<std::size_t>(nodes), {0, 1});
    return NodalCurve(labelled_vertices({genus1, genus2}), edges);
}

NodalCurve circular_curve(const std::vector<int>& genera) {
    const int gamma = static_cast<int>(genera.size());
    if (gamma < 3) {
        throw std::invalid_argument(
            "circular curve: needs at least 3 components (2 components with a double node form "
            "a two-component curve), got " + std::to_string(gamma));
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(gamma));
    for (int i = 0; i + 1 < gamma; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(gamma - 1, 0);
    return NodalCurve(labelled_vertices(genera), edges);
}

std::optional<CircularPattern> circular_pattern(const std::vector<int>& genera,
                                                const Multidegree& d) {
    const int gamma = static_cast<int>(genera.size());
    if (d.size() != gamma) {
        throw std::invalid_argument("circular pattern: multidegree size differs from genera size");
    }
    CircularPattern pattern;
    pattern.gamma = gamma;
    std::vector<int> signed_positions;  // ascending; sign at each
    std::vector<int> signs;
    for (int i = 0; i < gamma; ++i) {
        const long long offset = d[i] - genera[i];
        if (offset < -1 || offset > 1) return std::nullopt;
        if (offset == -1) {
            pattern.minus_positions.push_back(i);
            signed_positions.push_back(i);
            signs.push_back(-1);
        } else if (offset == 1) {
            pattern.plus_positions.push_back(i);
            signed_positions.push_back(i);
            signs.push_back(+1);
        }
    }
    // Signs must alternate around the cycle: alternation along the ascending
    // positions plus an even count closes up cyclically.
    if (signs.size() % 2 != 0) return std::nullopt;
    for (std::size_t i = 1; i < signs.size(); ++i) {
        if (signs[i] == signs[i - 1]) return std::nullopt;
    }
    return pattern;
}

std::vector<Multidegree> circular_semistable_multidegrees(const std::vector<int>& genera) {
    const int gamma = static_cast<int>(genera.size());
    if (gamma < 3) {
        throw std::invalid_argument("circular multidegrees: needs at least 3 components");
    }
    std::vector<long long> base(genera.begin(), genera.end());
    std::vector<Multidegree> out;
    out.emplace_back(base);  // the unique stable multidegree: d_i = g_i

    // Every even-size set of marked positions admits exactly two alternating
    // sign assignments around the cycle.
    const std::uint64_t universe = (std::uint64_t{1} << gamma) - 1;
    for (std::uint64_t mask = 1; mask <= universe; ++mask) {
        const int marked = std::popcount(mask);
        if (marked < 2 || marked % 2 != 0) continue;
        for (int first_sign : {-1, +1}) {
            std::vector<long long> values = base;
            int sign = first_sign;
            for (int i = 0; i < gamma; ++i) {
                if ((mask >> i) & 1u) {
                    values[i] += sign;
                    sign = -sign;
                }
            }
            out.emplace_back(values);
        }
    }
    return out;
}

long long circular_component_count(const std::vector<int>& genera, const Multidegree& d) {
    for (std::size_t i = 0; i < genera.size(); ++i) {
        if (genera[i] < 1) {
            throw std::invalid_argument("component count: requires every genus >= 1, component " +
                                        std::to_string(i + 1) + " has genus " +
                                        std::to_string(genera[i]));
        }
    }
    const auto pattern = circular_pattern(genera, d);
    if (!pattern) {
        throw std::invalid_argument("component count: multidegree is not semistable");
    }
    const int ell = pattern->ell();
    if (ell == 0) {
        throw std::invalid_argument(
            "component count: multidegree is stable; its locus has a single component");
    }
    const int gamma = pattern->gamma;

    // Rotate labels so position 1 (1-based) carries a minus sign; the minus
    // and plus positions then interleave as k_1=1 < j_1 < k_2 < ... < j_ell.
    const int rotation = pattern->minus_positions.front();
    auto rotated = [&](int position) { return (position - rotation + gamma) % gamma + 1; };
    std::vector<long long> k(static_cast<std::size_t>(ell) + 1);
    std::vector<long long> j(static_cast<std::size_t>(ell));
    for (int r = 0; r < ell; ++r) k[r] = rotated(pattern->minus_positions[r]);
    for (int r = 0; r < ell; ++r) j[r] = rotated(pattern->plus_positions[r]);
    std::sort(k.begin(), k.begin() + ell);
    std::sort(j.begin(), j.end());
    k[ell] = gamma + 1;

    long long count = 1;
    for (int r = 0; r < ell; ++r) {
        for (int s = 0; s < ell; ++s) {
            count += (j[r] - k[r]) * (k[s + 1] - j[s]);
        }
    }
    return count;
}

Multidegree alternating_multidegree(const std::vector<int>& genera) {
    const int gamma = static_cast<int>(genera.size());
    if (gamma % 2 != 0) {
        throw std::invalid_argument("alternating multidegree: needs an even number of components");
    }
    if (gamma < 4) {
        throw std::invalid_argument(
            "alternating multidegree: needs at least 4 components on a circular curve");
    }
    std::vector<long long> values(genera.size());
    for (int i = 0; i < gamma; ++i) {
        values[i] = genera[i] + (i % 2 == 0 ? -1 : +1);
    }
    return Multidegree(std::move(values));
}

TwoComponentClassification two_component_classification(int genus1, int genus2, int nodes) {
    if (nodes < 1) {
        throw std::invalid_argument("classification: needs at least one node");
    }
    if (genus1 < 0 || genus2 < 0) {
        throw std::invalid_argument("classification: genera must be nonnegative");
    }

    TwoComponentClassification out;
    out.d = Multidegree({genus1 - 1, genus2 - 1 + static_cast<long long>(nodes)});
    out.e = Multidegree({genus1 - 1 + static_cast<long long>(nodes), genus2 - 1});

    const Subcurve first = Subcurve::single(0);
    const Subcurve second = Subcurve::single(1);
    const Subcurve whole = Subcurve::full(2);

    if (genus1 == 0 && genus2 == 0) {
        out.case_tag = 'a';  // both loci empty
    } else if (genus1 == 0) {
        out.case_tag = 'b';
        out.w_d_subcurves = {second};
        out.w_d_names = {"A_{e,C1}"};
        out.w_e_subcurves = {whole};
        out.w_e_names = {"A_e"};
    } else if (genus2 == 0) {
        out.case_tag = 'c';
        out.w_d_subcurves = {whole};
        out.w_d_names = {"A_d"};
        out.w_e_subcurves = {first};
        out.w_e_names = {"A_{d,C2}"};
    } else {
        out.case_tag = 'd';
        out.w_d_subcurves = {second, whole};
        out.w_d_names = {"A_{e,C1}", "A_d"};
        out.w_e_subcurves = {first, whole};
        out.w_e_names = {"A_{d,C2}", "A_e"};
    }
    return out;
}

}  // namespace bnloci
