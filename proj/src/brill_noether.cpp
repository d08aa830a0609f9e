#include "bnloci/brill_noether.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace bnloci {

Multidegree induced_restricted(const NodalCurve& curve, const Multidegree& d, const Subcurve& z) {
    require_matching_size(curve, d);
    require_valid_subcurve(curve, z);
    std::vector<long long> values;
    values.reserve(static_cast<std::size_t>(z.size()));
    for (int v : z.members()) {
        long long outgoing = 0;
        for (int u = 0; u < curve.component_count(); ++u) {
            if (!z.contains(u)) outgoing += curve.multiplicity(v, u);
        }
        values.push_back(d[v] - outgoing);
    }
    return Multidegree(std::move(values));
}

std::vector<Subcurve> s_set(const NodalCurve& curve, const Multidegree& d) {
    require_matching_size(curve, d);
    std::vector<Subcurve> out;
    const std::uint64_t universe = Subcurve::full(curve.component_count()).bits();
    for (std::uint64_t bits = 1; bits <= universe; ++bits) {
        const Subcurve z(bits);
        if (induced_restricted(curve, d, z).is_effective()) out.push_back(z);
        if (bits == universe) break;
    }
    return out;
}

namespace {

// The three conditions a connected z must satisfy to label a component:
// e_z effective, of total degree g_z - 1, and semistable on z.
std::optional<ComponentLabel> component_candidate(const NodalCurve& curve, const Multidegree& d,
                                                  const Subcurve& z) {
    Multidegree on_z = induced_restricted(curve, d, z);
    if (!on_z.is_effective()) return std::nullopt;
    if (on_z.total() != subcurve_genus(curve, z) - 1) return std::nullopt;
    if (z.size() > 1 && !is_semistable_g1(induced_curve(curve, z), on_z)) return std::nullopt;

    ComponentLabel label{z, std::move(on_z), std::nullopt};
    const auto twist = TwisterCoefficients::indicator(complement(curve, z), curve.component_count());
    Multidegree global = d - twister_multidegree(curve, twist);
    if (global.is_effective()) label.global_e = std::move(global);
    return label;
}

std::vector<ComponentLabel> enumerate_validated(const NodalCurve& curve, const Multidegree& d) {
    std::vector<ComponentLabel> out;
    for (const Subcurve& z : connected_subcurves(curve)) {
        if (auto label = component_candidate(curve, d, z)) out.push_back(std::move(*label));
    }
    return out;
}

void require_degree_g1(const NodalCurve& curve, const Multidegree& d) {
    require_matching_size(curve, d);
    const long long genus = total_genus(curve);
    if (genus < 2) {
        throw std::invalid_argument("decomposition: requires total genus >= 2, got " +
                                    std::to_string(genus));
    }
    if (d.total() != genus - 1) {
        throw std::invalid_argument("decomposition: total degree " + std::to_string(d.total()) +
                                    " differs from g - 1 = " + std::to_string(genus - 1));
    }
}

}  // namespace

std::vector<ComponentLabel> enumerate_components(const NodalCurve& curve, const Multidegree& d) {
    require_degree_g1(curve, d);
    if (!is_semistable_g1(curve, d)) {
        throw std::invalid_argument(
            "decomposition: multidegree is not semistable; classify() handles that case");
    }
    return enumerate_validated(curve, d);
}

Decomposition classify(const NodalCurve& curve, const Multidegree& d) {
    require_degree_g1(curve, d);
    if (!is_semistable_g1(curve, d)) return Decomposition{true, {}};
    return Decomposition{false, enumerate_validated(curve, d)};
}

long long component_dimension(const NodalCurve& curve, const ComponentLabel& label) {
    const long long genus = total_genus(curve);
    const Subcurve& z = label.subcurve;
    if (z == Subcurve::full(curve.component_count())) return genus - 1;

    const Subcurve rest = complement(curve, z);
    const long long dimension = (subcurve_genus(curve, z) - 1) + subcurve_genus(curve, rest) +
                                (edge_cut(curve, z) - n_components(curve, z) -
                                 n_components(curve, rest) + 1);
    if (dimension != genus - 1) {
        throw std::logic_error("component dimension " + std::to_string(dimension) +
                               " differs from g - 1 = " + std::to_string(genus - 1) +
                               "; this is a bug");
    }
    return dimension;
}

std::optional<TwistedAbelForm> twisted_abel_form(const NodalCurve& curve, const Multidegree& d,
                                                 const Subcurve& z) {
    require_matching_size(curve, d);
    require_valid_subcurve(curve, z);
    const auto twist = TwisterCoefficients::indicator(complement(curve, z), curve.component_count());
    Multidegree global = d - twister_multidegree(curve, twist);
    if (!global.is_effective()) return std::nullopt;
    return TwistedAbelForm{std::move(global), twist};
}

std::optional<ComponentPairing> correspondence(const NodalCurve& curve, const Multidegree& d,
                                               const Multidegree& e) {
    for (const auto& v : curve.vertices()) {
        if (v.genus < 1) {
            throw std::invalid_argument("correspondence: requires every component genus >= 1 (" +
                                        v.label + " has genus 0)");
        }
    }
    require_degree_g1(curve, d);
    require_degree_g1(curve, e);
    if (!is_semistable_g1(curve, d) || !is_semistable_g1(curve, e)) {
        throw std::invalid_argument("correspondence: both multidegrees must be semistable");
    }

    const auto connecting = solve_twister(curve, e - d);
    if (!connecting) return std::nullopt;

    const auto left = enumerate_validated(curve, d);
    const auto right = enumerate_validated(curve, e);
    if (left.size() != right.size()) {
        throw std::logic_error("correspondence: component counts differ");
    }

    // A label presents its component as the twisted image of an effective
    // multidegree f: relative to its own side that twist is the indicator of
    // the complement, and pushing a left label to degree e composes it with
    // the connecting twist. Equal (f, twist) presentations denote literally
    // the same locus, so those labels are paired first. Labels whose
    // composed twist has a disconnected support have no canonical partner;
    // both sides leave equally many of them, paired off in canonical order.
    const int size = curve.component_count();
    const auto presentation_twist = [&](const Subcurve& z) {
        return TwisterCoefficients::indicator(complement(curve, z), size);
    };
    using Presentation = std::pair<std::vector<long long>, std::vector<long long>>;
    std::map<Presentation, std::size_t> right_by_presentation;
    for (std::size_t i = 0; i < right.size(); ++i) {
        if (!right[i].global_e) {
            throw std::logic_error("correspondence: label lacks an effective twisted form");
        }
        const Presentation key{right[i].global_e->values(),
                               presentation_twist(right[i].subcurve).normalized().values()};
        if (!right_by_presentation.emplace(key, i).second) {
            throw std::logic_error("correspondence: duplicate presentation on one side");
        }
    }

    std::vector<std::optional<std::size_t>> partner(left.size());
    std::vector<bool> right_taken(right.size(), false);
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (!left[i].global_e) {
            throw std::logic_error("correspondence: label lacks an effective twisted form");
        }
        const Presentation key{
            left[i].global_e->values(),
            (presentation_twist(left[i].subcurve) + *connecting).normalized().values()};
        const auto hit = right_by_presentation.find(key);
        if (hit != right_by_presentation.end()) {
            partner[i] = hit->second;
            right_taken[hit->second] = true;
        }
    }

    std::vector<std::size_t> spare;
    for (std::size_t i = 0; i < right.size(); ++i) {
        if (!right_taken[i]) spare.push_back(i);
    }
    std::size_t next_spare = 0;
    ComponentPairing pairing;
    pairing.reserve(left.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (!partner[i]) {
            if (next_spare >= spare.size()) {
                throw std::logic_error("correspondence: pairing is not a bijection");
            }
            partner[i] = spare[next_spare++];
        }
        pairing.emplace_back(left[i], right[*partner[i]]);
    }
    if (next_spare != spare.size()) {
        throw std::logic_error("correspondence: pairing is not a bijection");
    }
    return pairing;
}

}  // namespace bnloci
