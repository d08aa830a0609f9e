// Acceptance gate: ten end-to-end criteria, one pass/fail line each.
// A criterion fails on any wrong value, any exception, or (where a limit is
// pinned) on exceeding its time budget.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bnloci/brill_noether.hpp"
#include "bnloci/curve.hpp"
#include "bnloci/families.hpp"
#include "bnloci/multidegree.hpp"
#include "bnloci/twister.hpp"

#include "support.hpp"

using namespace bnloci;

namespace {

std::string plural_detail(long long bad, const std::string& what) {
    if (bad == 0) return "";
    return std::to_string(bad) + " " + what;
}

/// All genera vectors with entries in {1, 2} of the given length.
std::vector<std::vector<int>> genus_grid(int gamma) {
    std::vector<std::vector<int>> out;
    std::vector<int> genera(gamma, 1);
    while (true) {
        out.push_back(genera);
        int position = gamma - 1;
        while (position >= 0 && genera[position] == 2) genera[position--] = 1;
        if (position < 0) break;
        ++genera[position];
    }
    return out;
}

/// All degree-(g-1) semistable multidegrees on a two-component curve, by
/// brute force over a window around the balanced value.
std::vector<Multidegree> two_component_semistable(const NodalCurve& curve) {
    const long long target = total_genus(curve) - 1;
    const int g1 = curve.vertex(0).genus;
    std::vector<Multidegree> out;
    for (long long d1 = g1 - 3; d1 <= target - curve.vertex(1).genus + 4; ++d1) {
        const Multidegree d({d1, target - d1});
        if (is_semistable_g1(curve, d)) out.push_back(d);
    }
    return out;
}

/// Decomposition instances backing criteria 7 and 9: the even-cycle
/// alternating cases, the full circular grid, and the two-component grid.
struct Instance {
    NodalCurve curve;
    Multidegree d;
};

std::vector<Instance> label_population() {
    std::vector<Instance> out;
    for (int gamma : {4, 6, 8}) {
        const std::vector<int> ones(gamma, 1);
        out.push_back({circular_curve(ones), alternating_multidegree(ones)});
    }
    for (int gamma = 3; gamma <= 6; ++gamma) {
        for (const auto& genera : genus_grid(gamma)) {
            const NodalCurve curve = circular_curve(genera);
            for (const Multidegree& d : circular_semistable_multidegrees(genera)) {
                out.push_back({curve, d});
            }
        }
    }
    for (int g1 = 0; g1 <= 3; ++g1) {
        for (int g2 = 0; g2 <= 3; ++g2) {
            for (int k = 1; k <= 3; ++k) {
                if (g1 + g2 + k - 1 < 2) continue;
                const NodalCurve curve = two_component_curve(g1, g2, k);
                const auto classification = two_component_classification(g1, g2, k);
                out.push_back({curve, classification.d});
                out.push_back({curve, classification.e});
            }
        }
    }
    return out;
}

// ------------------------------------------------------------ criteria

std::string criterion_even_cycles() {
    const std::vector<std::pair<int, std::size_t>> expected = {{4, 5}, {6, 10}, {8, 17}};
    std::ostringstream bad;
    for (const auto& [gamma, want] : expected) {
        const auto start = std::chrono::steady_clock::now();
        const std::vector<int> ones(gamma, 1);
        const auto labels =
            enumerate_components(circular_curve(ones), alternating_multidegree(ones));
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (labels.size() != want) {
            bad << "cycle length " << gamma << " gave " << labels.size() << " labels, wanted "
                << want << "; ";
        }
        if (seconds >= 1.0) {
            bad << "cycle length " << gamma << " took " << seconds << "s (limit 1s each); ";
        }
    }
    return bad.str();
}

std::string criterion_circular_counts() {
    long long mismatches = 0;
    long long instances = 0;
    for (int gamma = 3; gamma <= 6; ++gamma) {
        for (const auto& genera : genus_grid(gamma)) {
            const NodalCurve curve = circular_curve(genera);
            for (const Multidegree& d : circular_semistable_multidegrees(genera)) {
                if (circular_pattern(genera, d)->ell() == 0) continue;
                ++instances;
                const long long formula = circular_component_count(genera, d);
                const long long enumerated =
                    static_cast<long long>(enumerate_components(curve, d).size());
                if (formula != enumerated) ++mismatches;
            }
        }
    }
    if (instances < 1000) return "grid unexpectedly small: " + std::to_string(instances);
    return plural_detail(mismatches, "count mismatches");
}

std::string criterion_semistable_sets() {
    long long bad_sets = 0;
    for (int gamma = 3; gamma <= 6; ++gamma) {
        for (const auto& genera : genus_grid(gamma)) {
            const NodalCurve curve = circular_curve(genera);
            const long long target = total_genus(curve) - 1;

            std::set<std::vector<long long>> expected;
            std::vector<int> digit(gamma, 0);
            std::vector<long long> entry(gamma);
            while (true) {
                long long total = 0;
                for (int i = 0; i < gamma; ++i) {
                    entry[i] = genera[i] - 2 + digit[i];
                    total += entry[i];
                }
                if (total == target &&
                    testsupport::naive_semistable_g1(curve, Multidegree(entry))) {
                    expected.insert(entry);
                }
                int position = gamma - 1;
                while (position >= 0 && digit[position] == 4) digit[position--] = 0;
                if (position < 0) break;
                ++digit[position];
            }

            std::set<std::vector<long long>> generated;
            for (const Multidegree& d : circular_semistable_multidegrees(genera)) {
                generated.insert(d.values());
            }
            if (generated != expected) ++bad_sets;
        }
    }
    return plural_detail(bad_sets, "set mismatches");
}

std::string criterion_two_component_table() {
    long long mismatches = 0;
    for (int g1 = 0; g1 <= 3; ++g1) {
        for (int g2 = 0; g2 <= 3; ++g2) {
            for (int k = 1; k <= 3; ++k) {
                if (g1 + g2 + k - 1 < 2) continue;
                const NodalCurve curve = two_component_curve(g1, g2, k);
                const auto expected = two_component_classification(g1, g2, k);
                const auto w_d = enumerate_components(curve, expected.d);
                const auto w_e = enumerate_components(curve, expected.e);
                if (w_d.size() != static_cast<std::size_t>(expected.w_d_count())) ++mismatches;
                if (w_e.size() != static_cast<std::size_t>(expected.w_e_count())) ++mismatches;
                if (w_d.size() != w_e.size()) ++mismatches;
            }
        }
    }
    return plural_detail(mismatches, "grid cells off the case table");
}

std::string criterion_semistability_agreement() {
    std::mt19937_64 rng(101);
    long long disagreements = 0;
    int samples = 0;
    while (samples < 1000) {
        const NodalCurve curve = testsupport::random_curve_genus2(rng, 1, 7, 3, 3);
        int max_genus = 0;
        for (const VertexInfo& v : curve.vertices()) {
            if (v.genus > max_genus) max_genus = v.genus;
        }
        const auto d = testsupport::random_multidegree_with_total(
            rng, curve.component_count(), total_genus(curve) - 1, -2, max_genus + 2);
        if (!d) continue;
        ++samples;
        if (is_semistable(curve, *d) != is_semistable_g1(curve, *d)) ++disagreements;
    }
    return plural_detail(disagreements, "disagreements");
}

std::string criterion_genus_additivity() {
    std::mt19937_64 rng(102);
    long long violations = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const NodalCurve curve = testsupport::random_connected_curve(rng, 2, 8, 3, 3);
        const long long g = total_genus(curve);
        const std::uint64_t universe = (std::uint64_t{1} << curve.component_count()) - 1;
        for (std::uint64_t mask = 1; mask < universe; ++mask) {
            const Subcurve z(mask);
            const Subcurve rest = complement(curve, z);
            const long long rebuilt = subcurve_genus(curve, z) + subcurve_genus(curve, rest) +
                                      edge_cut(curve, z) + 1 - n_components(curve, z) -
                                      n_components(curve, rest);
            if (rebuilt != g) ++violations;
        }
    }
    return plural_detail(violations, "identity violations");
}

std::string criterion_global_twist_semistable() {
    long long violations = 0;
    long long labels_seen = 0;
    for (const Instance& instance : label_population()) {
        const Decomposition decomposition = classify(instance.curve, instance.d);
        if (decomposition.full_jacobian) return "population contains a non-semistable input";
        const long long target = total_genus(instance.curve) - 1;
        for (const ComponentLabel& label : decomposition.components) {
            ++labels_seen;
            const Subcurve rest = complement(instance.curve, label.subcurve);
            const Multidegree global =
                instance.d -
                twister_multidegree(instance.curve,
                                    TwisterCoefficients::indicator(
                                        rest, instance.curve.component_count()));
            if (global.total() != target || !is_semistable_g1(instance.curve, global)) {
                ++violations;
            }
        }
    }
    if (labels_seen == 0) return "no labels produced";
    return plural_detail(violations, "labels with non-semistable global twists");
}

std::string criterion_correspondence() {
    std::vector<std::pair<NodalCurve, std::vector<Multidegree>>> arenas;
    for (int g1 = 1; g1 <= 3; ++g1) {
        for (int g2 = 1; g2 <= 3; ++g2) {
            for (int k = 1; k <= 3; ++k) {
                const NodalCurve curve = two_component_curve(g1, g2, k);
                arenas.emplace_back(curve, two_component_semistable(curve));
            }
        }
    }
    for (int gamma : {3, 4}) {
        for (const auto& genera : genus_grid(gamma)) {
            arenas.emplace_back(circular_curve(genera), circular_semistable_multidegrees(genera));
        }
    }
    for (int gamma : {5, 6}) {
        const std::vector<int> ones(gamma, 1);
        arenas.emplace_back(circular_curve(ones), circular_semistable_multidegrees(ones));
    }

    long long related_pairs = 0;
    long long failures = 0;
    for (const auto& [curve, degrees] : arenas) {
        for (const Multidegree& d : degrees) {
            const std::size_t d_count = enumerate_components(curve, d).size();
            for (const Multidegree& e : degrees) {
                if (!solve_twister(curve, e - d)) continue;
                ++related_pairs;
                const auto pairing = correspondence(curve, d, e);
                if (!pairing) {
                    ++failures;
                    continue;
                }
                const std::size_t e_count = enumerate_components(curve, e).size();
                if (pairing->size() != d_count || pairing->size() != e_count) ++failures;
            }
        }
    }
    if (related_pairs == 0) return "no twister-related pairs found";
    return plural_detail(failures, "incomplete bijections");
}

std::string criterion_dimensions() {
    long long violations = 0;
    long long labels_seen = 0;
    for (const Instance& instance : label_population()) {
        const long long g = total_genus(instance.curve);
        for (const ComponentLabel& label : classify(instance.curve, instance.d).components) {
            ++labels_seen;
            if (component_dimension(instance.curve, label) != g - 1) ++violations;
        }
    }
    if (labels_seen == 0) return "no labels produced";
    return plural_detail(violations, "labels off dimension g-1");
}

std::string criterion_twister_round_trip() {
    std::mt19937_64 rng(103);
    long long failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const NodalCurve curve = testsupport::random_connected_curve(rng, 1, 7, 3, 2);
        std::vector<long long> values(curve.component_count());
        for (auto& x : values) x = testsupport::pick(rng, -6, 6);
        const TwisterCoefficients c(values);
        const auto solved = solve_twister(curve, twister_multidegree(curve, c));
        if (!solved || !(*solved == c.normalized())) ++failures;
    }
    if (solve_twister(two_component_curve(1, 1, 2), Multidegree({1, -1}))) {
        ++failures;  // off-lattice target must be rejected
    }
    return plural_detail(failures, "round-trip failures");
}

struct Criterion {
    std::string name;
    double limit_seconds;  // 0 = no pinned limit
    std::function<std::string()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"alternating multidegrees on 4/6/8-cycles give 5/10/17 components (<1s each)", 3.0,
         criterion_even_cycles},
        {"closed-form circular counts equal enumeration, cycles 3-6, genera {1,2}", 30.0,
         criterion_circular_counts},
        {"pattern-generated semistable sets equal brute-force window filters", 30.0,
         criterion_semistable_sets},
        {"two-component case table matches enumeration, equal counts both sides", 5.0,
         criterion_two_component_table},
        {"general and specialized semistability agree on 1000 random samples", 0.0,
         criterion_semistability_agreement},
        {"genus splits over subcurve/complement exhaustively on random curves", 0.0,
         criterion_genus_additivity},
        {"global twisted multidegrees of all emitted labels are semistable", 0.0,
         criterion_global_twist_semistable},
        {"twister-related semistable pairs admit complete component bijections", 0.0,
         criterion_correspondence},
        {"every component dimension equals g-1", 0.0, criterion_dimensions},
        {"twister solve/evaluate round trip, 1000 samples, off-lattice rejected", 0.0,
         criterion_twister_round_trip},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& criterion = criteria[i];
        std::string detail;
        bool passed = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            detail = criterion.body();
            passed = detail.empty();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.limit_seconds > 0 && seconds >= criterion.limit_seconds) {
            passed = false;
            if (!detail.empty()) detail += "; ";
            detail += "exceeded " + std::to_string(criterion.limit_seconds) + "s limit";
        }
        std::printf("[%s] criterion %zu: %s (%.2fs", passed ? "PASS" : "FAIL", i + 1,
                    criterion.name.c_str(), seconds);
        if (criterion.limit_seconds > 0) std::printf(" < %.0fs", criterion.limit_seconds);
        std::printf(")%s%s\n", detail.empty() ? "" : " -- ", detail.c_str());
        if (!passed) ++failures;
    }
    std::printf("%d/%zu acceptance criteria passed\n",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
