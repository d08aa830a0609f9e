#include "bnloci/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bnloci/brill_noether.hpp"
#include "bnloci/curve.hpp"
#include "bnloci/families.hpp"
#include "bnloci/json_io.hpp"
#include "bnloci/multidegree.hpp"
#include "bnloci/twister.hpp"

namespace bnloci {

namespace {

using nlohmann::json;

NodalCurve load_capped(const std::string& path, int max_gamma) {
    NodalCurve curve = load_curve(path);
    if (curve.component_count() > max_gamma) {
        throw std::invalid_argument("curve has " + std::to_string(curve.component_count()) +
                                    " components, above the cap of " + std::to_string(max_gamma) +
                                    "; raise --max-gamma to allow it");
    }
    return curve;
}

Multidegree parse_multidegree(const NodalCurve& curve, const std::string& text) {
    return Multidegree(parse_int_list(text, curve.component_count()));
}

std::string csv_quote(const std::string& s) {
    std::string quoted = "\"";
    for (char ch : s) {
        quoted += ch;
        if (ch == '"') quoted += ch;
    }
    quoted += '"';
    return quoted;
}

/// Reduced semistability bound |d| * deg(omega|_z) / (2g-2) - k_z / 2 as text.
std::string bound_text(const NodalCurve& curve, const Multidegree& d, const Subcurve& z) {
    const long long g = total_genus(curve);
    const long long k = edge_cut(curve, z);
    if (d.total() == g - 1) {
        return std::to_string(subcurve_genus(curve, z) - n_components(curve, z));
    }
    long long num = 2 * d.total() * omega_restricted_degree(curve, z) - k * (2 * g - 2);
    long long den = 2 * (2 * g - 2);
    const long long divisor = std::gcd(num < 0 ? -num : num, den);
    if (divisor > 1) {
        num /= divisor;
        den /= divisor;
    }
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

json witness_json(const NodalCurve& curve, const Multidegree& d, const Subcurve& z) {
    json jz = json::array();
    for (int v : z.members()) jz.push_back(curve.vertex(v).label);
    return {{"Z", std::move(jz)},
            {"d_Z", restrict_to(d, z).total()},
            {"g_Z", subcurve_genus(curve, z)},
            {"n_Z", n_components(curve, z)},
            {"k_Z", edge_cut(curve, z)},
            {"bound", bound_text(curve, d, z)}};
}

void print_witness_line(std::ostream& out, const NodalCurve& curve, const Multidegree& d,
                        const Subcurve& z) {
    out << "witness: Z=" << format_subcurve(curve, z) << " has d_Z=" << restrict_to(d, z).total()
        << " < " << bound_text(curve, d, z) << "\n";
}

// ---------------------------------------------------------------- info

int cmd_info(std::ostream& out, const NodalCurve& curve, const std::string& output) {
    const long long subcurves = static_cast<long long>(connected_subcurves(curve).size());
    if (output == "json") {
        json j;
        j["gamma"] = curve.component_count();
        j["nodes"] = curve.edge_total();
        j["genus"] = total_genus(curve);
        j["connected_subcurves"] = subcurves;
        j["vertices"] = curve_to_json(curve)["vertices"];
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "components: " << curve.component_count() << "\n";
    for (const VertexInfo& v : curve.vertices()) {
        out << "  " << v.label << " genus=" << v.genus << "\n";
    }
    out << "nodes: " << curve.edge_total() << "\n";
    out << "genus: " << total_genus(curve) << "\n";
    out << "connected subcurves: " << subcurves << "\n";
    return 0;
}

// ---------------------------------------------------------------- semistable

int cmd_semistable(std::ostream& out, const NodalCurve& curve, const std::string& d_text,
                   const std::string& output) {
    const Multidegree d = parse_multidegree(curve, d_text);
    const bool semistable = is_semistable(curve, d);
    const bool stable = semistable && is_stable(curve, d);
    const std::optional<Subcurve> witness = semistability_witness(curve, d);
    if (output == "json") {
        json j;
        j["multidegree"] = d.values();
        j["total"] = d.total();
        j["semistable"] = semistable;
        j["stable"] = stable;
        j["witness"] = witness ? witness_json(curve, d, *witness) : json(nullptr);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "multidegree: " << format_int_list(d.values()) << " (total " << d.total() << ")\n";
    out << "semistable: " << (semistable ? "true" : "false") << "\n";
    out << "stable: " << (stable ? "true" : "false") << "\n";
    if (witness) print_witness_line(out, curve, d, *witness);
    return 0;
}

// ---------------------------------------------------------------- components

int cmd_components(std::ostream& out, const NodalCurve& curve, const std::string& d_text,
                   const std::string& output) {
    const Multidegree d = parse_multidegree(curve, d_text);
    const Decomposition decomposition = classify(curve, d);
    if (output == "json") {
        out << decomposition_to_json(curve, d, decomposition).dump(2) << "\n";
        return 0;
    }
    out << "multidegree: " << format_int_list(d.values()) << " (total " << d.total() << ")\n";
    if (decomposition.full_jacobian) {
        out << "semistable: false\n";
        out << "W_d is the whole multidegree-d Jacobian\n";
        if (const auto witness = semistability_witness(curve, d)) {
            print_witness_line(out, curve, d, *witness);
        }
        return 0;
    }
    out << "semistable: true\n";
    out << "stable: " << (is_stable(curve, d) ? "true" : "false") << "\n";
    out << "components: " << decomposition.components.size() << "\n";
    for (const ComponentLabel& label : decomposition.components) {
        out << "  Z=" << format_subcurve(curve, label.subcurve)
            << " e_Z=" << format_int_list(label.restricted.values())
            << " dimension=" << component_dimension(curve, label);
        const Subcurve rest = complement(curve, label.subcurve);
        if (rest.empty()) {
            out << " form=A_e e=" << format_int_list(d.values());
        } else if (label.global_e) {
            out << " form=A_{e," << format_subcurve(curve, rest)
                << "} e=" << format_int_list(label.global_e->values());
        } else {
            out << " form=none (twisted multidegree not effective)";
        }
        out << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- twister-solve

int cmd_twister_solve(std::ostream& out, const NodalCurve& curve, const std::string& delta_text,
                      const std::string& c_text, const std::string& output) {
    if (delta_text.empty() == c_text.empty()) {
        throw std::invalid_argument("twister-solve: provide exactly one of --delta or --c");
    }
    if (!c_text.empty()) {
        const TwisterCoefficients c(parse_int_list(c_text, curve.component_count()));
        const TwisterCoefficients normalized = c.normalized();
        const Multidegree delta = twister_multidegree(curve, c);
        const Subcurve support = support_subcurve(curve, c);
        if (output == "json") {
            json j;
            j["c"] = c.values();
            j["normalized"] = normalized.values();
            j["multidegree"] = delta.values();
            json jsupport = json::array();
            for (int v : support.members()) jsupport.push_back(curve.vertex(v).label);
            j["support"] = std::move(jsupport);
            out << j.dump(2) << "\n";
            return 0;
        }
        out << "c: " << format_int_list(c.values()) << "\n";
        out << "normalized: " << format_int_list(normalized.values()) << "\n";
        out << "multidegree: " << format_int_list(delta.values()) << "\n";
        out << "support: " << format_subcurve(curve, support) << "\n";
        return 0;
    }
    const Multidegree delta(parse_int_list(delta_text, curve.component_count()));
    const std::optional<TwisterCoefficients> c = solve_twister(curve, delta);
    if (output == "json") {
        json j;
        j["delta"] = delta.values();
        j["solvable"] = c.has_value();
        j["c"] = c ? json(c->values()) : json(nullptr);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "delta: " << format_int_list(delta.values()) << "\n";
    if (c) {
        out << "solvable: true\n";
        out << "c: " << format_int_list(c->values()) << "\n";
    } else {
        out << "solvable: false (delta is not a twister multidegree)\n";
    }
    return 0;
}

// ---------------------------------------------------------------- correspond

int cmd_correspond(std::ostream& out, const NodalCurve& curve, const std::string& d_text,
                   const std::string& e_text, const std::string& output) {
    const Multidegree d = parse_multidegree(curve, d_text);
    const Multidegree e = parse_multidegree(curve, e_text);
    const std::optional<ComponentPairing> pairing = correspondence(curve, d, e);
    const std::optional<TwisterCoefficients> twist =
        pairing ? solve_twister(curve, e - d) : std::nullopt;
    if (output == "json") {
        json j;
        j["d"] = d.values();
        j["e"] = e.values();
        j["related"] = pairing.has_value();
        j["twist"] = twist ? json(twist->values()) : json(nullptr);
        json jpairs = json::array();
        if (pairing) {
            for (const auto& [from_d, from_e] : *pairing) {
                json jp;
                jp["f"] = from_d.global_e->values();
                json zd = json::array();
                for (int v : from_d.subcurve.members()) zd.push_back(curve.vertex(v).label);
                json ze = json::array();
                for (int v : from_e.subcurve.members()) ze.push_back(curve.vertex(v).label);
                jp["z_d"] = std::move(zd);
                jp["z_e"] = std::move(ze);
                jpairs.push_back(std::move(jp));
            }
        }
        j["pairs"] = pairing ? json(std::move(jpairs)) : json(nullptr);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "d: " << format_int_list(d.values()) << "\n";
    out << "e: " << format_int_list(e.values()) << "\n";
    if (!pairing) {
        out << "related: false (e - d is not a twister multidegree)\n";
        return 0;
    }
    out << "related: true\n";
    out << "twist c: " << format_int_list(twist->values()) << "\n";
    out << "pairs: " << pairing->size() << "\n";
    for (const auto& [from_d, from_e] : *pairing) {
        out << "  f=" << format_int_list(from_d.global_e->values()) << ": Z="
            << format_subcurve(curve, from_d.subcurve) << " <-> Z="
            << format_subcurve(curve, from_e.subcurve) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- sweeps

std::vector<std::size_t> sample_indices(std::size_t total, std::size_t want, std::uint64_t seed) {
    std::vector<std::size_t> indices(total);
    std::iota(indices.begin(), indices.end(), std::size_t{0});
    if (want == 0 || want >= total) return indices;
    // Partial Fisher-Yates with explicit index arithmetic so the selection is
    // reproducible across standard libraries for a fixed seed.
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < want; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (total - i));
        std::swap(indices[i], indices[j]);
    }
    indices.resize(want);
    std::sort(indices.begin(), indices.end());
    return indices;
}

struct CircularRow {
    int gamma = 0;
    std::string genera;
    std::string multidegree;
    int ell = 0;
    long long formula = 0;
    long long enumerated = 0;
    bool match = false;
};

void append_circular_rows(std::vector<CircularRow>& rows, const std::vector<int>& genera) {
    const NodalCurve curve = circular_curve(genera);
    const std::string genera_text =
        format_int_list(std::vector<long long>(genera.begin(), genera.end()));
    for (const Multidegree& d : circular_semistable_multidegrees(genera)) {
        const auto pattern = circular_pattern(genera, d);
        if (!pattern) {
            throw std::logic_error("sweep: generated multidegree has no sign pattern");
        }
        CircularRow row;
        row.gamma = static_cast<int>(genera.size());
        row.genera = genera_text;
        row.multidegree = format_int_list(d.values());
        row.ell = pattern->ell();
        row.formula = row.ell == 0 ? 1 : circular_component_count(genera, d);
        row.enumerated = static_cast<long long>(enumerate_components(curve, d).size());
        row.match = row.formula == row.enumerated;
        rows.push_back(std::move(row));
    }
}

int cmd_sweep_circular(std::ostream& out, const std::string& genera_text, int gamma_min,
                       int gamma_max, int genus_min, int genus_max, int max_gamma,
                       std::size_t sample, std::uint64_t seed) {
    std::vector<CircularRow> rows;
    if (!genera_text.empty()) {
        if (gamma_min != 0 || gamma_max != 0) {
            throw std::invalid_argument(
                "sweep-circular: --genera conflicts with --gamma-min/--gamma-max");
        }
        std::vector<int> genera;
        for (long long value : parse_int_list(genera_text)) {
            genera.push_back(static_cast<int>(value));
        }
        if (static_cast<int>(genera.size()) > max_gamma) {
            throw std::invalid_argument("sweep-circular: genera list longer than --max-gamma cap");
        }
        for (int genus : genera) {
            if (genus < 1) {
                throw std::invalid_argument(
                    "sweep-circular: the count formula needs every genus >= 1");
            }
        }
        append_circular_rows(rows, genera);
    } else {
        if (gamma_min == 0 && gamma_max == 0) {
            throw std::invalid_argument(
                "sweep-circular: provide --genera or --gamma-min/--gamma-max");
        }
        if (gamma_min < 3 || gamma_max < gamma_min) {
            throw std::invalid_argument(
                "sweep-circular: need 3 <= --gamma-min <= --gamma-max");
        }
        if (gamma_max > max_gamma) {
            throw std::invalid_argument(
                "sweep-circular: --gamma-max above the --max-gamma cap of " +
                std::to_string(max_gamma));
        }
        if (genus_min < 1 || genus_max < genus_min) {
            throw std::invalid_argument(
                "sweep-circular: need 1 <= --genus-min <= --genus-max (the count formula "
                "needs every genus >= 1)");
        }
        for (int gamma = gamma_min; gamma <= gamma_max; ++gamma) {
            std::vector<int> genera(static_cast<std::size_t>(gamma), genus_min);
            while (true) {
                append_circular_rows(rows, genera);
                int position = gamma - 1;
                while (position >= 0 && genera[position] == genus_max) {
                    genera[position] = genus_min;
                    --position;
                }
                if (position < 0) break;
                ++genera[position];
            }
        }
    }

    const std::vector<std::size_t> chosen = sample_indices(rows.size(), sample, seed);
    out << "gamma,genera,multidegree,ell,formula_count,enumerated_count,match\n";
    std::size_t mismatches = 0;
    for (std::size_t index : chosen) {
        const CircularRow& row = rows[index];
        if (!row.match) ++mismatches;
        out << row.gamma << ',' << csv_quote(row.genera) << ',' << csv_quote(row.multidegree)
            << ',' << row.ell << ',' << row.formula << ',' << row.enumerated << ','
            << (row.match ? "true" : "false") << "\n";
    }
    out << "summary," << chosen.size() << ',' << mismatches << "\n";
    return mismatches == 0 ? 0 : 2;
}

struct TwoComponentRow {
    int g1 = 0;
    int g2 = 0;
    int k = 0;
    char case_tag = '?';
    std::string locus;
    std::string multidegree;
    long long expected = 0;
    long long enumerated = 0;
    bool match = false;
};

int cmd_sweep_two_component(std::ostream& out, int g1_max, int g2_max, int k_max,
                            std::size_t sample, std::uint64_t seed) {
    if (g1_max < 0 || g2_max < 0 || k_max < 1) {
        throw std::invalid_argument(
            "sweep-two-component: need --g1-max >= 0, --g2-max >= 0, --k-max >= 1");
    }
    std::vector<TwoComponentRow> rows;
    for (int g1 = 0; g1 <= g1_max; ++g1) {
        for (int g2 = 0; g2 <= g2_max; ++g2) {
            for (int k = 1; k <= k_max; ++k) {
                if (g1 + g2 + k - 1 < 2) continue;  // enumeration needs genus >= 2
                const NodalCurve curve = two_component_curve(g1, g2, k);
                const TwoComponentClassification expected =
                    two_component_classification(g1, g2, k);
                const auto both = {
                    std::make_tuple(std::string("W_d"), expected.d, expected.w_d_subcurves),
                    std::make_tuple(std::string("W_e"), expected.e, expected.w_e_subcurves)};
                for (const auto& [locus, degree, subcurves] : both) {
                    const auto labels = enumerate_components(curve, degree);
                    bool same = labels.size() == subcurves.size();
                    for (std::size_t i = 0; same && i < labels.size(); ++i) {
                        same = labels[i].subcurve == subcurves[i];
                    }
                    TwoComponentRow row;
                    row.g1 = g1;
                    row.g2 = g2;
                    row.k = k;
                    row.case_tag = expected.case_tag;
                    row.locus = locus;
                    row.multidegree = format_int_list(degree.values());
                    row.expected = static_cast<long long>(subcurves.size());
                    row.enumerated = static_cast<long long>(labels.size());
                    row.match = same;
                    rows.push_back(std::move(row));
                }
            }
        }
    }

    const std::vector<std::size_t> chosen = sample_indices(rows.size(), sample, seed);
    out << "g1,g2,k,case,locus,multidegree,expected_count,enumerated_count,match\n";
    std::size_t mismatches = 0;
    for (std::size_t index : chosen) {
        const TwoComponentRow& row = rows[index];
        if (!row.match) ++mismatches;
        out << row.g1 << ',' << row.g2 << ',' << row.k << ',' << row.case_tag << ','
            << row.locus << ',' << csv_quote(row.multidegree) << ',' << row.expected << ','
            << row.enumerated << ',' << (row.match ? "true" : "false") << "\n";
    }
    out << "summary," << chosen.size() << ',' << mismatches << "\n";
    return mismatches == 0 ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Brill-Noether loci of degree g-1 on nodal curves via the dual graph"};
    app.name("bnloci");
    app.require_subcommand(1);
    app.fallthrough();

    int max_gamma = 10;
    app.add_option("--max-gamma", max_gamma,
                   "Cap on the number of components accepted from input (subcurve "
                   "enumeration is exponential in it)")
        ->capture_default_str();

    const auto add_output = [](CLI::App* cmd, std::string& target) {
        cmd->add_option("--output", target, "Report format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    std::string info_path;
    std::string info_output = "text";
    CLI::App* info_cmd = app.add_subcommand("info", "Summarize a curve file");
    info_cmd->add_option("curve", info_path, "Curve JSON file")->required();
    add_output(info_cmd, info_output);

    std::string ss_path;
    std::string ss_d;
    std::string ss_output = "text";
    CLI::App* ss_cmd = app.add_subcommand(
        "semistable", "Test canonical semistability of a multidegree, with a witness on failure");
    ss_cmd->add_option("curve", ss_path, "Curve JSON file")->required();
    ss_cmd->add_option("--d", ss_d, "Multidegree, comma-separated")->required();
    add_output(ss_cmd, ss_output);

    std::string comp_path;
    std::string comp_d;
    std::string comp_output = "text";
    CLI::App* comp_cmd = app.add_subcommand(
        "components", "Decompose W_d into irreducible components (total degree g-1)");
    comp_cmd->add_option("curve", comp_path, "Curve JSON file")->required();
    comp_cmd->add_option("--d", comp_d, "Multidegree, comma-separated")->required();
    add_output(comp_cmd, comp_output);

    std::string tw_path;
    std::string tw_delta;
    std::string tw_c;
    std::string tw_output = "text";
    CLI::App* tw_cmd = app.add_subcommand(
        "twister-solve", "Solve for twister coefficients of a multidegree, or evaluate given "
                         "coefficients");
    tw_cmd->add_option("curve", tw_path, "Curve JSON file")->required();
    tw_cmd->add_option("--delta", tw_delta, "Target twister multidegree, comma-separated");
    tw_cmd->add_option("--c", tw_c, "Coefficients to evaluate, comma-separated");
    add_output(tw_cmd, tw_output);

    std::string corr_path;
    std::string corr_d;
    std::string corr_e;
    std::string corr_output = "text";
    CLI::App* corr_cmd = app.add_subcommand(
        "correspond", "Pair the components of W_d and W_e when e - d is a twister multidegree");
    corr_cmd->add_option("curve", corr_path, "Curve JSON file")->required();
    corr_cmd->add_option("--d", corr_d, "First multidegree, comma-separated")->required();
    corr_cmd->add_option("--e", corr_e, "Second multidegree, comma-separated")->required();
    add_output(corr_cmd, corr_output);

    std::string swc_genera;
    int swc_gamma_min = 0;
    int swc_gamma_max = 0;
    int swc_genus_min = 1;
    int swc_genus_max = 1;
    std::size_t swc_sample = 0;
    std::uint64_t swc_seed = 0;
    CLI::App* swc_cmd = app.add_subcommand(
        "sweep-circular",
        "CSV cross-validation of the closed-form component count against enumeration on "
        "circular curves");
    swc_cmd->add_option("--genera", swc_genera, "Explicit genera list, comma-separated");
    swc_cmd->add_option("--gamma-min", swc_gamma_min, "Smallest cycle length (>= 3)");
    swc_cmd->add_option("--gamma-max", swc_gamma_max, "Largest cycle length");
    swc_cmd->add_option("--genus-min", swc_genus_min, "Smallest per-component genus (>= 1)")
        ->capture_default_str();
    swc_cmd->add_option("--genus-max", swc_genus_max, "Largest per-component genus")
        ->capture_default_str();
    swc_cmd->add_option("--sample", swc_sample, "Emit only this many rows, chosen by --seed "
                                                 "(0 = all rows)")
        ->capture_default_str();
    swc_cmd->add_option("--seed", swc_seed, "Seed for --sample row selection")
        ->capture_default_str();

    int swt_g1_max = 3;
    int swt_g2_max = 3;
    int swt_k_max = 3;
    std::size_t swt_sample = 0;
    std::uint64_t swt_seed = 0;
    CLI::App* swt_cmd = app.add_subcommand(
        "sweep-two-component",
        "CSV cross-validation of the two-component case table against enumeration (skips "
        "total genus < 2)");
    swt_cmd->add_option("--g1-max", swt_g1_max, "Largest genus of the first component")
        ->capture_default_str();
    swt_cmd->add_option("--g2-max", swt_g2_max, "Largest genus of the second component")
        ->capture_default_str();
    swt_cmd->add_option("--k-max", swt_k_max, "Largest node count")->capture_default_str();
    swt_cmd->add_option("--sample", swt_sample, "Emit only this many rows, chosen by --seed "
                                                 "(0 = all rows)")
        ->capture_default_str();
    swt_cmd->add_option("--seed", swt_seed, "Seed for --sample row selection")
        ->capture_default_str();

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("bnloci");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(storage.size());
    for (const std::string& s : storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*info_cmd) {
            return cmd_info(out, load_capped(info_path, max_gamma), info_output);
        }
        if (*ss_cmd) {
            return cmd_semistable(out, load_capped(ss_path, max_gamma), ss_d, ss_output);
        }
        if (*comp_cmd) {
            return cmd_components(out, load_capped(comp_path, max_gamma), comp_d, comp_output);
        }
        if (*tw_cmd) {
            return cmd_twister_solve(out, load_capped(tw_path, max_gamma), tw_delta, tw_c,
                                     tw_output);
        }
        if (*corr_cmd) {
            return cmd_correspond(out, load_capped(corr_path, max_gamma), corr_d, corr_e,
                                  corr_output);
        }
        if (*swc_cmd) {
            return cmd_sweep_circular(out, swc_genera, swc_gamma_min, swc_gamma_max,
                                      swc_genus_min, swc_genus_max, max_gamma, swc_sample,
                                      swc_seed);
        }
        if (*swt_cmd) {
            return cmd_sweep_two_component(out, swt_g1_max, swt_g2_max, swt_k_max, swt_sample,
                                           swt_seed);
        }
        err << "error: no command selected\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace bnloci
