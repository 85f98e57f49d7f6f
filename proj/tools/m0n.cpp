#include "m0n/divisor.hpp"
#include "m0n/faces.hpp"
#include "m0n/log_canonical.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using m0n::IntVec;
using m0n::Rational;
using m0n::SymmetricDivisor;
using m0n::VitalPartition;
using ordered_json = nlohmann::ordered_json;

// Exit codes: 0 = done / checks passed, 1 = a verification suite or table
// comparison found a mismatch, 2 = usage or domain error.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Output {
    bool json = false;
    bool quiet = false;
    ordered_json doc;
    std::vector<std::string> lines;

    void line(std::string text) { lines.push_back(std::move(text)); }

    void emit() const {
        if (quiet) return;
        if (json) {
            std::cout << doc.dump(2) << "\n";
            return;
        }
        for (const std::string& text : lines) std::cout << text << "\n";
    }
};

ordered_json partition_json(const VitalPartition& p) {
    return ordered_json::array({p.a, p.b, p.c, p.d});
}

ordered_json partitions_json(const std::vector<VitalPartition>& parts) {
    ordered_json arr = ordered_json::array();
    for (const VitalPartition& p : parts) arr.push_back(partition_json(p));
    return arr;
}

ordered_json intvec_json(const IntVec& v) {
    ordered_json arr = ordered_json::array();
    for (const m0n::Int& x : v) arr.push_back(x.str());
    return arr;
}

ordered_json coeffs_json(const SymmetricDivisor& d) {
    ordered_json arr = ordered_json::array();
    for (const Rational& r : d.coefficients()) arr.push_back(r.str());
    return arr;
}

std::string coeffs_text(const SymmetricDivisor& d) {
    std::string out;
    for (std::size_t i = 0; i < d.coefficients().size(); ++i) {
        if (i) out += " ";
        out += d.coefficients()[i].str();
    }
    return out;
}

std::string partitions_text(const std::vector<VitalPartition>& parts) {
    if (parts.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " ";
        out += parts[i].str();
    }
    return out;
}

std::vector<Rational> parse_coeff_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) out.push_back(Rational::parse(item));
    return out;
}

// ---------------------------------------------------------------- divisor --

int cmd_divisor(Output& out, int n, const std::optional<std::string>& alpha_text,
                bool canonical, bool bound, const std::optional<int>& pk) {
    const int choices =
        (alpha_text ? 1 : 0) + (canonical ? 1 : 0) + (bound ? 1 : 0) + (pk ? 1 : 0);
    if (choices != 1) {
        throw CLI::ValidationError(
            "divisor requires exactly one of --alpha, --canonical, --boundary, --pk");
    }
    SymmetricDivisor d(n);
    ordered_json params{{"n", n}};
    if (alpha_text) {
        d = m0n::a_alpha(n, Rational::parse(*alpha_text));
        params["alpha"] = *alpha_text;
    } else if (canonical) {
        d = m0n::canonical_class(n);
        params["canonical"] = true;
    } else if (bound) {
        d = m0n::boundary(n);
        params["boundary"] = true;
    } else {
        d = m0n::f_simplex_vertex(n, *pk);
        params["pk"] = *pk;
    }
    out.doc = ordered_json{{"command", "divisor"},
                           {"params", params},
                           {"status", "info"},
                           {"payload", ordered_json{{"coefficients", coeffs_json(d)}}}};
    out.line(coeffs_text(d));
    return kExitOk;
}

// ------------------------------------------------------------------- fnef --

int cmd_fnef(Output& out, int n, const std::optional<std::string>& coeff_text,
             const std::optional<std::string>& alpha_text) {
    if (coeff_text.has_value() == alpha_text.has_value()) {
        throw CLI::ValidationError("fnef requires exactly one of --coeffs, --alpha");
    }
    ordered_json params{{"n", n}};
    SymmetricDivisor d(n);
    if (coeff_text) {
        d = SymmetricDivisor(n, parse_coeff_list(*coeff_text));
        params["coeffs"] = *coeff_text;
    } else {
        d = m0n::a_alpha(n, Rational::parse(*alpha_text));
        params["alpha"] = *alpha_text;
    }
    const m0n::FNefResult result = m0n::f_nef_report(d);
    ordered_json payload{{"f_nef", result.f_nef},
                         {"min_value", result.min_value.str()},
                         {"minimizer", partition_json(result.minimizer)},
                         {"contracted", partitions_json(result.contracted)}};
    out.doc = ordered_json{{"command", "fnef"},
                           {"params", params},
                           {"status", result.f_nef ? "pass" : "fail"},
                           {"payload", payload}};
    out.line(std::string("F-nef: ") + (result.f_nef ? "yes" : "no"));
    out.line("min value " + result.min_value.str() + " at " + result.minimizer.str());
    out.line("contracted: " + partitions_text(result.contracted));
    return kExitOk;
}

// ------------------------------------------------------------------ model --

int cmd_model(Output& out, int n, const std::string& alpha_text) {
    const Rational alpha = Rational::parse(alpha_text);
    const m0n::ModelLabel label = m0n::model_for_alpha(n, alpha);
    ordered_json payload{
        {"kind", label.kind == m0n::ModelKind::Hassett ? "hassett" : "git_quotient"},
        {"k", label.k},
        {"label", label.str(n)},
        {"alpha_low", label.alpha_low.str()},
        {"alpha_high", label.alpha_high.str()}};
    out.doc = ordered_json{{"command", "model"},
                           {"params", ordered_json{{"n", n}, {"alpha", alpha_text}}},
                           {"status", "info"},
                           {"payload", payload}};
    out.line(label.str(n));
    out.line("alpha interval (" + label.alpha_low.str() + ", " + label.alpha_high.str() + "]");
    return kExitOk;
}

// ----------------------------------------------------------------- verify --

struct SuiteResult {
    std::string name;
    long long checks = 0;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
};

SuiteResult run_lemma_suite(int max_n) {
    SuiteResult result{"lemma", 0, {}, {}};
    for (int n = 6; n <= max_n; ++n) {
        const m0n::LemmaReport report = m0n::verify_lemma(n);
        result.checks += report.checks;
        for (const std::string& v : report.violations) {
            result.violations.push_back("n=" + std::to_string(n) + ": " + v);
        }
    }
    return result;
}

SuiteResult run_fnef_suite(int max_n) {
    SuiteResult result{"fnef", 0, {}, {}};
    for (int n = 5; n <= max_n; ++n) {
        for (int k = 1; k <= n / 2; ++k) {
            const Rational alpha(2, k + 1);
            const SymmetricDivisor a = m0n::a_alpha(n, alpha);
            const m0n::FNefResult scan = m0n::f_nef_report(a);
            ++result.checks;
            if (!scan.f_nef) {
                result.violations.push_back("a_alpha(" + std::to_string(n) + ", " + alpha.str() +
                                            ") not F-nef: " + scan.min_value.str() + " at " +
                                            scan.minimizer.str());
            }
            for (const VitalPartition& p : m0n::enumerate_vital_partitions(n)) {
                ++result.checks;
                const bool expect_zero = p.a + p.b + p.c <= k;
                if (m0n::intersect_vital(a, p).is_zero() != expect_zero) {
                    result.violations.push_back("zero-set mismatch for n=" + std::to_string(n) +
                                                " k=" + std::to_string(k) + " at " + p.str());
                }
            }
            // Midpoint of the enclosing breakpoint interval: the convex
            // decomposition must reproduce a_alpha coefficient-wise.
            const Rational mid = (Rational(2, k + 2) + alpha) / Rational(2);
            const m0n::ConvexDecomposition dec = m0n::convex_decompose(n, mid);
            const SymmetricDivisor lhs = m0n::a_alpha(n, mid);
            SymmetricDivisor rhs = dec.t * m0n::a_alpha(n, dec.alpha_low);
            rhs += (Rational(1) - dec.t) * m0n::a_alpha(n, dec.alpha_high);
            ++result.checks;
            if (!(lhs == rhs)) {
                result.violations.push_back("convex decomposition mismatch at n=" +
                                            std::to_string(n) + " alpha=" + mid.str());
            }
        }
    }
    return result;
}

SuiteResult run_pk_threshold_suite(int max_n) {
    SuiteResult result{"pk-threshold", 0, {}, {}};
    for (int n = 6; n <= max_n; ++n) {
        const int threshold = m0n::pk_fnef_threshold(n);
        const int expected = (n + 2) / 3;  // ceil(n/3)
        ++result.checks;
        if (threshold != expected) {
            result.violations.push_back("threshold(" + std::to_string(n) +
                                        ") = " + std::to_string(threshold) + ", expected " +
                                        std::to_string(expected));
        }
        const int p = (n % 3 == 0) ? 3 : n % 3;
        const int l = (n - p) / 3;
        if (l >= 2) {
            const VitalPartition curve = VitalPartition::sorted(p, l, l, l);
            const Rational value = m0n::intersect_vital(m0n::f_simplex_vertex(n, l), curve);
            ++result.checks;
            if (value.sign() >= 0) {
                result.violations.push_back("witness not negative at n=" + std::to_string(n) +
                                            ": " + value.str());
            }
            // Record both subscript readings of the witness vertex: the one
            // just below the threshold (index l, the reading the threshold
            // computation supports) and the index-floor(n/2)-l variant.
            std::string note = "n=" + std::to_string(n) + ": vertex " + std::to_string(l) +
                               " meets " + curve.str() + " in " + value.str();
            const int alt = n / 2 - l;
            if (alt >= 2 && alt <= n / 2) {
                const Rational alt_value =
                    m0n::intersect_vital(m0n::f_simplex_vertex(n, alt), curve);
                note += "; index variant " + std::to_string(alt) + " gives " + alt_value.str();
            } else {
                note += "; index variant " + std::to_string(alt) + " is out of range";
            }
            result.notes.push_back(note);
        }
    }
    return result;
}

SuiteResult run_c_interval_suite(int n) {
    SuiteResult result{"c-interval", 0, {}, {}};
    for (int k = 2; k <= 6; ++k) {
        const auto direct = m0n::direct_c_feasible(n, k);
        const auto closed = m0n::c_interval(n, k);
        ++result.checks;
        const bool expect_feasible = k <= 5;
        if (direct.has_value() != expect_feasible) {
            result.violations.push_back("direct feasibility at k=" + std::to_string(k) + " is " +
                                        (direct ? "nonempty" : "empty") + ", expected " +
                                        (expect_feasible ? "nonempty" : "empty"));
        }
        std::string note = "k=" + std::to_string(k) + ": direct ";
        note += direct ? ("[" + direct->first.str() + ", " + direct->second.str() + "]")
                       : std::string("empty");
        note += ", closed-form bounds ";
        note += closed ? ("[" + closed->first.str() + ", " + closed->second.str() + "]")
                       : std::string("empty");
        if (direct.has_value() != closed.has_value()) {
            note += " (closed-form bounds disagree; direct scan is authoritative)";
        }
        result.notes.push_back(std::move(note));
    }
    return result;
}

int cmd_verify(Output& out, const std::string& suite, std::optional<int> max_n,
               std::optional<int> fixed_n) {
    std::vector<SuiteResult> results;
    if (suite == "lemma" || suite == "all") {
        results.push_back(run_lemma_suite(max_n.value_or(30)));
    }
    if (suite == "fnef" || suite == "all") {
        results.push_back(run_fnef_suite(max_n.value_or(25)));
    }
    if (suite == "pk-threshold" || suite == "all") {
        results.push_back(run_pk_threshold_suite(max_n.value_or(40)));
    }
    if (suite == "c-interval" || suite == "all") {
        results.push_back(run_c_interval_suite(fixed_n.value_or(20)));
    }
    if (results.empty()) {
        throw CLI::ValidationError("unknown suite '" + suite +
                                   "' (expected lemma|fnef|pk-threshold|c-interval|all)");
    }
    bool all_pass = true;
    ordered_json suites = ordered_json::array();
    for (const SuiteResult& r : results) {
        const bool pass = r.violations.empty();
        all_pass = all_pass && pass;
        ordered_json entry{{"suite", r.name},
                           {"checks", r.checks},
                           {"violations", static_cast<long long>(r.violations.size())}};
        ordered_json details = ordered_json::array();
        for (std::size_t i = 0; i < r.violations.size() && i < 20; ++i) {
            details.push_back(r.violations[i]);
        }
        entry["details"] = details;
        ordered_json notes = ordered_json::array();
        for (const std::string& note : r.notes) notes.push_back(note);
        entry["notes"] = notes;
        suites.push_back(entry);
        out.line("suite " + r.name + ": " + (pass ? "pass" : "FAIL") + " (" +
                 std::to_string(r.checks) + " checks, " + std::to_string(r.violations.size()) +
                 " violations)");
        for (const std::string& note : r.notes) out.line("  " + note);
        for (std::size_t i = 0; i < r.violations.size() && i < 20; ++i) {
            out.line("  violation: " + r.violations[i]);
        }
    }
    ordered_json params{{"suite", suite}};
    if (max_n) params["max_n"] = *max_n;
    if (fixed_n) params["n"] = *fixed_n;
    out.doc = ordered_json{{"command", "verify"},
                           {"params", params},
                           {"status", all_pass ? "pass" : "fail"},
                           {"payload", ordered_json{{"suites", suites}}}};
    return all_pass ? kExitOk : kExitViolation;
}

// ------------------------------------------------------------------- cone --

ordered_json face_report_json(const m0n::FaceReport& report) {
    ordered_json facets = ordered_json::array();
    for (const m0n::FacetInfo& f : report.facets) {
        facets.push_back(ordered_json{{"label", m0n::facet_label(report.n, f)},
                                      {"form", intvec_json(f.form)},
                                      {"partitions", partitions_json(f.labels)}});
    }
    ordered_json vertices = ordered_json::array();
    for (const IntVec& v : report.vertices) vertices.push_back(intvec_json(v));
    return ordered_json{{"n", report.n},
                        {"k", report.k},
                        {"cone_dim", report.cone_dim},
                        {"proj_dim", report.proj_dim},
                        {"pointed", report.pointed},
                        {"halfspaces", report.halfspace_count},
                        {"facets", facets},
                        {"vertices", vertices},
                        {"contracted", partitions_json(report.contracted)}};
}

void face_report_text(Output& out, const m0n::FaceReport& report) {
    out.line("face k=" + std::to_string(report.k) + " at n=" + std::to_string(report.n) +
             ": cone dim " + std::to_string(report.cone_dim) + ", projective dim " +
             std::to_string(report.proj_dim) + (report.pointed ? "" : ", not pointed"));
    out.line("facets (" + std::to_string(report.facets.size()) + "):");
    for (const m0n::FacetInfo& f : report.facets) {
        std::string line = "  " + m0n::facet_label(report.n, f) + " inducing";
        for (const VitalPartition& p : f.labels) line += " " + p.str();
        out.line(line);
    }
    out.line("extreme rays (" + std::to_string(report.vertices.size()) + "):");
    for (const IntVec& v : report.vertices) {
        std::string line = "  (";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) line += ", ";
            line += v[i].str();
        }
        line += ")";
        out.line(line);
    }
    out.line("contracted: " + partitions_text(report.contracted));
}

std::string row_labels_text(int n, const m0n::FaceReport& report) {
    std::string out;
    for (std::size_t i = 0; i < report.facets.size(); ++i) {
        if (i) out += ", ";
        out += m0n::facet_label(n, report.facets[i]);
    }
    return out;
}

int cmd_cone(Output& out, std::optional<int> n, std::optional<int> k, bool table,
             const std::string& range_text) {
    if (table == (n.has_value() && k.has_value())) {
        throw CLI::ValidationError("cone requires either --n with --k, or --table");
    }
    if (!table) {
        const m0n::FaceReport report = m0n::facets_of_face(*n, *k);
        out.doc = ordered_json{{"command", "cone"},
                               {"params", ordered_json{{"n", *n}, {"k", *k}}},
                               {"status", "info"},
                               {"payload", face_report_json(report)}};
        face_report_text(out, report);
        return kExitOk;
    }
    int lo = 6;
    int hi = 14;
    if (!range_text.empty()) {
        const auto colon = range_text.find(':');
        if (colon == std::string::npos) {
            throw CLI::ValidationError("--n-range expects A:B");
        }
        try {
            lo = std::stoi(range_text.substr(0, colon));
            hi = std::stoi(range_text.substr(colon + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--n-range expects integers A:B");
        }
    }
    if (lo < 6 || hi < lo) throw CLI::ValidationError("--n-range must satisfy 6 <= A <= B");
    bool all_match = true;
    ordered_json rows = ordered_json::array();
    for (int nn = lo; nn <= hi; ++nn) {
        const m0n::TableCheck check = m0n::check_table_row(nn);
        all_match = all_match && check.ok();
        const int m = nn / 2;
        ordered_json row{{"n", nn},
                         {"top_face_k", m - 1},
                         {"top_labels", ordered_json::array()},
                         {"top_match", check.top_match}};
        for (const m0n::FacetInfo& f : check.top_report.facets) {
            row["top_labels"].push_back(m0n::facet_label(nn, f));
        }
        std::string line = "n=" + std::to_string(nn) + ": F_" + std::to_string(m - 1) + " {" +
                           row_labels_text(nn, check.top_report) + "} " +
                           (check.top_match ? "match" : "MISMATCH");
        if (check.second_report) {
            row["second_face_k"] = m - 2;
            row["second_facet_count"] =
                static_cast<long long>(check.second_report->facets.size());
            row["second_labels"] = ordered_json::array();
            for (const m0n::FacetInfo& f : check.second_report->facets) {
                row["second_labels"].push_back(m0n::facet_label(nn, f));
            }
            row["second_match"] = check.second_match;
            line += "; F_" + std::to_string(m - 2) + " " +
                    std::to_string(check.second_report->facets.size()) + " facets {" +
                    row_labels_text(nn, *check.second_report) + "} " +
                    (check.second_match ? "match" : "MISMATCH");
        } else {
            line += "; (no smaller face)";
        }
        rows.push_back(row);
        out.line(line);
    }
    out.line(all_match ? "table: match" : "table: MISMATCH");
    out.doc = ordered_json{
        {"command", "cone"},
        {"params",
         ordered_json{{"table", true},
                      {"n_range", std::to_string(lo) + ":" + std::to_string(hi)}}},
        {"status", all_match ? "pass" : "fail"},
        {"payload", ordered_json{{"rows", rows}}}};
    return all_match ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for symmetric divisor classes, log-canonical "
                 "weight sweeps, and the F-nef cone"};
    app.require_subcommand(1);
    bool json = false;
    bool quiet = false;
    app.add_flag("--json", json, "emit a machine-readable JSON report");
    app.add_flag("--quiet", quiet, "suppress stdout (exit code only)");

    // divisor
    auto* divisor = app.add_subcommand("divisor", "print divisor coefficients r_2..r_m");
    int div_n = 0;
    std::optional<std::string> div_alpha;
    bool div_canonical = false;
    bool div_boundary = false;
    std::optional<int> div_pk;
    divisor->add_option("--n", div_n, "number of marked points")->required();
    divisor->add_option("--alpha", div_alpha, "weight p/q in [2/(n-1), 1]");
    divisor->add_flag("--canonical", div_canonical, "canonical class");
    divisor->add_flag("--boundary", div_boundary, "total boundary");
    divisor->add_option("--pk", div_pk, "F-simplex vertex index");

    // fnef
    auto* fnef = app.add_subcommand("fnef", "test a divisor against every vital curve");
    int fnef_n = 0;
    std::optional<std::string> fnef_coeffs;
    std::optional<std::string> fnef_alpha;
    fnef->add_option("--n", fnef_n, "number of marked points")->required();
    fnef->add_option("--coeffs", fnef_coeffs, "comma-separated r_2..r_m");
    fnef->add_option("--alpha", fnef_alpha, "weight p/q (uses the interpolation divisor)");

    // model
    auto* model = app.add_subcommand("model", "name the model for a weight");
    int model_n = 0;
    std::string model_alpha;
    model->add_option("--n", model_n, "number of marked points")->required();
    model->add_option("--alpha", model_alpha, "weight p/q in (2/(n-1), 1]")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run exhaustive verification sweeps");
    std::string suite;
    std::optional<int> max_n;
    std::optional<int> verify_n;
    verify->add_option("--suite", suite, "lemma|fnef|pk-threshold|c-interval|all")->required();
    verify->add_option("--max-n", max_n, "upper bound for sweeps");
    verify->add_option("--n", verify_n, "fixed n for the c-interval suite");

    // cone
    auto* cone = app.add_subcommand("cone", "face and facet reports for the F-nef cone");
    std::optional<int> cone_n;
    std::optional<int> cone_k;
    bool cone_table = false;
    std::string cone_range;
    cone->add_option("--n", cone_n, "number of marked points");
    cone->add_option("--k", cone_k, "face index");
    cone->add_flag("--table", cone_table, "reproduce the reference facet table");
    cone->add_option("--n-range", cone_range, "A:B range for --table (default 6:14)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    Output out;
    out.json = json;
    out.quiet = quiet;
    int code = kExitUsage;
    try {
        if (divisor->parsed()) {
            code = cmd_divisor(out, div_n, div_alpha, div_canonical, div_boundary, div_pk);
        } else if (fnef->parsed()) {
            code = cmd_fnef(out, fnef_n, fnef_coeffs, fnef_alpha);
        } else if (model->parsed()) {
            code = cmd_model(out, model_n, model_alpha);
        } else if (verify->parsed()) {
            code = cmd_verify(out, suite, max_n, verify_n);
        } else if (cone->parsed()) {
            code = cmd_cone(out, cone_n, cone_k, cone_table, cone_range);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    out.emit();
    return code;
}
