#include "ckq/cli.hpp"

#include "ckq/classical.hpp"
#include "ckq/contraction.hpp"
#include "ckq/quantum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace ckq {
namespace cli {

using json = nlohmann::ordered_json;
namespace ct = contraction;

namespace {

int env_threads() {
    const char* v = std::getenv("CKQ_THREADS");
    return v ? std::atoi(v) : 0;
}

Permutation parse_sigma(const std::string& text, int n) {
    std::vector<int> images;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) images.push_back(std::stoi(tok));
    if (int(images.size()) != n)
        throw CLI::ValidationError("--sigma", "expected " + std::to_string(n) + " images");
    return Permutation(images);
}

JSignature parse_j(const std::string& text, int n) {
    uint32_t mask = 0;
    int k = 0;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        ++k;
        if (tok == "i" || tok == "ι")
            mask |= 1u << (k - 1);
        else if (tok != "1")
            throw CLI::ValidationError("--j", "token '" + tok + "' is not '1' or 'i'");
    }
    if (k != n - 1)
        throw CLI::ValidationError("--j", "expected " + std::to_string(n - 1) + " entries");
    return JSignature(n, mask);
}

json j_tokens(const JSignature& j) {
    json out = json::array();
    for (int k = 1; k <= j.size(); ++k)
        out.push_back(j.nilpotent(k) ? "i" + std::to_string(k) : "1");
    return out;
}

json spec_json(const ct::ContractionSpec& spec) {
    return json{{"n", spec.n_group},
                {"j", j_tokens(spec.j)},
                {"sigma", spec.sigma.images()},
                {"J", spec.J.ascii()}};
}

json verdict_json(const ct::Verdict& v) {
    json out{{"allowed", v.allowed},
             {"antipode_ok", v.antipode_ok},
             {"orthogonality_ok", v.orthogonality_ok},
             {"coproduct_ok", v.coproduct_ok},
             {"equation_count", v.equation_count},
             {"baseline_count", v.baseline_count}};
    if (v.rtt_defined) out["rtt_defined"] = *v.rtt_defined;
    if (!v.failures.empty()) {
        json fails = json::array();
        for (const auto& f : v.failures)
            fails.push_back(json{{"at", f.location}, {"monomial", f.monomial.ascii()}});
        out["failures"] = fails;
    }
    return out;
}

std::string mask_ascii(uint32_t mask) { return NilMonomial::from_mask(mask).ascii(); }

std::string family_key(const std::vector<ct::Family>& families, const ct::EnumRow& row) {
    const bool transformed = !row.J.is_unit();
    for (const auto& f : families)
        if (f.transformed == transformed && (row.mask & f.mask) == row.mask)
            return std::string(transformed ? "J=auto:" : "J=1:") + mask_ascii(f.mask);
    return "trivial";
}

// deterministic ordering of enumeration rows for output
void sort_rows(std::vector<ct::EnumRow>& rows) {
    std::sort(rows.begin(), rows.end(), [](const ct::EnumRow& a, const ct::EnumRow& b) {
        if (a.mask != b.mask) return a.mask < b.mask;
        if (!(a.cls == b.cls)) return a.cls < b.cls;
        return a.J < b.J;
    });
}

std::string latex_scalar(const Scalar& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : s.terms()) {
        std::string piece;
        const BaseNumber& b = c;
        std::string cs = b.str();
        // keep the UTF-8 renderer's coefficients, just swap the symbols
        if (cs != "1" || (k.q2 == 0 && k.v == 0 && k.mono.is_unit())) piece += cs;
        if (k.q2 != 0) {
            piece += "q^{";
            piece += (k.q2 % 2 == 0) ? std::to_string(k.q2 / 2)
                                     : std::to_string(k.q2) + "/2";
            piece += "}";
        }
        if (k.v >= 1) piece += (k.v == 1) ? "v" : "v^{" + std::to_string(k.v) + "}";
        for (int l : k.mono.indices()) piece += "\\iota_{" + std::to_string(l) + "}";
        if (!out.empty()) out += " + ";
        out += piece;
    }
    return out;
}

std::string latex_nc(const NcPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        std::string cs = latex_scalar(c);
        if (w.empty()) {
            out += cs;
            continue;
        }
        if (cs != "1") out += "\\left(" + cs + "\\right)";
        out += w.latex();
    }
    return out;
}

int cmd_enumerate(int n, int max_nilp, bool fixed_only, bool submono, int threads, bool as_json,
                  std::ostream& out) {
    ct::EnumOptions opt;
    opt.max_nilpotents = max_nilp;
    opt.only_fixed_J = fixed_only;
    opt.test_submonomials = submono;
    opt.threads = threads;
    auto rows = ct::enumerate_allowed(n, opt);
    sort_rows(rows);
    auto families = ct::summarize_families(rows);
    auto coincidences = ct::coincidence_masks(rows);

    if (as_json) {
        json jrows = json::array();
        for (const auto& r : rows) {
            ct::ContractionSpec spec{n, JSignature(n, r.mask), r.representative, r.J};
            jrows.push_back(json{{"spec", spec_json(spec)},
                                 {"verdict", verdict_json(r.verdict)},
                                 {"family", family_key(families, r)},
                                 {"labels", ct::primitive_element_labels(spec)}});
        }
        json jfam = json::array();
        for (const auto& f : families) {
            json cls = json::array();
            for (const auto& c : f.classes) cls.push_back(c.str());
            jfam.push_back(json{{"mask", mask_ascii(f.mask)},
                                {"regime", f.transformed ? "auto" : "1"},
                                {"J", f.J.ascii()},
                                {"classes", cls}});
        }
        json jc = json::array();
        for (uint32_t m : coincidences) jc.push_back(mask_ascii(m));
        out << json{{"n", n}, {"rows", jrows}, {"families", jfam}, {"coincidences", jc}}.dump(2)
            << "\n";
        return 0;
    }

    out << "allowed contractions of SO_v(" << n << "):\n";
    for (const auto& r : rows) {
        ct::ContractionSpec spec{n, JSignature(n, r.mask), r.representative, r.J};
        out << "  j=" << mask_ascii(r.mask) << "  sigma=" << r.representative.str()
            << "  J=" << r.J.ascii() << "  family=" << family_key(families, r) << "  labels=";
        auto labels = ct::primitive_element_labels(spec);
        for (size_t i = 0; i < labels.size(); ++i) out << (i ? "," : "") << labels[i];
        out << "\n";
    }
    out << "maximal families:\n";
    for (const auto& f : families) {
        out << "  [" << (f.transformed ? "J=" + f.J.ascii() : "J=1") << "] j-set "
            << mask_ascii(f.mask) << "  classes:";
        for (const auto& c : f.classes) out << " " << c.str();
        out << "\n";
    }
    if (!coincidences.empty()) {
        out << "coincidence j-sets (allowed in both regimes):";
        for (uint32_t m : coincidences) out << " " << mask_ascii(m);
        out << "\n";
    }
    return 0;
}

int cmd_verify_theorems(int n, const std::string& theorems, int threads, bool as_json,
                        std::ostream& out) {
    std::vector<int> ids;
    {
        std::stringstream ss(theorems);
        std::string tok;
        while (std::getline(ss, tok, ',')) ids.push_back(std::stoi(tok));
    }
    bool need_fixed = false, need_transformed = false;
    for (int id : ids) {
        if (id == 1 || id == 2) need_fixed = true;
        if (id == 3 || id == 4) need_transformed = true;
    }
    ct::EnumOptions opt;
    opt.only_fixed_J = !need_transformed;
    opt.threads = threads;
    auto rows = ct::enumerate_allowed(n, opt);

    json report = json::array();
    bool all_ok = true;
    for (int id : ids) {
        std::set<ct::PredictionRow> predicted;
        for (auto& r : ct::theorem_predictions(n, id)) predicted.insert(r);
        std::set<ct::PredictionRow> enumerated;
        const bool transformed = (id == 3 || id == 4);
        for (const auto& r : rows) {
            if (r.mask == 0 || r.J.is_unit() == transformed) continue;
            enumerated.insert({r.mask, r.cls, r.J});
        }
        bool match = predicted == enumerated;
        all_ok = all_ok && match;

        std::string first_diff;
        if (!match) {
            for (const auto& p : predicted)
                if (!enumerated.count(p)) {
                    first_diff = "predicted but not enumerated: j=" + mask_ascii(p.mask) +
                                 " class=" + p.cls.str() + " J=" + p.J.ascii();
                    break;
                }
            if (first_diff.empty())
                for (const auto& p : enumerated)
                    if (!predicted.count(p)) {
                        first_diff = "enumerated but not predicted: j=" + mask_ascii(p.mask) +
                                     " class=" + p.cls.str() + " J=" + p.J.ascii();
                        break;
                    }
        }
        if (as_json) {
            report.push_back(json{{"theorem", id},
                                  {"predicted", predicted.size()},
                                  {"enumerated", enumerated.size()},
                                  {"match", match},
                                  {"first_difference", first_diff}});
        } else {
            out << "theorem " << id << ": predicted " << predicted.size() << " rows, enumerated "
                << enumerated.size() << " rows -> " << (match ? "MATCH" : "MISMATCH") << "\n";
            if (!match) out << "  " << first_diff << "\n";
        }
    }
    if (as_json) out << report.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

int cmd_kinematics(bool as_json, std::ostream& out) {
    auto results = ct::verify_catalog();
    bool all = true;
    json rows = json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        if (as_json) {
            json row{{"name", r.row.name},
                     {"j", mask_ascii(r.row.mask)},
                     {"J", r.row.J.ascii()},
                     {"expect_allowed", r.row.expect_allowed},
                     {"verified", r.pass},
                     {"note", r.row.note}};
            if (r.row.sigma) row["sigma"] = r.row.sigma->images();
            if (!r.labels.empty()) row["labels"] = r.labels;
            rows.push_back(row);
        } else {
            out << "  " << r.row.name << ": j=" << mask_ascii(r.row.mask);
            if (r.row.sigma) out << " sigma=" << r.row.sigma->str();
            out << " J=" << r.row.J.ascii() << " expected "
                << (r.row.expect_allowed ? "allowed" : "rejected") << " -> "
                << (r.pass ? "verified" : "FAILED");
            if (!r.labels.empty()) {
                out << " primitive:";
                for (const auto& l : r.labels) out << " " << l;
            }
            out << "\n";
        }
    }
    if (as_json) out << rows.dump(2) << "\n";
    return all ? 0 : 1;
}

int cmd_check(int n, const std::string& sigma_s, const std::string& j_s, const std::string& J_s,
              bool with_rtt, bool as_json, std::ostream& out) {
    Permutation sigma = parse_sigma(sigma_s, n);
    JSignature j = parse_j(j_s, n);
    RescalingJ J = RescalingJ::unit();
    if (J_s == "auto")
        J = ct::compute_J(n, sigma, j);
    else if (J_s != "1")
        throw CLI::ValidationError("--J", "expected 'auto' or '1'");
    ct::ContractionSpec spec{n, j, sigma, J};
    ct::Verdict v = ct::check_admissible(spec, {with_rtt, false});
    if (as_json) {
        out << json{{"spec", spec_json(spec)},
                    {"verdict", verdict_json(v)},
                    {"labels", ct::primitive_element_labels(spec)}}
                   .dump(2)
            << "\n";
    } else {
        out << spec.str() << "\n";
        out << "  allowed: " << (v.allowed ? "true" : "false") << "\n";
        out << "  antipode_ok: " << v.antipode_ok
            << "  orthogonality_ok: " << v.orthogonality_ok
            << "  coproduct_ok: " << v.coproduct_ok << "\n";
        out << "  equations: " << v.equation_count << " (baseline " << v.baseline_count << ")\n";
        if (v.rtt_defined) out << "  rtt_defined: " << *v.rtt_defined << "\n";
        for (const auto& f : v.failures)
            out << "  failure: " << f.location << " [" << f.monomial.str() << "]\n";
    }
    return 0;
}

int cmd_dump_relations(int n, const std::string& sigma_s, const std::string& j_s,
                       const std::string& J_s, const std::string& kind,
                       const std::string& format, std::ostream& out) {
    Permutation sigma = parse_sigma(sigma_s, n);
    JSignature j = parse_j(j_s, n);
    RescalingJ J = J_s == "auto" ? ct::compute_J(n, sigma, j) : RescalingJ::unit();
    if (J_s != "auto" && J_s != "1") throw CLI::ValidationError("--J", "expected 'auto' or '1'");

    std::vector<quantum::TaggedRelation> rels;
    if (kind == "rtt" || kind == "both") {
        auto r = quantum::rtt_relations(n, j, sigma, J);
        rels.insert(rels.end(), r.begin(), r.end());
    }
    if (kind == "orthogonality" || kind == "both") {
        auto r = quantum::orthogonality_relations(n, j, sigma, J);
        for (auto& rel : r)
            if (!rel.poly.is_zero()) rels.push_back(std::move(rel));
    }

    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rels) {
            json terms = json::array();
            for (const auto& [w, c] : r.poly.terms()) {
                json syms = json::array();
                for (int i = 0; i < w.size(); ++i)
                    syms.push_back(json{{"kind", sym_kind_ascii(w[i].kind)},
                                        {"row", w[i].row},
                                        {"col", w[i].col}});
                json sterms = json::array();
                for (const auto& [key, coef] : c.terms())
                    sterms.push_back(json{{"c", coef.str()},
                                          {"q2", key.q2},
                                          {"v", key.v},
                                          {"iota", key.mono.indices()}});
                terms.push_back(json{{"word", syms}, {"coeff", sterms}});
            }
            arr.push_back(json{{"tag", r.tag}, {"terms", terms}});
        }
        out << arr.dump(2) << "\n";
    } else if (format == "latex") {
        for (const auto& r : rels)
            out << "% " << r.tag << "\n0 = " << latex_nc(r.poly) << "\n";
    } else {
        for (const auto& r : rels) out << r.tag << ": 0 = " << r.poly.str() << "\n";
    }
    return 0;
}

int cmd_dump_classical(int n, const std::string& sigma_s, const std::string& j_s,
                       const std::string& format, std::ostream& out) {
    Permutation sigma = parse_sigma(sigma_s, n);
    JSignature j = parse_j(j_s, n);
    auto B = classical::build_B_sigma(n, j, sigma);
    if (format == "json") {
        json rows = json::array();
        for (int r = 0; r < n; ++r) {
            json row = json::array();
            for (int c = 0; c < n; ++c) row.push_back(B.at(r, c).str());
            rows.push_back(row);
        }
        out << json{{"n", n}, {"sigma", sigma.images()}, {"entries", rows}}.dump(2) << "\n";
    } else {
        out << classical::render_matrix(B);
    }
    return 0;
}

int cmd_degenerate(int n, bool use_rtt, bool as_json, std::ostream& out) {
    auto res = ct::degenerate_reduction(n, use_rtt);
    if (as_json) {
        json consts = json::array();
        for (const auto& [g, val] : res.constants)
            consts.push_back(json{{"generator", g.ascii()}, {"value", val}});
        json surv = json::array();
        for (const auto& g : res.survivors) surv.push_back(g.ascii());
        out << json{{"n", n},
                    {"constants", consts},
                    {"survivors", surv},
                    {"free_generators", surv.size()},
                    {"contradiction", res.contradiction}}
                   .dump(2)
            << "\n";
    } else {
        out << "all-nilpotent contraction of SO_q(" << n << "), identity sigma, J=1:\n";
        out << "  forced constants:";
        for (const auto& [g, val] : res.constants) out << " " << g.str() << "=" << val;
        out << "\n  free generators (" << res.survivors.size() << "):";
        for (const auto& g : res.survivors) out << " " << g.str();
        out << "\n";
    }
    return 0;
}

}  // namespace

int run_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic engine for quantum orthogonal Cayley-Klein contractions"};
    app.require_subcommand(1);

    int n = 5, max_nilp = -1, threads = env_threads();
    bool as_json = false, submono = false, fixed_only = false, with_rtt = false;
    std::string sigma_s, j_s, J_s = "auto", theorems = "1,3";
    std::string format = "text", kind = "both";

    auto* enumerate = app.add_subcommand("enumerate", "scan all contractions of SO_v(N)");
    enumerate->add_option("--n", n, "group dimension N")->required();
    enumerate->add_option("--j-max-nilpotents", max_nilp, "cap on nilpotent parameters");
    enumerate->add_flag("--json", as_json, "machine-readable output");
    enumerate->add_flag("--submonomials", submono, "also test proper sub-rescalings");
    enumerate->add_flag("--fixed-J-only", fixed_only, "restrict to the J=1 regime");
    enumerate->add_option("--threads", threads, "worker threads (default CKQ_THREADS or all)");

    auto* verify = app.add_subcommand("verify-theorems", "compare enumeration with predictions");
    verify->add_option("--n", n, "group dimension N")->required();
    verify->add_option("--theorems", theorems, "comma list from 1,2,3,4");
    verify->add_flag("--json", as_json, "machine-readable output");
    verify->add_option("--threads", threads, "worker threads");

    auto* kin = app.add_subcommand("kinematics", "the SO_q(5) kinematic catalog, verified live");
    kin->add_flag("--json", as_json, "machine-readable output");

    auto* check = app.add_subcommand("check", "check one contraction spec");
    check->add_option("--n", n, "group dimension N")->required();
    check->add_option("--sigma", sigma_s, "permutation, e.g. 1,2,5,3,4")->required();
    check->add_option("--j", j_s, "j parameters, e.g. 1,i,1,1")->required();
    check->add_option("--J", J_s, "rescaling: auto or 1");
    check->add_flag("--rtt", with_rtt, "also report RTT well-definedness");
    check->add_flag("--json", as_json, "machine-readable output");

    auto* dumpr = app.add_subcommand("dump-relations", "emit RTT / orthogonality relations");
    dumpr->add_option("--n", n, "group dimension N")->required();
    dumpr->add_option("--sigma", sigma_s, "permutation")->required();
    dumpr->add_option("--j", j_s, "j parameters")->required();
    dumpr->add_option("--J", J_s, "rescaling: auto or 1");
    dumpr->add_option("--kind", kind, "rtt | orthogonality | both");
    dumpr->add_option("--format", format, "text | json | latex");

    auto* dumpc = app.add_subcommand("dump-classical", "emit the classical B_sigma(j) matrix");
    dumpc->add_option("--n", n, "group dimension N")->required();
    dumpc->add_option("--sigma", sigma_s, "permutation")->required();
    dumpc->add_option("--j", j_s, "j parameters")->required();
    dumpc->add_option("--format", format, "text | json");

    auto* degen = app.add_subcommand("degenerate", "reduce the all-nilpotent identity case");
    degen->add_option("--n", n, "group dimension N")->required();
    degen->add_flag("--rtt", with_rtt, "include RTT relations in the reduction");
    degen->add_flag("--json", as_json, "machine-readable output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (enumerate->parsed())
            return cmd_enumerate(n, max_nilp, fixed_only, submono, threads, as_json, out);
        if (verify->parsed()) return cmd_verify_theorems(n, theorems, threads, as_json, out);
        if (kin->parsed()) return cmd_kinematics(as_json, out);
        if (check->parsed()) return cmd_check(n, sigma_s, j_s, J_s, with_rtt, as_json, out);
        if (dumpr->parsed()) return cmd_dump_relations(n, sigma_s, j_s, J_s, kind, format, out);
        if (dumpc->parsed()) return cmd_dump_classical(n, sigma_s, j_s, format, out);
        if (degen->parsed()) return cmd_degenerate(n, with_rtt, as_json, out);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_args(args, std::cout, std::cerr);
}

}  // namespace cli
}  // namespace ckq
