#include "lacm/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "lacm/enumerate.hpp"
#include "lacm/notation.hpp"
#include "lacm/quadric.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace lacm {

namespace {

nlohmann::json coh_json(const CohTriple& t) {
    return nlohmann::json{{"h0", t.h0}, {"h1", t.h1}, {"h2", t.h2}};
}

nlohmann::json profile_json(const TwistProfile& p) {
    return nlohmann::json{
        {"lo", p.lo}, {"hi", p.hi}, {"h1", p.values}, {"ell", p.ell}, {"s_set", p.s_set}};
}

nlohmann::json trace_json(const ReductionTrace& t) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : t.steps) {
        steps.push_back({{"line", class_to_json(s.line)}, {"intersection", s.intersection}});
    }
    const char* kind = t.terminal_kind == TerminalKind::zero ? "zero"
                       : t.terminal_kind == TerminalKind::nef ? "nef"
                                                              : "negative-degree";
    return nlohmann::json{
        {"steps", steps}, {"terminal", class_to_json(t.terminal)}, {"terminal_kind", kind}};
}

ClassPredicate build_predicate(const std::string& spec) {
    if (spec.empty()) return nullptr;
    std::vector<std::string> names;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) names.push_back(tok);
    }
    for (const auto& name : names) {
        if (name != "effective" && name != "initialized" && name != "nef" && name != "acm") {
            throw ParseError("unknown predicate \"" + name +
                             "\" (expected effective, initialized, nef, acm)");
        }
    }
    return [names](const DivisorClass& d) {
        for (const auto& name : names) {
            if (name == "effective" && !is_effective(d)) return false;
            if (name == "initialized" && !is_initialized(d)) return false;
            if (name == "nef" && !is_nef(d)) return false;
            if (name == "acm" && !is_acm(d)) return false;
        }
        return true;
    };
}

void emit_table(const std::vector<TableRow>& rows, const std::string& format, std::ostream& out) {
    if (format == "md") {
        out << table_to_markdown(rows);
    } else if (format == "csv") {
        out << table_to_csv(rows);
    } else {
        out << table_to_json(rows).dump(2) << "\n";
    }
}

int emit_report(const VerificationReport& report, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << report_to_json(report).dump(2) << "\n";
    } else {
        out << report_to_text(report);
    }
    return report.ok() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact line-bundle cohomology and ell-away ACM classification "
                 "on the smooth cubic surface"};
    app.footer("Classes are given as '{\"l\":a,\"e\":[c1..c6]}' or as 'a*l - b1*e1 - ...'.\n"
               "LACM_WORKERS controls the verifier worker count.");
    app.require_subcommand(1);

    std::string cls_text;
    std::string format = "json";
    bool trace = false;

    auto* coh_cmd = app.add_subcommand("coh", "h0, h1, h2 of O_X(D)");
    coh_cmd->add_option("class", cls_text, "divisor class")->required();
    coh_cmd->add_flag("--trace", trace, "emit the base-locus reduction trace");

    auto* ell_cmd = app.add_subcommand("ell", "number of twists with h1(D + tH) != 0");
    ell_cmd->add_option("class", cls_text, "divisor class")->required();

    auto* profile_cmd = app.add_subcommand("profile", "the map t -> h1(D + tH) on its window");
    profile_cmd->add_option("class", cls_text, "divisor class")->required();

    auto* classify_cmd = app.add_subcommand("classify", "all classification flags of O_X(D)");
    classify_cmd->add_option("class", cls_text, "divisor class")->required();

    std::int64_t opt_deg = 0, opt_selfint = 0;
    std::string pred_text;
    auto* enum_cmd = app.add_subcommand("enumerate", "orbits with given degree and D^2");
    enum_cmd->add_option("--deg", opt_deg, "degree D.H")->required();
    enum_cmd->add_option("--selfint", opt_selfint, "self-intersection D^2")->required();
    enum_cmd->add_option("--pred", pred_text, "comma-separated filter: effective,initialized,nef,acm");
    enum_cmd->add_option("--format", format, "json|csv|md");

    std::string table_name;
    auto* tables_cmd = app.add_subcommand("tables", "regenerate a classification table");
    tables_cmd->add_option("table", table_name, "p32 (1-away) or p37 (2-away)")->required();
    tables_cmd->add_option("--format", format, "json|csv|md");

    std::string verify_name;
    std::string verify_format = "text";
    std::int64_t dmax = 10, db_lmax = 6, db_dmax = 18, amax = 3, ton_dmax = 8;
    std::vector<std::int64_t> lrange = {2, 3, 4};
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("statement", verify_name,
                           "t31|t35|degreebound|prop3l|ext|ton|notulrich|all")->required();
    verify_cmd->add_option("--dmax", dmax, "degree bound for t31/t35 (default 10)");
    verify_cmd->add_option("--ton-dmax", ton_dmax, "degree bound for ton/notulrich (default 8)");
    verify_cmd->add_option("--lmax", db_lmax, "ell bound for degreebound (default 6)");
    verify_cmd->add_option("--db-dmax", db_dmax, "degree bound for degreebound (default 18)");
    verify_cmd->add_option("--amax", amax, "a bound for ext (default 3)");
    verify_cmd->add_option("--lrange", lrange, "ell list for prop3l (default 2 3 4)");
    verify_cmd->add_option("--format", verify_format, "text|json (default text)");

    auto* catalog_cmd = app.add_subcommand("catalog", "low-degree (<= 3) ell breakdown");
    catalog_cmd->add_option("--format", format, "json|csv|md");

    auto* quadric_cmd = app.add_subcommand("quadric", "P^1 x P^1 computations");
    quadric_cmd->require_subcommand(1);
    std::int64_t qa = 0, qb = 0, q_lmax = 5, q_dmax = 8;
    auto* q_coh_cmd = quadric_cmd->add_subcommand("coh", "Kunneth h0, h1, h2 of O(a,b)");
    q_coh_cmd->add_option("a", qa, "first bidegree")->required();
    q_coh_cmd->add_option("b", qb, "second bidegree")->required();
    auto* q_ell_cmd = quadric_cmd->add_subcommand("ell", "nonvanishing-twist count of O(a,b)");
    q_ell_cmd->add_option("a", qa, "first bidegree")->required();
    q_ell_cmd->add_option("b", qb, "second bidegree")->required();
    auto* q_table_cmd = quadric_cmd->add_subcommand("t41-table", "existence truth table as CSV");
    q_table_cmd->add_option("--lmax", q_lmax, "max ell (default 5)");
    q_table_cmd->add_option("--dmax", q_dmax, "max degree (default 8)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("lacm");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*coh_cmd) {
            const DivisorClass d = parse_class(cls_text);
            nlohmann::json j = coh_json(coh(d));
            if (trace) {
                ReductionTrace t;
                h0_traced(d, t);
                j["trace"] = trace_json(t);
            }
            out << j.dump(2) << "\n";
        } else if (*ell_cmd) {
            out << ell(parse_class(cls_text)) << "\n";
        } else if (*profile_cmd) {
            out << profile_json(h1_profile(parse_class(cls_text))).dump(2) << "\n";
        } else if (*classify_cmd) {
            const DivisorClass d = parse_class(cls_text);
            const OrbitRecord rec = make_record(d);
            nlohmann::json j;
            j["class"] = class_to_json(d);
            j["class_notation"] = class_to_string(d);
            j["degree"] = rec.deg;
            j["self_intersection"] = rec.self_int;
            j["chi"] = chi(d);
            j["coh"] = coh_json(coh(d));
            j["effective"] = rec.flags.effective;
            j["initialized"] = rec.flags.initialized;
            j["nef"] = rec.flags.nef;
            j["acm"] = rec.flags.ell == 0;
            j["ell"] = rec.flags.ell;
            j["s_set"] = rec.flags.s_set;
            j["ulrich"] = rec.flags.ulrich;
            j["weakly_ulrich"] = rec.flags.weakly_ulrich;
            j["t31_numeric"] = t31_numeric(d);
            j["t35_condition"] = t35_condition(d);
            out << j.dump(2) << "\n";
        } else if (*enum_cmd) {
            std::vector<TableRow> rows;
            const std::string label =
                "(" + std::to_string(opt_selfint) + "," + std::to_string(opt_deg) + ")";
            for (auto& rec : enum_classes(opt_deg, opt_selfint, build_predicate(pred_text))) {
                rows.push_back({label, std::move(rec)});
            }
            emit_table(rows, format, out);
        } else if (*tables_cmd) {
            if (table_name == "p32") {
                emit_table(table_1away(), format, out);
            } else if (table_name == "p37") {
                emit_table(table_2away(), format, out);
            } else {
                err << "usage error: unknown table \"" << table_name << "\" (p32 or p37)\n";
                return 2;
            }
        } else if (*verify_cmd) {
            std::vector<VerificationReport> reports;
            if (verify_name == "t31" || verify_name == "all") reports.push_back(verify_t31(dmax));
            if (verify_name == "t35" || verify_name == "all") reports.push_back(verify_t35(dmax));
            if (verify_name == "degreebound" || verify_name == "all") {
                reports.push_back(verify_degreebound(db_lmax, db_dmax));
            }
            if (verify_name == "prop3l" || verify_name == "all") {
                reports.push_back(verify_prop3l(lrange));
            }
            if (verify_name == "ext" || verify_name == "all") reports.push_back(verify_ext(amax));
            if (verify_name == "ton" || verify_name == "all") {
                reports.push_back(verify_acm_ton(ton_dmax));
            }
            if (verify_name == "notulrich" || verify_name == "all") {
                reports.push_back(verify_not_ulrich(ton_dmax));
            }
            if (reports.empty()) {
                err << "usage error: unknown statement \"" << verify_name << "\"\n";
                return 2;
            }
            int rc = 0;
            for (const auto& r : reports) rc = std::max(rc, emit_report(r, verify_format, out));
            return rc;
        } else if (*catalog_cmd) {
            const auto entries = low_degree_catalog();
            if (format == "md") {
                out << catalog_to_markdown(entries);
            } else if (format == "csv") {
                out << catalog_to_csv(entries);
            } else {
                out << catalog_to_json(entries).dump(2) << "\n";
            }
        } else if (*quadric_cmd) {
            if (*q_coh_cmd) {
                out << coh_json(q_coh({qa, qb})).dump(2) << "\n";
            } else if (*q_ell_cmd) {
                out << q_ell({qa, qb}) << "\n";
            } else if (*q_table_cmd) {
                out << t41_table_csv(q_lmax, q_dmax);
            }
        }
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const BoundsError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace lacm
