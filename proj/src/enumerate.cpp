#include "lacm/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <optional>
#include <sstream>

#include "lacm/notation.hpp"
#include "lacm/parallel.hpp"

namespace lacm {

namespace {

std::int64_t isqrt64(std::int64_t v) {
    if (v < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// table order: c0 ascending, then the nonincreasing b-vector descending lex
// (for canonical reps this is ascending lex on (c6, c5, ..., c1))
bool table_order_less(const DivisorClass& a, const DivisorClass& b) {
    if (a.c[0] != b.c[0]) return a.c[0] < b.c[0];
    for (int i = 6; i >= 1; --i) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return false;
}

std::string s_set_string(const std::vector<std::int64_t>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

// Runs fn over every canonical class with 1 <= degree <= dmax, sweeping the
// self-intersection over the conservative box [-d^2, floor(d^2/3)].
// fn(cls) -> optional counterexample string; merged in deterministic order.
void sweep_degree_box(std::int64_t dmax, VerificationReport& report,
                      const std::function<std::optional<std::string>(const DivisorClass&)>& fn) {
    for (std::int64_t d = 1; d <= dmax; ++d) {
        for (std::int64_t s = -d * d; s <= (d * d) / 3; ++s) {
            const auto classes = solve_stratum(d, s);
            if (classes.empty()) continue;
            std::vector<std::optional<std::string>> issues(classes.size());
            parallel_for(static_cast<std::int64_t>(classes.size()),
                         [&](std::int64_t i) { issues[static_cast<std::size_t>(i)] = fn(classes[static_cast<std::size_t>(i)]); });
            report.checked += static_cast<std::int64_t>(classes.size());
            for (const auto& issue : issues) {
                if (issue) report.counterexamples.push_back(*issue);
            }
        }
    }
}

}  // namespace

std::vector<DivisorClass> solve_stratum(std::int64_t deg, std::int64_t self_int) {
    if (deg < 0) throw BoundsError("solve_stratum: degree must be nonnegative");
    std::vector<DivisorClass> out;
    const std::int64_t disc = 2 * deg * deg - 6 * self_int;
    if (disc < 0) return out;  // Cauchy-Schwarz leaves no real a

    const std::int64_t spread = isqrt64(disc / 3) + 1;
    for (std::int64_t a = deg - spread; a <= deg + spread; ++a) {
        // exact Cauchy-Schwarz bound: (3a - deg)^2 <= 6(a^2 - self_int)
        if (3 * a * a - 6 * a * deg + deg * deg + 6 * self_int > 0) continue;
        const std::int64_t q = a * a - self_int;  // sum of b_i^2
        if (q < 0) continue;
        const std::int64_t sum = 3 * a - deg;     // sum of b_i
        const std::int64_t bcap = isqrt64(q);
        if (std::abs(a) > kInputCoeffBound || bcap > kInputCoeffBound) {
            throw BoundsError("solve_stratum: search box exceeds the coefficient cap");
        }

        std::array<std::int64_t, 6> b{};
        // b1 >= b2 >= ... >= b6 with given sum and sum of squares
        auto rec = [&](auto&& self, int slot, std::int64_t prev, std::int64_t s,
                       std::int64_t sq) -> void {
            const std::int64_t slots = 6 - slot;
            if (slots == 1) {
                if (s <= prev && s * s == sq) {
                    b[static_cast<std::size_t>(slot)] = s;
                    DivisorClass cls;
                    cls.c[0] = a;
                    for (int i = 0; i < 6; ++i) cls.c[1 + i] = -b[static_cast<std::size_t>(5 - i)];
                    out.push_back(cls);
                }
                return;
            }
            const std::int64_t ub = std::min(prev, isqrt64(sq));
            // each remaining value is <= v, so slots*v >= s
            const std::int64_t lb_sum = (s >= 0) ? (s + slots - 1) / slots : -((-s) / slots);
            const std::int64_t lb = std::max(-isqrt64(sq), lb_sum);
            for (std::int64_t v = ub; v >= lb; --v) {
                const std::int64_t s2 = s - v;
                const std::int64_t sq2 = sq - v * v;
                if (sq2 < 0) continue;
                if (s2 * s2 > (slots - 1) * sq2) continue;  // Cauchy-Schwarz
                b[static_cast<std::size_t>(slot)] = v;
                self(self, slot + 1, v, s2, sq2);
            }
        };
        rec(rec, 0, bcap, sum, q);
    }
    std::sort(out.begin(), out.end(), table_order_less);
    return out;
}

OrbitRecord make_record(const DivisorClass& rep) {
    OrbitRecord r;
    r.rep = canonical_rep(rep);
    r.u = orbit_size(rep);
    r.self_int = self_intersection(rep);
    r.deg = degree(rep);
    r.flags.effective = is_effective(rep);
    r.flags.initialized = is_initialized(rep);
    r.flags.nef = is_nef(rep);
    const TwistProfile p = h1_profile(rep);
    r.flags.ell = p.ell;
    r.flags.s_set = p.s_set;
    r.flags.ulrich = is_ulrich(rep);
    r.flags.weakly_ulrich = is_weakly_ulrich(rep);
    return r;
}

std::vector<OrbitRecord> enum_classes(std::int64_t deg, std::int64_t self_int,
                                      const ClassPredicate& filter) {
    std::vector<OrbitRecord> out;
    for (const auto& cls : solve_stratum(deg, self_int)) {
        if (filter && !filter(cls)) continue;
        out.push_back(make_record(cls));
    }
    return out;
}

std::vector<TableRow> table_1away() {
    const auto keep = [](const DivisorClass& d) {
        return is_effective(d) && is_initialized(d) && ell(d) == 1;
    };
    std::vector<TableRow> rows;
    for (const auto& [si, dg] : std::vector<std::pair<std::int64_t, std::int64_t>>{{-2, 2}, {2, 4}}) {
        const std::string label = "(" + std::to_string(si) + "," + std::to_string(dg) + ")";
        for (auto& rec : enum_classes(dg, si, keep)) rows.push_back({label, std::move(rec)});
    }
    return rows;
}

std::vector<TableRow> table_2away() {
    const DivisorClass& h = hyperplane_class();
    struct Stratum {
        std::int64_t si, dg;
        ClassPredicate side;
    };
    const std::vector<Stratum> strata = {
        {4, 6, [&](const DivisorClass& d) { return is_nef(d) && h0(3 * h - d) == 0; }},
        {3, 5, [&](const DivisorClass& d) { return is_nef(d); }},
        {0, 4, [&](const DivisorClass& d) { return h0(2 * h - d) == 0; }},
        {-3, 3, nullptr},
        {-1, 3, nullptr},
    };
    std::vector<TableRow> rows;
    for (const auto& st : strata) {
        const std::string label = "(" + std::to_string(st.si) + "," + std::to_string(st.dg) + ")";
        const auto keep = [&](const DivisorClass& d) {
            if (!is_effective(d) || !is_initialized(d)) return false;
            if (st.side && !st.side(d)) return false;
            return ell(d) == 2;
        };
        for (auto& rec : enum_classes(st.dg, st.si, keep)) rows.push_back({label, std::move(rec)});
    }
    return rows;
}

namespace {

std::string flags_string(const OrbitFlags& f) {
    std::string out;
    const auto add = [&](bool v, const char* name) {
        if (!v) return;
        if (!out.empty()) out += ",";
        out += name;
    };
    add(f.effective, "effective");
    add(f.initialized, "initialized");
    add(f.nef, "nef");
    add(f.ulrich, "ulrich");
    add(f.weakly_ulrich, "weakly_ulrich");
    return out;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string table_to_markdown(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "| stratum | D | u | ell | S(D) | flags |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const auto& row : rows) {
        os << "| " << row.stratum << " | " << orbit_rep_string(row.rec.rep) << " | " << row.rec.u
           << " | " << row.rec.flags.ell << " | " << s_set_string(row.rec.flags.s_set) << " | "
           << flags_string(row.rec.flags) << " |\n";
    }
    return os.str();
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "stratum,rep-json,rep-paper-notation,u,ell,s_set,flags\n";
    for (const auto& row : rows) {
        os << csv_quote(row.stratum) << ","
           << csv_quote(class_to_json(orbit_rep_class(row.rec.rep)).dump()) << ","
           << csv_quote(orbit_rep_string(row.rec.rep)) << "," << row.rec.u << ","
           << row.rec.flags.ell << "," << csv_quote(s_set_string(row.rec.flags.s_set)) << ","
           << csv_quote(flags_string(row.rec.flags)) << "\n";
    }
    return os.str();
}

nlohmann::json table_to_json(const std::vector<TableRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json j;
        j["stratum"] = row.stratum;
        j["rep"] = class_to_json(orbit_rep_class(row.rec.rep));
        j["rep_notation"] = orbit_rep_string(row.rec.rep);
        j["u"] = row.rec.u;
        j["self_intersection"] = row.rec.self_int;
        j["degree"] = row.rec.deg;
        j["ell"] = row.rec.flags.ell;
        j["s_set"] = row.rec.flags.s_set;
        j["effective"] = row.rec.flags.effective;
        j["initialized"] = row.rec.flags.initialized;
        j["nef"] = row.rec.flags.nef;
        j["ulrich"] = row.rec.flags.ulrich;
        j["weakly_ulrich"] = row.rec.flags.weakly_ulrich;
        out.push_back(std::move(j));
    }
    return out;
}

VerificationReport verify_t31(std::int64_t dmax) {
    if (dmax < 4) throw BoundsError("verify_t31: dmax must be >= 4");
    VerificationReport report;
    report.statement = "t31";
    report.bounds = "degree <= " + std::to_string(dmax);
    sweep_degree_box(dmax, report, [](const DivisorClass& d) -> std::optional<std::string> {
        if (!is_effective(d)) return std::nullopt;
        const bool lhs = is_initialized(d) && ell(d) == 1;
        const bool rhs = t31_numeric(d);
        if (lhs == rhs) return std::nullopt;
        return class_to_string(d) + ": initialized&1-away=" + (lhs ? "yes" : "no") +
               " but numeric condition=" + (rhs ? "yes" : "no");
    });
    return report;
}

VerificationReport verify_t35(std::int64_t dmax) {
    if (dmax < 6) throw BoundsError("verify_t35: dmax must be >= 6");
    VerificationReport report;
    report.statement = "t35";
    report.bounds = "degree <= " + std::to_string(dmax);
    sweep_degree_box(dmax, report, [](const DivisorClass& d) -> std::optional<std::string> {
        if (!is_effective(d)) return std::nullopt;
        const bool lhs = is_initialized(d) && ell(d) == 2;
        const bool rhs = t35_condition(d);
        if (lhs == rhs) return std::nullopt;
        return class_to_string(d) + ": initialized&2-away=" + (lhs ? "yes" : "no") +
               " but case condition=" + (rhs ? "yes" : "no");
    });
    return report;
}

VerificationReport verify_acm_ton(std::int64_t dmax) {
    if (dmax < 3) throw BoundsError("verify_acm_ton: dmax must be >= 3");
    VerificationReport report;
    report.statement = "acm_ton";
    report.bounds = "degree <= " + std::to_string(dmax);
    sweep_degree_box(dmax, report, [](const DivisorClass& d) -> std::optional<std::string> {
        if (!is_effective(d)) return std::nullopt;
        const bool lhs = is_initialized(d) && ell(d) == 0;
        const std::int64_t q = self_intersection(d);
        const std::int64_t dg = degree(d);
        const bool rhs = (q == dg - 2) && dg > 0 && dg <= 3;
        if (lhs == rhs) return std::nullopt;
        return class_to_string(d) + ": initialized&ACM=" + (lhs ? "yes" : "no") +
               " but numeric condition=" + (rhs ? "yes" : "no");
    });
    return report;
}

VerificationReport verify_not_ulrich(std::int64_t dmax) {
    if (dmax < 4) throw BoundsError("verify_not_ulrich: dmax must be >= 4");
    VerificationReport report;
    report.statement = "not_ulrich";
    report.bounds = "degree <= " + std::to_string(dmax);
    const DivisorClass h = hyperplane_class();
    sweep_degree_box(dmax, report, [h](const DivisorClass& d) -> std::optional<std::string> {
        if (!is_effective(d)) return std::nullopt;
        const bool lhs = is_initialized(d) && is_weakly_ulrich(d) && !is_ulrich(d);
        const std::int64_t q = self_intersection(d);
        const std::int64_t dg = degree(d);
        bool rhs = (q == 0 && dg == 2) || (q == -1 && dg == 1) || (q == -2 && dg == 2) ||
                   (q == 2 && dg == 4) || (q == -3 && dg == 3) || (q == -1 && dg == 3);
        if (!rhs && q == 0 && dg == 4) rhs = h0(2 * h - d) == 0;
        if (lhs == rhs) return std::nullopt;
        return class_to_string(d) + ": weaklyUlrich&!Ulrich=" + (lhs ? "yes" : "no") +
               " but case condition=" + (rhs ? "yes" : "no");
    });
    return report;
}

VerificationReport verify_degreebound(std::int64_t lmax, std::int64_t dmax) {
    if (lmax < 2 || dmax < 6) throw BoundsError("verify_degreebound: need lmax >= 2, dmax >= 6");
    VerificationReport report;
    report.statement = "degreebound";
    report.bounds = "ell <= " + std::to_string(lmax) + ", degree <= " + std::to_string(dmax);
    std::vector<std::int64_t> per_ell(static_cast<std::size_t>(lmax) + 1, 0);
    std::mutex stats_mutex;
    sweep_degree_box(dmax, report, [&](const DivisorClass& d) -> std::optional<std::string> {
        if (!is_effective(d) || !is_initialized(d)) return std::nullopt;
        const std::int64_t l = ell(d);
        if (l < 2 || l > lmax) return std::nullopt;
        {
            std::lock_guard lock(stats_mutex);
            ++per_ell[static_cast<std::size_t>(l)];
        }
        const std::int64_t dg = degree(d);
        if (dg > 3 * l) {
            return class_to_string(d) + ": ell=" + std::to_string(l) + " but degree " +
                   std::to_string(dg) + " > 3*ell";
        }
        if (l >= 3 && dg == 3 * l) {
            return class_to_string(d) + ": ell=" + std::to_string(l) +
                   " >= 3 but degree equals 3*ell";
        }
        const std::int64_t k = 3 * l - dg;
        if (k >= 1 && 3 * l > 2 * k + 9) {  // ell > 2k/3 + 3 forbids degree = 3*ell - k
            return class_to_string(d) + ": ell=" + std::to_string(l) + ", degree " +
                   std::to_string(dg) + " = 3*ell - " + std::to_string(k) +
                   " violates the gap clause";
        }
        return std::nullopt;
    });
    for (std::int64_t l = 2; l <= lmax; ++l) {
        report.notes.push_back("ell=" + std::to_string(l) + ": " +
                               std::to_string(per_ell[static_cast<std::size_t>(l)]) +
                               " initialized classes");
    }
    return report;
}

VerificationReport verify_prop3l(const std::vector<std::int64_t>& lrange) {
    VerificationReport report;
    report.statement = "prop3l";
    {
        std::string b = "ell in {";
        for (std::size_t i = 0; i < lrange.size(); ++i) {
            if (i) b += ",";
            b += std::to_string(lrange[i]);
        }
        report.bounds = b + "}";
    }
    const DivisorClass& h = hyperplane_class();
    for (const std::int64_t l : lrange) {
        if (l < 2) throw BoundsError("verify_prop3l: ell must be >= 2");
        std::int64_t found = 0;
        for (const auto& d : solve_stratum(3 * l, 3 * l - 2)) {
            if (!is_effective(d) || !is_nef(d)) continue;
            if (h0((2 * l - 1) * h - d) != 0) continue;
            ++found;
            ++report.checked;
            const TwistProfile p = h1_profile(d);
            std::vector<std::int64_t> want;
            for (std::int64_t t = -(2 * l - 1); t <= -2; ++t) want.push_back(t);
            if (p.ell != 2 * l - 2 || p.s_set != want) {
                report.counterexamples.push_back(
                    class_to_string(d) + ": expected (2*ell-2)-away with window [-(2*ell-1),-2]," +
                    " got ell=" + std::to_string(p.ell) + " S=" + s_set_string(p.s_set));
            }
        }
        report.notes.push_back("ell=" + std::to_string(l) + ": " + std::to_string(found) +
                               (found == 0 ? " classes (empty stratum)" : " classes"));
    }
    return report;
}

ExtFamily ext_family(int case_no, std::int64_t a) {
    if (case_no < 1 || case_no > 6) throw std::invalid_argument("ext_family: case must be 1..6");
    if (a < 0) throw BoundsError("ext_family: a must be >= 0");
    ExtFamily f;
    f.cls.c[0] = 2;
    for (int i = 1; i <= 6; ++i) f.cls.c[i] = a + (i < case_no ? 1 : 0);
    static constexpr std::int64_t ell_off[7] = {0, 2, 4, 5, 6, 7, 8};
    f.expected_ell = 6 * a + ell_off[case_no];
    f.win_lo = -(5 * a + case_no + 2);
    f.win_hi = (case_no == 1) ? a - 2 : a - 1;
    return f;
}

VerificationReport verify_ext(std::int64_t amax) {
    if (amax < 0) throw BoundsError("verify_ext: amax must be >= 0");
    VerificationReport report;
    report.statement = "ext";
    report.bounds = "a <= " + std::to_string(amax);
    for (int case_no = 1; case_no <= 6; ++case_no) {
        for (std::int64_t a = 0; a <= amax; ++a) {
            const ExtFamily f = ext_family(case_no, a);
            ++report.checked;
            std::vector<std::int64_t> want;
            for (std::int64_t t = f.win_lo; t <= f.win_hi; ++t) want.push_back(t);
            const TwistProfile p = h1_profile(f.cls);
            const bool init = is_initialized(f.cls);
            if (p.ell != f.expected_ell || p.s_set != want || !init) {
                report.counterexamples.push_back(
                    "case " + std::to_string(case_no) + ", a=" + std::to_string(a) + " (" +
                    class_to_string(f.cls) + "): expected ell=" + std::to_string(f.expected_ell) +
                    " window [" + std::to_string(f.win_lo) + "," + std::to_string(f.win_hi) +
                    "], got ell=" + std::to_string(p.ell) + " S=" + s_set_string(p.s_set) +
                    (init ? "" : ", not initialized"));
            }
        }
    }
    return report;
}

std::vector<CatalogEntry> low_degree_catalog() {
    const auto cls = [](std::string_view s) { return parse_class(s); };
    struct Spec {
        const char* config;
        DivisorClass d;
        std::int64_t expected_ell;
        bool expected_initialized;
    };
    const std::vector<Spec> specs = {
        // degree 1
        {"line", cls("e1"), 0, true},
        // degree 2, by configuration of the effective decomposition
        {"irreducible conic", cls("l - e1"), 0, true},
        {"two meeting lines", cls("l - e2"), 0, true},
        {"two skew lines", cls("e5 + e6"), 1, true},
        {"double line", cls("2e1"), 3, true},
        // degree 3
        {"irreducible twisted cubic", cls("l"), 0, true},
        {"line + disjoint conic", cls("l - e1 + e2"), 2, true},
        {"line + conic meeting once", cls("l"), 0, true},
        {"line + conic meeting twice", cls("3l - e1 - e2 - e3 - e4 - e5 - e6"), 0, false},
        {"double line + meeting line", cls("l + e1 - e2"), 2, true},
        {"double line + skew line", cls("e1 + 2e2"), 3, true},
        {"three pairwise skew lines", cls("e1 + e2 + e3"), 2, true},
        {"three lines, one meeting pair", cls("l - e1 + e3"), 2, true},
        {"three lines in a chain", cls("l"), 0, true},
        {"three pairwise meeting lines", cls("3l - e1 - e2 - e3 - e4 - e5 - e6"), 0, false},
        {"triple line", cls("3e1"), 5, true},
    };
    std::vector<CatalogEntry> out;
    for (const auto& sp : specs) {
        CatalogEntry e;
        e.configuration = sp.config;
        e.cls = sp.d;
        e.deg = degree(sp.d);
        e.self_int = self_intersection(sp.d);
        e.expected_ell = sp.expected_ell;
        e.expected_initialized = sp.expected_initialized;
        const TwistProfile p = h1_profile(sp.d);
        e.ell = p.ell;
        e.s_set = p.s_set;
        e.initialized = is_initialized(sp.d);
        out.push_back(std::move(e));
    }
    return out;
}

std::string catalog_to_markdown(const std::vector<CatalogEntry>& entries) {
    std::ostringstream os;
    os << "| configuration | D | (D^2, D.H) | ell | S(D) | initialized |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const auto& e : entries) {
        os << "| " << e.configuration << " | " << class_to_string(e.cls) << " | (" << e.self_int
           << "," << e.deg << ") | " << e.ell << " | " << s_set_string(e.s_set) << " | "
           << (e.initialized ? "yes" : "no") << " |\n";
    }
    return os.str();
}

std::string catalog_to_csv(const std::vector<CatalogEntry>& entries) {
    std::ostringstream os;
    os << "configuration,class,self_intersection,degree,ell,s_set,initialized\n";
    for (const auto& e : entries) {
        os << csv_quote(e.configuration) << "," << csv_quote(class_to_string(e.cls)) << ","
           << e.self_int << "," << e.deg << "," << e.ell << "," << csv_quote(s_set_string(e.s_set))
           << "," << (e.initialized ? "yes" : "no") << "\n";
    }
    return os.str();
}

nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& entries) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json j;
        j["configuration"] = e.configuration;
        j["class"] = class_to_json(e.cls);
        j["class_notation"] = class_to_string(e.cls);
        j["self_intersection"] = e.self_int;
        j["degree"] = e.deg;
        j["ell"] = e.ell;
        j["s_set"] = e.s_set;
        j["initialized"] = e.initialized;
        out.push_back(std::move(j));
    }
    return out;
}

nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["statement"] = r.statement;
    j["bounds"] = r.bounds;
    j["checked"] = r.checked;
    j["counterexamples"] = r.counterexamples;
    j["notes"] = r.notes;
    j["ok"] = r.ok();
    return j;
}

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "verify " << r.statement << " (" << r.bounds << "): "
       << (r.ok() ? "PASS" : "FAIL") << ", " << r.checked << " classes checked";
    for (const auto& n : r.notes) os << "\n  note: " << n;
    for (const auto& c : r.counterexamples) os << "\n  counterexample: " << c;
    os << "\n";
    return os.str();
}

}  // namespace lacm
