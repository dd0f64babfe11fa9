// Acceptance suite: one criterion per section, one PASS/FAIL line each,
// nonzero exit if any criterion fails.  Runtime-bounded criteria measure
// wall time and fail when over budget.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "lacm/cli.hpp"
#include "lacm/enumerate.hpp"
#include "lacm/notation.hpp"
#include "lacm/parallel.hpp"
#include "lacm/quadric.hpp"

using namespace lacm;

namespace {

int failures = 0;

class Criterion {
  public:
    Criterion(int number, std::string name)
        : number_(number), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}

    void check(bool ok, const std::string& detail) {
        if (!ok) {
            ok_ = false;
            details_.push_back(detail);
        }
    }

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    void finish(double time_budget_s = 0.0) {
        const double elapsed = seconds();
        if (time_budget_s > 0.0 && elapsed > time_budget_s) {
            ok_ = false;
            std::ostringstream os;
            os << "runtime " << elapsed << "s exceeds budget " << time_budget_s << "s";
            details_.push_back(os.str());
        }
        std::ostringstream line;
        line << (ok_ ? "[PASS] " : "[FAIL] ") << number_ << ". " << name_;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << " (" << elapsed << "s)";
        std::cout << line.str() << "\n";
        for (const auto& d : details_) std::cout << "       - " << d << "\n";
        if (!ok_) ++failures;
    }

  private:
    int number_;
    std::string name_;
    bool ok_ = true;
    std::vector<std::string> details_;
    std::chrono::steady_clock::time_point start_;
};

DivisorClass cls(std::string_view s) { return parse_class(s); }

const DivisorClass H = hyperplane_class();

std::multiset<std::int64_t> stratum_u(const std::vector<TableRow>& rows, const std::string& label) {
    std::multiset<std::int64_t> out;
    for (const auto& row : rows) {
        if (row.stratum == label) out.insert(row.rec.u);
    }
    return out;
}

std::string multiset_string(const std::multiset<std::int64_t>& m) {
    std::string out = "{";
    bool first = true;
    for (const auto v : m) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

template <class Fn>
void for_each_in_box(std::int64_t bound, Fn&& fn) {
    const std::int64_t width = 2 * bound + 1;
    std::int64_t total = 1;
    for (int i = 0; i < 7; ++i) total *= width;
    parallel_for(total, [&](std::int64_t idx) {
        DivisorClass d;
        std::int64_t v = idx;
        for (int i = 0; i < 7; ++i) {
            d.c[i] = v % width - bound;
            v /= width;
        }
        fn(d);
    });
}

void criterion_1_p32() {
    Criterion c(1, "1-away table: 12 orbit rows with the printed u-values");
    std::ostringstream out, err;
    const int code = run_cli({"tables", "p32", "--format", "csv"}, out, err);
    c.check(code == 0, "tables p32 exited with " + std::to_string(code));
    const auto rows = table_1away();
    c.check(rows.size() == 12, "expected 12 rows, got " + std::to_string(rows.size()));
    const std::multiset<std::int64_t> want{15, 60, 6, 60, 60, 15};
    for (const std::string label : {"(-2,2)", "(2,4)"}) {
        const auto got = stratum_u(rows, label);
        c.check(got == want, label + " u-multiset " + multiset_string(got) +
                                 " != " + multiset_string(want));
    }
    c.finish(10.0);
}

void criterion_2_p37() {
    Criterion c(2, "2-away table: strata of 3/8/8/8/7 rows with the printed u-values");
    std::ostringstream out, err;
    const int code = run_cli({"tables", "p37", "--format", "csv"}, out, err);
    c.check(code == 0, "tables p37 exited with " + std::to_string(code));
    const auto rows = table_2away();
    const std::map<std::string, std::size_t> expected_rows = {
        {"(4,6)", 3}, {"(3,5)", 8}, {"(0,4)", 8}, {"(-3,3)", 8}, {"(-1,3)", 7}};
    for (const auto& [label, want] : expected_rows) {
        std::size_t got = 0;
        for (const auto& row : rows) {
            if (row.stratum == label) ++got;
        }
        if (got != want) {
            std::ostringstream detail;
            detail << label << ": enumeration yields " << got << " orbits, printed table has "
                   << want << "; extra orbit(s):";
            // name the orbits beyond the printed lists so the discrepancy is
            // reported verbatim
            static const std::set<DivisorClass> printed = [] {
                std::set<DivisorClass> p;
                for (const char* s :
                     {"2l", "6l-4e1-2e2-2e3-2e4-2e5", "10l-4e1-4e2-4e3-4e4-4e5-4e6", "2l-e1",
                      "3l-2e1-e2-e3", "4l-3e1-e2-e3-e4-e5", "4l-2e1-2e2-2e3-e4",
                      "6l-4e1-2e2-2e3-2e4-2e5-e6", "6l-3e1-3e2-3e3-2e4-e5-e6",
                      "7l-4e1-3e2-3e3-2e4-2e5-2e6", "8l-4e1-3e2-3e3-3e4-3e5-3e6", "l+e6",
                      "2l-e1-e2-e3+e6", "3l-2e1-2e2-e3", "3l-2e1-e2-e3-e4-e5+e6",
                      "4l-3e1-2e2-e3-e4-e5", "5l-3e1-3e2-2e3-e4-e5-e6",
                      "6l-3e1-3e2-3e3-2e4-2e5-e6", "7l-3e1-3e2-3e3-3e4-3e5-2e6", "e4+e5+e6",
                      "l-e1-e2+e5+e6", "2l-2e1-e2-e3+e6", "3l-3e1-e2-e3-e4",
                      "3l-2e1-2e2-e3-e4-e5+e6", "4l-3e1-2e2-2e3-e4-e5", "5l-3e1-3e2-2e3-2e4-e5-e6",
                      "6l-3e1-3e2-3e3-2e4-2e5-2e6", "l-e1+e6", "2l-2e1-e2", "2l-e1-e2-e3-e4+e6",
                      "3l-2e1-2e2-e3-e4", "4l-3e1-2e2-e3-e4-e5-e6", "4l-2e1-2e2-2e3-2e4-e5",
                      "5l-3e1-2e2-2e3-2e4-2e5-e6"}) {
                    p.insert(canonical_rep(parse_class(s)));
                }
                return p;
            }();
            for (const auto& row : rows) {
                if (row.stratum == label && printed.count(row.rec.rep) == 0) {
                    detail << " " << orbit_rep_string(row.rec.rep) << " (u=" << row.rec.u << ")";
                }
            }
            c.check(false, detail.str());
        }
    }
    const auto got46 = stratum_u(rows, "(4,6)");
    c.check(got46 == std::multiset<std::int64_t>{1, 30, 1},
            "(4,6) u-multiset " + multiset_string(got46) + " != {1,30,1}");
    c.finish(60.0);
}

void criterion_3_t31() {
    Criterion c(3, "1-away equivalence: zero counterexamples up to degree 10");
    const auto report = verify_t31(10);
    c.check(report.ok(), report.ok() ? "" : report.counterexamples.front());
    c.check(report.checked > 5000, "suspiciously few classes checked: " +
                                       std::to_string(report.checked));
    c.finish(300.0);
}

void criterion_4_t35() {
    Criterion c(4, "2-away equivalence: zero counterexamples up to degree 10");
    const auto report = verify_t35(10);
    c.check(report.ok(), report.ok() ? "" : report.counterexamples.front());
    c.finish(600.0);
}

void criterion_5_degreebound() {
    Criterion c(5, "degree bounds for ell <= 6 up to degree 18");
    const auto report = verify_degreebound(6, 18);
    c.check(report.ok(), report.ok() ? "" : report.counterexamples.front());
    // witnesses: ell = 2 at degree 6 exists; the (6a+2)-family has a = 1
    // member of degree 12 within 3*ell = 24
    c.check(ell(cls("2l")) == 2 && degree(cls("2l")) == 6, "2l witness");
    const DivisorClass fam = cls("2l + e1 + e2 + e3 + e4 + e5 + e6");
    c.check(ell(fam) == 8 && degree(fam) == 12, "2l + sum e_i witness");
    c.finish();
}

void criterion_6_ext() {
    Criterion c(6, "explicit families: exact ell and windows for a <= 3");
    const auto report = verify_ext(3);
    c.check(report.ok(), report.ok() ? "" : report.counterexamples.front());
    c.check(report.checked == 24, "expected 24 family members");
    c.finish();
}

void criterion_7_catalog() {
    Criterion c(7, "low-degree catalog matches per configuration");
    const auto entries = low_degree_catalog();
    for (const auto& e : entries) {
        c.check(e.ell == e.expected_ell,
                e.configuration + ": ell " + std::to_string(e.ell) + " != expected " +
                    std::to_string(e.expected_ell));
        c.check(e.initialized == e.expected_initialized, e.configuration + ": initialized flag");
        if (e.deg == 1) c.check(e.ell == 0, "degree-1 class must be ACM");
        if (e.configuration == "triple line") {
            c.check(e.s_set == std::vector<std::int64_t>{-3, -2, -1, 0, 1},
                    "triple line window");
        }
        if (e.configuration == "double line + skew line") {
            c.check(e.s_set == std::vector<std::int64_t>{-2, -1, 0},
                    "double line + skew line window");
        }
    }
    std::multiset<std::int64_t> deg2;
    for (const auto& e : entries) {
        if (e.deg == 2) deg2.insert(e.ell);
    }
    c.check(deg2 == std::multiset<std::int64_t>{0, 0, 1, 3}, "degree-2 breakdown");
    std::multiset<std::int64_t> deg3_initialized;
    std::size_t deg3_noninit = 0;
    for (const auto& e : entries) {
        if (e.deg != 3) continue;
        if (e.initialized) {
            deg3_initialized.insert(e.ell);
        } else {
            ++deg3_noninit;
            c.check(e.ell == 0, "non-initialized degree-3 classes are ACM");
        }
    }
    c.check(deg3_initialized == std::multiset<std::int64_t>{0, 0, 0, 2, 2, 2, 2, 3, 5},
            "degree-3 breakdown");
    c.check(deg3_noninit == 2, "two configurations give the hyperplane class");
    c.finish();
}

void criterion_8_witnesses() {
    Criterion c(8, "named witnesses");
    c.check(ell(cls("9l - 5e1 - 4e2 - 3e3 - 3e4 - 3e5 - 3e6")) == 3, "9l class");
    c.check(ell(cls("2l")) == 2, "2l");
    c.check(ell(cls("e5 + e6")) == 1, "e5 + e6");
    c.check(ell(cls("e1")) == 0, "e1");
    c.finish();
}

void criterion_9_quadric() {
    Criterion c(9, "quadric existence table equals d > ell; q_ell((ell+1,0)) = ell");
    for (std::int64_t l = 1; l <= 10; ++l) {
        for (std::int64_t d = 3; d <= 12; ++d) {
            if (t41_check(l, d) != (d > l)) {
                c.check(false, "t41(" + std::to_string(l) + "," + std::to_string(d) + ")");
            }
        }
    }
    for (std::int64_t l = 1; l <= 20; ++l) {
        if (q_ell({l + 1, 0}) != l) c.check(false, "q_ell((" + std::to_string(l) + "+1, 0))");
    }
    c.finish(1.0);
}

void criterion_10_properties() {
    Criterion c(10, "property suites: exhaustive boxes plus 10^4 random classes");
    // Serre duality + chi on the exhaustive |c| <= 3 box
    {
        std::atomic<std::int64_t> bad{0};
        for_each_in_box(3, [&](const DivisorClass& d) {
            const CohTriple t = coh(d);
            const CohTriple dual = coh(-H - d);
            if (t.h0 != dual.h2 || t.h1 != dual.h1 || t.h2 != dual.h0) ++bad;
            if (t.h0 - t.h1 + t.h2 != chi(d) || t.h1 < 0) ++bad;
        });
        c.check(bad == 0, "Serre/chi failures on the box: " + std::to_string(bad));
    }
    // pinned h0 values by numeric type on every effective class of the box
    {
        std::atomic<std::int64_t> bad{0};
        for_each_in_box(3, [&](const DivisorClass& d) {
            const std::int64_t q = self_intersection(d);
            const std::int64_t dg = degree(d);
            std::int64_t want = -1;
            if (q == -2 && dg == 2) want = 1;
            if (q == -3 && dg == 3) want = 1;
            if (q == -1 && dg == 3) want = 2;
            if (q == 0 && dg == 4) want = 3;
            if (want < 0) return;
            const std::int64_t value = h0(d);
            if (value != 0 && value != want) ++bad;
        });
        c.check(bad == 0, "pinned-h0 battery failures: " + std::to_string(bad));
    }
    // effectivity cross-oracle for degree <= 8 on the box
    {
        std::atomic<std::int64_t> bad{0};
        for_each_in_box(3, [&](const DivisorClass& d) {
            const std::int64_t dg = degree(d);
            if (dg < 0 || dg > 8) return;
            if (is_effective(d) != monoid_effective(d)) ++bad;
        });
        c.check(bad == 0, "effectivity cross-oracle failures: " + std::to_string(bad));
    }
    // nefness double-form and Lemma-nef equivalence on the box
    {
        std::atomic<std::int64_t> bad{0};
        for_each_in_box(3, [&](const DivisorClass& d) {
            if (is_nef_inequalities(d) != is_nef_lines(d)) ++bad;
            const std::int64_t dg = degree(d);
            if (dg >= 3 && self_intersection(d) == dg - 2 && is_effective(d)) {
                if (is_initialized(d) != is_nef(d)) ++bad;
            }
        });
        c.check(bad == 0, "nefness/initializedness failures: " + std::to_string(bad));
    }
    // contiguity + dual-ell on the |c| <= 2 box (profiles are pricier)
    {
        std::atomic<std::int64_t> bad{0};
        for_each_in_box(2, [&](const DivisorClass& d) {
            const TwistProfile p = h1_profile(d);  // asserts contiguity itself
            if (h1_profile(-d).ell != p.ell) ++bad;
            if (is_nef(d) && coh(d) != CohTriple{chi(d), 0, 0}) ++bad;
        });
        c.check(bad == 0, "profile failures on the box: " + std::to_string(bad));
    }
    // 10^4 randomized classes with |c_i| <= 50
    {
        std::atomic<std::int64_t> bad{0};
        std::vector<DivisorClass> classes(10000);
        std::mt19937_64 rng(20240915);
        std::uniform_int_distribution<std::int64_t> dist(-50, 50);
        for (auto& d : classes) {
            for (auto& v : d.c) v = dist(rng);
        }
        parallel_for(static_cast<std::int64_t>(classes.size()), [&](std::int64_t i) {
            const DivisorClass& d = classes[static_cast<std::size_t>(i)];
            const CohTriple t = coh(d);
            const CohTriple dual = coh(-H - d);
            if (t.h0 != dual.h2 || t.h1 != dual.h1 || t.h2 != dual.h0) ++bad;
            if (t.h0 - t.h1 + t.h2 != chi(d) || t.h1 < 0) ++bad;
            if (is_nef_inequalities(d) != is_nef_lines(d)) ++bad;
            if (is_nef(d) && t != CohTriple{chi(d), 0, 0}) ++bad;
            const TwistProfile p = h1_profile(d);
            if (h1_profile(-d).ell != p.ell) ++bad;
            const std::int64_t dg = degree(d);
            if (dg >= 0 && dg <= 8 && is_effective(d) != monoid_effective(d)) ++bad;
            if (dg >= 3 && self_intersection(d) == dg - 2 && is_effective(d) &&
                is_initialized(d) != is_nef(d)) {
                ++bad;
            }
            std::int64_t want = -1;
            const std::int64_t q = self_intersection(d);
            if (q == -2 && dg == 2) want = 1;
            if (q == -3 && dg == 3) want = 1;
            if (q == -1 && dg == 3) want = 2;
            if (q == 0 && dg == 4) want = 3;
            if (want >= 0) {
                const std::int64_t value = h0(d);
                if (value != 0 && value != want) ++bad;
            }
        });
        c.check(bad == 0, "random battery failures: " + std::to_string(bad));
    }
    c.finish();
}

}  // namespace

int main() {
    criterion_1_p32();
    criterion_2_p37();
    criterion_3_t31();
    criterion_4_t35();
    criterion_5_degreebound();
    criterion_6_ext();
    criterion_7_catalog();
    criterion_8_witnesses();
    criterion_9_quadric();
    criterion_10_properties();
    if (failures != 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
