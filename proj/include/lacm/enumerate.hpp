// Bounded enumeration of divisor classes by (degree, self-intersection),
// S6-orbit deduplication, regeneration of the classification tables, and
// brute-force verification of the classification statements at desk scale.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lacm/laway.hpp"
#include "lacm/picard.hpp"

#include "json.hpp"

namespace lacm {

struct OrbitFlags {
    bool effective = false;
    bool initialized = false;
    bool nef = false;
    bool ulrich = false;
    bool weakly_ulrich = false;
    std::int64_t ell = 0;
    std::vector<std::int64_t> s_set;
};

struct OrbitRecord {
    DivisorClass rep;  // canonical: c1..c6 nonincreasing
    std::int64_t u = 0;
    std::int64_t self_int = 0;
    std::int64_t deg = 0;
    OrbitFlags flags;
};

struct VerificationReport {
    std::string statement;
    std::string bounds;
    std::int64_t checked = 0;
    std::vector<std::string> counterexamples;
    std::vector<std::string> notes;

    bool ok() const { return counterexamples.empty(); }
};

using ClassPredicate = std::function<bool(const DivisorClass&)>;

// All canonical classes with D.H = deg and D.D = self_int, in table order
// (c0 ascending, then the b-vector written nonincreasing, descending lex).
std::vector<DivisorClass> solve_stratum(std::int64_t deg, std::int64_t self_int);

OrbitRecord make_record(const DivisorClass& rep);
std::vector<OrbitRecord> enum_classes(std::int64_t deg, std::int64_t self_int,
                                      const ClassPredicate& filter);

struct TableRow {
    std::string stratum;
    OrbitRecord rec;
};

std::vector<TableRow> table_1away();  // the two 1-away strata
std::vector<TableRow> table_2away();  // the five 2-away strata

std::string table_to_markdown(const std::vector<TableRow>& rows);
std::string table_to_csv(const std::vector<TableRow>& rows);
nlohmann::json table_to_json(const std::vector<TableRow>& rows);

// Equivalence checks over every effective class with 1 <= degree <= dmax
// (self-intersection swept over [-d^2, d^2/3]).
VerificationReport verify_t31(std::int64_t dmax);   // init & 1-away <=> numerics
VerificationReport verify_t35(std::int64_t dmax);   // init & 2-away <=> case list
VerificationReport verify_acm_ton(std::int64_t dmax);
VerificationReport verify_not_ulrich(std::int64_t dmax);
VerificationReport verify_degreebound(std::int64_t lmax, std::int64_t dmax);
VerificationReport verify_prop3l(const std::vector<std::int64_t>& lrange);

// The six explicit families: the class, its expected ell, and the expected
// contiguous nonvanishing window [win_lo, win_hi] of twists.
struct ExtFamily {
    DivisorClass cls;
    std::int64_t expected_ell = 0;
    std::int64_t win_lo = 0;
    std::int64_t win_hi = 0;
};
ExtFamily ext_family(int case_no, std::int64_t a);
VerificationReport verify_ext(std::int64_t amax);

// The complete degree 1..3 breakdown by effective-divisor configuration.
struct CatalogEntry {
    std::string configuration;
    DivisorClass cls;
    std::int64_t deg = 0;
    std::int64_t self_int = 0;
    std::int64_t expected_ell = 0;
    bool expected_initialized = false;
    std::int64_t ell = 0;
    std::vector<std::int64_t> s_set;
    bool initialized = false;
};
std::vector<CatalogEntry> low_degree_catalog();

std::string catalog_to_markdown(const std::vector<CatalogEntry>& entries);
std::string catalog_to_csv(const std::vector<CatalogEntry>& entries);
nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& entries);

nlohmann::json report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

}  // namespace lacm
