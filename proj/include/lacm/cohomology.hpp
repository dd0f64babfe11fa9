// Exact h^0, h^1, h^2 of every line bundle O_X(D) on the cubic surface.
//
// h^0 is computed by (-1)-curve base-locus reduction into the nef chamber:
// whenever D.C < 0 for one of the 27 lines C, the line is in the base locus
// of |D| and h0(D) = h0(D - C); once D is nef, Kawamata-Viehweg gives
// h0 = chi(D).  h2 is Serre duality h0(-H - D), h1 closes Riemann-Roch.
// monoid_effective is an independent cross-oracle: membership of D in the
// nonnegative-integer span of the 27 lines, decided by depth-first search.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lacm/picard.hpp"

namespace lacm {

struct CohTriple {
    std::int64_t h0 = 0;
    std::int64_t h1 = 0;
    std::int64_t h2 = 0;

    bool operator==(const CohTriple&) const = default;
};

enum class TerminalKind { zero, nef, negative_degree };

struct ReductionStep {
    DivisorClass line;        // the line subtracted
    std::int64_t intersection;  // D.line at the time of subtraction (< 0)
};

// Unit-step record of the base-locus reduction: degree drops by exactly 1
// per step; terminal is the first class that is zero, nef, or of
// nonpositive degree.
struct ReductionTrace {
    std::vector<ReductionStep> steps;
    DivisorClass terminal;
    TerminalKind terminal_kind = TerminalKind::zero;
};

std::int64_t h0(const DivisorClass& d);
std::int64_t h0_traced(const DivisorClass& d, ReductionTrace& trace);
std::int64_t h1(const DivisorClass& d);
std::int64_t h2(const DivisorClass& d);
CohTriple coh(const DivisorClass& d);

bool is_effective(const DivisorClass& d);     // h0 > 0
bool is_initialized(const DivisorClass& d);   // h0(D) >= 1 and h0(D - H) = 0
bool is_m_regular(const DivisorClass& d, std::int64_t m);

// Search budget guard for the cross-oracle; degree(D) above it throws.
inline constexpr std::int64_t kMonoidDegreeBudget = 24;
bool monoid_effective(const DivisorClass& d);

// Drops the per-thread h0 memo cache (and the monoid-search cache).
void clear_cohomology_cache();

namespace detail {
// Unvalidated internals: callers have already checked the user-facing
// coefficient bound, so derived classes (twists, Serre duals, reduction
// intermediates) may exceed it; the pairing's 64-bit-safe guard still
// applies.
std::int64_t h0_raw(const DivisorClass& d);
std::int64_t h1_raw(const DivisorClass& d);
std::int64_t h2_raw(const DivisorClass& d);
CohTriple coh_raw(const DivisorClass& d);
}  // namespace detail

}  // namespace lacm
