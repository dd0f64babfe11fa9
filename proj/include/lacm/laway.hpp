// Twist profiles t |-> h1(D + tH), the nonvanishing set S(D) and its size
// ell(D), and the classification predicates: ACM, ell-away, Ulrich, weakly
// Ulrich, and the numeric conditions of the 1-away and 2-away theorems.
#pragma once

#include <cstdint>
#include <vector>

#include "lacm/cohomology.hpp"
#include "lacm/picard.hpp"

namespace lacm {

// The map t |-> h1(D + tH) on a certified-sufficient window [lo, hi]:
// h1 = 0 for t >= hi (D + tH nef there) and for t <= lo (Serre dual nef).
struct TwistProfile {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::vector<std::int64_t> values;  // h1(D + tH) for t = lo..hi
    std::int64_t ell = 0;
    std::vector<std::int64_t> s_set;   // sorted t with h1 != 0 (contiguous)

    std::int64_t at(std::int64_t t) const { return values[static_cast<std::size_t>(t - lo)]; }
};

std::pair<std::int64_t, std::int64_t> twist_window(const DivisorClass& d);

// Evaluates every twist in the window, plus one sentinel beyond each end;
// throws InternalError if a boundary value is nonzero or S(D) is not a
// contiguous interval.
TwistProfile h1_profile(const DivisorClass& d);

std::int64_t ell(const DivisorClass& d);
bool is_acm(const DivisorClass& d);
bool is_l_away(const DivisorClass& d, std::int64_t k);

bool is_ulrich(const DivisorClass& d);          // coh(D-H) = coh(D-2H) = 0
bool is_weakly_ulrich(const DivisorClass& d);

// (D^2, D.H) in {(-2,2), (2,4)}
bool t31_numeric(const DivisorClass& d);
// one of: (4,6) nef |3H-D|=0; (3,5) nef; (0,4) |2H-D|=0; (-3,3); (-1,3)
bool t35_condition(const DivisorClass& d);

}  // namespace lacm
