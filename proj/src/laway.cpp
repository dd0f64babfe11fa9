#include "lacm/laway.hpp"

#include <algorithm>

namespace lacm {

namespace {

std::pair<std::int64_t, std::int64_t> twist_window_raw(const DivisorClass& d) {
    std::int64_t max_dc = 0;   // max D.C over the 27 lines
    std::int64_t max_neg = 0;  // max (-D.C)
    bool first = true;
    for (const auto& line : lines27()) {
        const std::int64_t v = intersect(d, line);
        if (first) {
            max_dc = v;
            max_neg = -v;
            first = false;
        } else {
            max_dc = std::max(max_dc, v);
            max_neg = std::max(max_neg, -v);
        }
    }
    // t >= max(-D.C)  ==>  D + tH nonnegative on all lines, hence nef, hence
    // h1 = 0; dually t <= -max(D.C) - 1  ==>  -H - D - tH nef.
    return {-max_dc - 1, std::max<std::int64_t>(0, max_neg)};
}

TwistProfile profile_raw(const DivisorClass& d) {
    const auto [lo, hi] = twist_window_raw(d);
    const DivisorClass& h = hyperplane_class();

    TwistProfile p;
    p.lo = lo;
    p.hi = hi;
    p.values.reserve(static_cast<std::size_t>(hi - lo + 1));
    // one extra twist beyond each certified bound, asserted zero
    if (detail::h1_raw(d + (lo - 1) * h) != 0 || detail::h1_raw(d + (hi + 1) * h) != 0) {
        throw InternalError("h1_profile: nonzero value beyond the certified window");
    }
    for (std::int64_t t = lo; t <= hi; ++t) {
        const std::int64_t v = detail::h1_raw(d + t * h);
        p.values.push_back(v);
        if (v != 0) p.s_set.push_back(t);
    }
    if (p.values.front() != 0 || p.values.back() != 0) {
        throw InternalError("h1_profile: nonzero boundary value (window too narrow)");
    }
    p.ell = static_cast<std::int64_t>(p.s_set.size());
    if (!p.s_set.empty() && p.s_set.back() - p.s_set.front() + 1 != p.ell) {
        throw InternalError("h1_profile: nonvanishing set is not contiguous");
    }
    return p;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> twist_window(const DivisorClass& d) {
    require_coeff_bound(d);
    return twist_window_raw(d);
}

TwistProfile h1_profile(const DivisorClass& d) {
    require_coeff_bound(d);
    return profile_raw(d);
}

std::int64_t ell(const DivisorClass& d) { return h1_profile(d).ell; }

bool is_acm(const DivisorClass& d) { return ell(d) == 0; }

bool is_l_away(const DivisorClass& d, std::int64_t k) { return ell(d) == k; }

bool is_ulrich(const DivisorClass& d) {
    require_coeff_bound(d);
    const DivisorClass& h = hyperplane_class();
    const CohTriple zero{};
    return detail::coh_raw(d - h) == zero && detail::coh_raw(d - 2 * h) == zero;
}

bool is_weakly_ulrich(const DivisorClass& d) {
    require_coeff_bound(d);
    const DivisorClass& h = hyperplane_class();
    if (!is_initialized(d)) return false;
    // h2(D - tH) = 0 for all t <= 1: monotone under multiplication by a
    // section of H, so the top twist t = 1 decides; spot-check three more.
    for (std::int64_t t = 1; t >= -2; --t) {
        if (detail::h2_raw(d - t * h) != 0) return false;
    }
    // h0(D - tH) = 0 for all t >= 2: monotone again, t = 2 decides.
    for (std::int64_t t = 2; t <= 5; ++t) {
        if (detail::h0_raw(d - t * h) != 0) return false;
    }
    // h1(D - tH) = 0 for t <= 0 and for t >= 3, i.e. h1(D + sH) = 0 for
    // s >= 0 and s <= -3: certified window plus three spot twists per tail.
    const TwistProfile p = profile_raw(d);
    for (std::int64_t s : p.s_set) {
        if (s != -1 && s != -2) return false;
    }
    for (std::int64_t s = p.hi + 1; s <= p.hi + 3; ++s) {
        if (detail::h1_raw(d + s * h) != 0) return false;
    }
    for (std::int64_t s = p.lo - 3; s < p.lo; ++s) {
        if (detail::h1_raw(d + s * h) != 0) return false;
    }
    return true;
}

bool t31_numeric(const DivisorClass& d) {
    const std::int64_t q = self_intersection(d);
    const std::int64_t deg = degree(d);
    return (q == -2 && deg == 2) || (q == 2 && deg == 4);
}

bool t35_condition(const DivisorClass& d) {
    require_coeff_bound(d);
    const std::int64_t q = self_intersection(d);
    const std::int64_t deg = degree(d);
    const DivisorClass& h = hyperplane_class();
    if (q == 4 && deg == 6) return is_nef(d) && detail::h0_raw(3 * h - d) == 0;
    if (q == 3 && deg == 5) return is_nef(d);
    if (q == 0 && deg == 4) return detail::h0_raw(2 * h - d) == 0;
    return (q == -3 && deg == 3) || (q == -1 && deg == 3);
}

}  // namespace lacm
