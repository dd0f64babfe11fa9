#include "lacm/cohomology.hpp"

#include <algorithm>
#include <unordered_map>

namespace lacm {

namespace {

// Per-thread memo for h0, keyed on the raw 7-vector (not the orbit key, so
// correctness never leans on the symmetry argument).  Bounded: cleared when
// it grows past the cap.
constexpr std::size_t kCacheCap = 1u << 21;

std::unordered_map<DivisorClass, std::int64_t, DivisorClassHash>& h0_cache() {
    thread_local std::unordered_map<DivisorClass, std::int64_t, DivisorClassHash> cache;
    return cache;
}

std::unordered_map<OrbitKey, bool, OrbitKeyHash>& monoid_cache() {
    thread_local std::unordered_map<OrbitKey, bool, OrbitKeyHash> cache;
    return cache;
}

}  // namespace

namespace detail {

// Subtracts a negative line in bulk: if D.C = -m < 0 then C sits in the
// base locus m times over, so h0(D) = h0(D - mC).
std::int64_t h0_raw(const DivisorClass& start) {
    auto& cache = h0_cache();
    const auto hit = cache.find(start);
    if (hit != cache.end()) return hit->second;

    DivisorClass d = start;
    std::int64_t result = -1;
    while (true) {
        if (d.is_zero()) {
            result = 1;
            break;
        }
        const std::int64_t deg = degree(d);
        if (deg <= 0) {
            result = 0;
            break;
        }
        const DivisorClass* neg_line = nullptr;
        std::int64_t val = 0;
        for (const auto& line : lines27()) {
            const std::int64_t v = intersect(d, line);
            if (v < 0) {
                neg_line = &line;
                val = v;
                break;
            }
        }
        if (neg_line == nullptr) {  // nef: Kawamata-Viehweg kills h1, h2
            result = chi(d);
            break;
        }
        d += val * (*neg_line);
    }

    if (cache.size() >= kCacheCap) cache.clear();
    cache.emplace(start, result);
    return result;
}

std::int64_t h2_raw(const DivisorClass& d) { return h0_raw(canonical_class() - d); }

std::int64_t h1_raw(const DivisorClass& d) {
    const std::int64_t v = h0_raw(d) + h2_raw(d) - chi(d);
    if (v < 0) throw InternalError("h1: negative value (oracle bug)");
    return v;
}

CohTriple coh_raw(const DivisorClass& d) {
    CohTriple t{h0_raw(d), 0, h2_raw(d)};
    t.h1 = t.h0 + t.h2 - chi(d);
    if (t.h1 < 0) throw InternalError("coh: negative h1 (oracle bug)");
    return t;
}

}  // namespace detail

std::int64_t h0(const DivisorClass& d) {
    require_coeff_bound(d);
    return detail::h0_raw(d);
}

std::int64_t h0_traced(const DivisorClass& d, ReductionTrace& trace) {
    require_coeff_bound(d);
    trace.steps.clear();
    DivisorClass cur = d;
    while (true) {
        if (cur.is_zero()) {
            trace.terminal = cur;
            trace.terminal_kind = TerminalKind::zero;
            return 1;
        }
        if (degree(cur) <= 0) {
            trace.terminal = cur;
            trace.terminal_kind = TerminalKind::negative_degree;
            return 0;
        }
        const DivisorClass* neg_line = nullptr;
        std::int64_t val = 0;
        for (const auto& line : lines27()) {
            const std::int64_t v = intersect(cur, line);
            if (v < 0) {
                neg_line = &line;
                val = v;
                break;
            }
        }
        if (neg_line == nullptr) {
            trace.terminal = cur;
            trace.terminal_kind = TerminalKind::nef;
            return chi(cur);
        }
        trace.steps.push_back({*neg_line, val});
        cur -= *neg_line;  // one unit step: degree drops by exactly 1
    }
}

std::int64_t h1(const DivisorClass& d) {
    require_coeff_bound(d);
    return detail::h1_raw(d);
}

std::int64_t h2(const DivisorClass& d) {
    require_coeff_bound(d);
    return detail::h2_raw(d);
}

CohTriple coh(const DivisorClass& d) {
    require_coeff_bound(d);
    return detail::coh_raw(d);
}

bool is_effective(const DivisorClass& d) {
    require_coeff_bound(d);
    return detail::h0_raw(d) > 0;
}

bool is_initialized(const DivisorClass& d) {
    require_coeff_bound(d);
    return detail::h0_raw(d) > 0 && detail::h0_raw(d - hyperplane_class()) == 0;
}

bool is_m_regular(const DivisorClass& d, std::int64_t m) {
    require_coeff_bound(d);
    const DivisorClass& h = hyperplane_class();
    return detail::h1_raw(d + (m - 1) * h) == 0 && detail::h2_raw(d + (m - 2) * h) == 0;
}

namespace {

bool monoid_search(const DivisorClass& d) {
    if (d.is_zero()) return true;
    const std::int64_t deg = degree(d);
    if (deg <= 0) return false;  // every generator has degree 1
    const OrbitKey key = canonical_orbit(d);
    auto& cache = monoid_cache();
    const auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    // lines sorted by descending D.C prunes fastest
    std::array<std::pair<std::int64_t, int>, 27> order;
    for (int i = 0; i < 27; ++i) order[i] = {intersect(d, lines27()[i]), i};
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    bool found = false;
    for (const auto& [v, idx] : order) {
        if (monoid_search(d - lines27()[idx])) {
            found = true;
            break;
        }
    }
    cache.emplace(key, found);
    return found;
}

}  // namespace

bool monoid_effective(const DivisorClass& d) {
    require_coeff_bound(d);
    if (degree(d) > kMonoidDegreeBudget) {
        throw BoundsError("monoid_effective: degree exceeds search budget 24");
    }
    return monoid_search(d);
}

void clear_cohomology_cache() {
    h0_cache().clear();
    monoid_cache().clear();
}

}  // namespace lacm
