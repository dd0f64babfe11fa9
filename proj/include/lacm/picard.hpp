// Exact integer arithmetic on the Picard lattice Z^7 of a smooth cubic
// surface: intersection pairing, distinguished classes, the 27 lines,
// nefness, Riemann-Roch, genus, S6 orbit keys and Weyl reflections.
//
// A class is stored as D = c[0]*l + c[1]*e1 + ... + c[6]*e6.  The usual
// notation D ~ a*l - b1*e1 - ... - b6*e6 corresponds to c[0] = a,
// c[i] = -b_i; this sign convention is fixed everywhere, including all
// serializations.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace lacm {

// User-facing coefficient bound: inputs within it keep every internal
// intermediate (twists, base-locus reductions, pairings) inside int64.
inline constexpr std::int64_t kInputCoeffBound = 1'000'000;
// Internal overflow guard for the pairing itself: 7 * (1e9)^2 < 2^63.
inline constexpr std::int64_t kSafeCoeffBound = 1'000'000'000;

struct BoundsError : std::domain_error {
    using std::domain_error::domain_error;
};
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisorClass {
    std::array<std::int64_t, 7> c{};

    constexpr DivisorClass() = default;
    constexpr DivisorClass(std::int64_t l, std::int64_t e1, std::int64_t e2,
                           std::int64_t e3, std::int64_t e4, std::int64_t e5,
                           std::int64_t e6)
        : c{l, e1, e2, e3, e4, e5, e6} {}

    bool operator==(const DivisorClass&) const = default;
    auto operator<=>(const DivisorClass&) const = default;

    bool is_zero() const { return *this == DivisorClass{}; }

    DivisorClass& operator+=(const DivisorClass& o) {
        for (int i = 0; i < 7; ++i) c[i] += o.c[i];
        return *this;
    }
    DivisorClass& operator-=(const DivisorClass& o) {
        for (int i = 0; i < 7; ++i) c[i] -= o.c[i];
        return *this;
    }
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator-(const DivisorClass& a) {
        DivisorClass r;
        for (int i = 0; i < 7; ++i) r.c[i] = -a.c[i];
        return r;
    }
    friend DivisorClass operator*(std::int64_t k, const DivisorClass& a) {
        DivisorClass r;
        for (int i = 0; i < 7; ++i) r.c[i] = k * a.c[i];
        return r;
    }
};

// The multiset (c1..c6) sorted nonincreasing, plus c0: equal keys iff the
// classes differ by a permutation of e1..e6.
struct OrbitKey {
    std::int64_t c0 = 0;
    std::array<std::int64_t, 6> sorted{};  // nonincreasing

    bool operator==(const OrbitKey&) const = default;
    auto operator<=>(const OrbitKey&) const = default;
};

// Distinguished classes.  lines27 ordering: e_i (i ascending), then
// l-e_i-e_j lexicographic in (i,j), then 2l-sum_{k!=j}e_k with j ascending.
const DivisorClass& hyperplane_class();                 // H = 3l - sum e_i
const DivisorClass& canonical_class();                  // K = -H
const std::array<DivisorClass, 27>& lines27();

// Throws BoundsError if any coefficient exceeds the given bound.
void require_coeff_bound(const DivisorClass& d, std::int64_t bound = kInputCoeffBound);

std::int64_t intersect(const DivisorClass& d, const DivisorClass& e);
std::int64_t degree(const DivisorClass& d);             // D.H
std::int64_t self_intersection(const DivisorClass& d);  // D.D
std::int64_t chi(const DivisorClass& d);                // D(D+H)/2 + 1
std::int64_t arithmetic_genus(const DivisorClass& d);   // D(D-H)/2 + 1

// Nefness, computed from the coefficient inequalities and cross-checked
// against nonnegativity on all 27 lines (InternalError on disagreement).
bool is_nef(const DivisorClass& d);
bool is_nef_inequalities(const DivisorClass& d);
bool is_nef_lines(const DivisorClass& d);

OrbitKey canonical_orbit(const DivisorClass& d);
DivisorClass canonical_rep(const DivisorClass& d);      // c1..c6 sorted nonincreasing
std::int64_t orbit_size(const DivisorClass& d);         // 6!/prod(mult!)

// Lattice reflection in the root r = l - e_i - e_j - e_k (r.r = -2):
// D |-> D + (D.r) r.  Fixes H; involution; preserves the pairing.
// Indices are 1-based and must be distinct; throws std::invalid_argument.
DivisorClass weyl_reflect(const DivisorClass& d, int i, int j, int k);

struct DivisorClassHash {
    std::size_t operator()(const DivisorClass& d) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto v : d.c) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

struct OrbitKeyHash {
    std::size_t operator()(const OrbitKey& k) const {
        DivisorClass d{k.c0, k.sorted[0], k.sorted[1], k.sorted[2],
                       k.sorted[3], k.sorted[4], k.sorted[5]};
        return DivisorClassHash{}(d);
    }
};

}  // namespace lacm
