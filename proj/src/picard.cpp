#include "lacm/picard.hpp"

#include <algorithm>
#include <cstdlib>

namespace lacm {

const DivisorClass& hyperplane_class() {
    static const DivisorClass h{3, -1, -1, -1, -1, -1, -1};
    return h;
}

const DivisorClass& canonical_class() {
    static const DivisorClass k = -hyperplane_class();
    return k;
}

const std::array<DivisorClass, 27>& lines27() {
    static const std::array<DivisorClass, 27> lines = [] {
        std::array<DivisorClass, 27> out{};
        int n = 0;
        for (int i = 1; i <= 6; ++i) {  // e_i
            DivisorClass d;
            d.c[i] = 1;
            out[n++] = d;
        }
        for (int i = 1; i <= 6; ++i) {  // l - e_i - e_j, i < j
            for (int j = i + 1; j <= 6; ++j) {
                DivisorClass d;
                d.c[0] = 1;
                d.c[i] = -1;
                d.c[j] = -1;
                out[n++] = d;
            }
        }
        for (int j = 1; j <= 6; ++j) {  // 2l - sum_{k != j} e_k
            DivisorClass d;
            d.c[0] = 2;
            for (int k = 1; k <= 6; ++k) d.c[k] = (k == j) ? 0 : -1;
            out[n++] = d;
        }
        return out;
    }();
    return lines;
}

void require_coeff_bound(const DivisorClass& d, std::int64_t bound) {
    for (auto v : d.c) {
        if (v > bound || v < -bound) {
            throw BoundsError("coefficient " + std::to_string(v) +
                              " exceeds bound " + std::to_string(bound));
        }
    }
}

namespace {
inline void guard(const DivisorClass& d) {
    for (auto v : d.c) {
        if (v > kSafeCoeffBound || v < -kSafeCoeffBound) {
            throw BoundsError("coefficient exceeds the 64-bit-safe bound");
        }
    }
}
}  // namespace

std::int64_t intersect(const DivisorClass& d, const DivisorClass& e) {
    guard(d);
    guard(e);
    std::int64_t v = d.c[0] * e.c[0];
    for (int i = 1; i < 7; ++i) v -= d.c[i] * e.c[i];
    return v;
}

std::int64_t degree(const DivisorClass& d) { return intersect(d, hyperplane_class()); }

std::int64_t self_intersection(const DivisorClass& d) { return intersect(d, d); }

std::int64_t chi(const DivisorClass& d) {
    const std::int64_t q = self_intersection(d) + degree(d);
    if (q % 2 != 0) throw InternalError("chi: D.D + D.H is odd (lattice bug)");
    return q / 2 + 1;
}

std::int64_t arithmetic_genus(const DivisorClass& d) {
    const std::int64_t q = self_intersection(d) - degree(d);
    if (q % 2 != 0) throw InternalError("arithmetic_genus: D.D - D.H is odd (lattice bug)");
    return q / 2 + 1;
}

bool is_nef_inequalities(const DivisorClass& d) {
    guard(d);
    // in paper coordinates a = c0, b_i = -c_i:
    //   b_i >= 0, a >= b_i + b_j (i != j), 2a >= sum_{i != j} b_i
    const std::int64_t a = d.c[0];
    std::int64_t bsum = 0;
    for (int i = 1; i < 7; ++i) {
        const std::int64_t bi = -d.c[i];
        if (bi < 0) return false;
        bsum += bi;
    }
    for (int i = 1; i < 7; ++i) {
        for (int j = i + 1; j < 7; ++j) {
            if (a < -d.c[i] - d.c[j]) return false;
        }
    }
    for (int j = 1; j < 7; ++j) {
        if (2 * a < bsum - (-d.c[j])) return false;
    }
    return true;
}

bool is_nef_lines(const DivisorClass& d) {
    for (const auto& line : lines27()) {
        if (intersect(d, line) < 0) return false;
    }
    return true;
}

bool is_nef(const DivisorClass& d) {
    const bool ineq = is_nef_inequalities(d);
    const bool dual = is_nef_lines(d);
    if (ineq != dual) throw InternalError("is_nef: inequality and 27-line forms disagree");
    return ineq;
}

OrbitKey canonical_orbit(const DivisorClass& d) {
    OrbitKey k;
    k.c0 = d.c[0];
    for (int i = 0; i < 6; ++i) k.sorted[i] = d.c[i + 1];
    std::sort(k.sorted.begin(), k.sorted.end(), std::greater<>());
    return k;
}

DivisorClass canonical_rep(const DivisorClass& d) {
    const OrbitKey k = canonical_orbit(d);
    DivisorClass r;
    r.c[0] = k.c0;
    for (int i = 0; i < 6; ++i) r.c[i + 1] = k.sorted[i];
    return r;
}

std::int64_t orbit_size(const DivisorClass& d) {
    static constexpr std::int64_t fact[7] = {1, 1, 2, 6, 24, 120, 720};
    const OrbitKey k = canonical_orbit(d);
    std::int64_t u = 720;
    int run = 1;
    for (int i = 1; i < 6; ++i) {
        if (k.sorted[i] == k.sorted[i - 1]) {
            ++run;
        } else {
            u /= fact[run];
            run = 1;
        }
    }
    u /= fact[run];
    return u;
}

DivisorClass weyl_reflect(const DivisorClass& d, int i, int j, int k) {
    if (i < 1 || i > 6 || j < 1 || j > 6 || k < 1 || k > 6 || i == j || j == k || i == k) {
        throw std::invalid_argument("weyl_reflect: indices must be distinct and in 1..6");
    }
    DivisorClass r;
    r.c[0] = 1;
    r.c[i] = r.c[j] = r.c[k] = -1;
    return d + intersect(d, r) * r;
}

}  // namespace lacm
