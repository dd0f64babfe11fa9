// Line-bundle cohomology on the smooth quadric P^1 x P^1 via Kunneth,
// ell-away profiles there, standard cohomology of O(m) on P^3, and the
// certified vanishing checks behind the degree-d existence statement.
#pragma once

#include <cstdint>
#include <string>

#include "lacm/cohomology.hpp"

namespace lacm {

// a*h1 + b*h2 on P^1 x P^1; the hyperplane class of the degree-2 embedding
// is h = h1 + h2, twisting by O(1) adds (1,1).  K = (-2,-2).
struct BidegreeClass {
    std::int64_t a = 0;
    std::int64_t b = 0;

    bool operator==(const BidegreeClass&) const = default;

    BidegreeClass twist(std::int64_t t) const { return {a + t, b + t}; }
};

CohTriple q_coh(const BidegreeClass& c);
std::int64_t q_ell(const BidegreeClass& c);  // # of t with h1(c + t(1,1)) != 0

struct P3Coh {
    std::int64_t h0 = 0;
    std::int64_t h1 = 0;
    std::int64_t h2 = 0;
    std::int64_t h3 = 0;

    bool operator==(const P3Coh&) const = default;
};
P3Coh p3_coh(std::int64_t m);  // O(m) on P^3

// The cohomological vanishings that let the witness curve D = (ell+1, 0)
// ride from the quadric onto a smooth degree-d hypersurface: conditions
// h0(D(1-d)) = 0 and h1(D(-1-d)) = 0, plus the certified-zero bounds for
// h1(I_D(d-1)), h2(I_D(d-2)), h3(I_D(d-3)) coming from the ideal-sheaf
// sequence 0 -> O_P3(-2) -> I_D -> O_Q(-D) -> 0.
bool regularity_certificate(std::int64_t ell, std::int64_t d);

// regularity_certificate plus q_ell((ell+1,0)) = ell plus the transfer
// identity: #{m : h1(I_D(m)) != 0} = ell.
bool t41_check(std::int64_t ell, std::int64_t d);

// CSV truth table of t41_check over 1 <= ell <= lmax, 3 <= d <= dmax.
std::string t41_table_csv(std::int64_t lmax, std::int64_t dmax);

}  // namespace lacm
