#pragma once
// Exact q-characters over a single node: q-string decomposition of a
// dominant monomial, evaluation-module (simple) and Weyl-module characters,
// and the five-case classification of lowering/raising behaviour that the
// Theorem-A verifier consumes.
//
// Monomials live in Laurent variables Y_k indexed by a single integer;
// A_l = Y_{l-1} Y_{l+1} plays the role of the (inverse) root shift.

#include <compare>
#include <vector>

namespace snakechar {

// Canonical single-node monomial: factors sorted by index, no zero exponents.
class Sl2Monomial {
  public:
    Sl2Monomial() = default;
    explicit Sl2Monomial(std::vector<std::pair<int, int>> factors);

    const std::vector<std::pair<int, int>>& factors() const { return f_; }
    int exp(int k) const;
    bool is_identity() const { return f_.empty(); }
    bool dominant() const;

    Sl2Monomial times(int k, int e) const;  // multiply by Y_k^e
    Sl2Monomial operator*(const Sl2Monomial& o) const;

    auto operator<=>(const Sl2Monomial&) const = default;

  private:
    std::vector<std::pair<int, int>> f_;  // (index, exponent)
};

struct QString {
    int center = 0;   // string occupies {center-length+1, ..., center+length-1} step 2
    int length = 1;

    auto operator<=>(const QString&) const = default;
};

// Unique multiset of q-strings in pairwise general position whose union
// (with multiplicity) is M.  Throws std::domain_error on non-dominant input.
std::vector<QString> qstring_decompose(const Sl2Monomial& M);

// Simple character: product over strings of the (length+1)-term evaluation
// module character.  Sorted multiset.
std::vector<Sl2Monomial> sl2_simple_qchar(const Sl2Monomial& M);

// Weyl character: expanded product of (Y_k + Y_{k+2}^{-1}) over the factors
// of M, multiplicities kept.  Sorted multiset.
std::vector<Sl2Monomial> sl2_weyl_qchar(const Sl2Monomial& M);

enum class Sl2Case {
    I_lowerable,      // u_a = 1, u_{a+2} = 0: m A_{a+1}^{-1} in the simple char
    II_weyl_only,     // u_a = u_{a+2} = 1: m A_{a+1}^{-1} only in the Weyl char
    III_neither,      // u_a = 0: neither neighbour lies in the Weyl char
    raiseable,        // u_a = -1, u_{a-2} = 0: m A_{a-1} in the simple char
    raise_weyl_only,  // u_a = u_{a-2} = -1: m A_{a-1} only in the Weyl char
    inert,            // defensive: classification failed (unreachable for valid input)
};

// Classify m (a monomial of the thin simple character of M) at spectral
// index a.  Throws std::domain_error when m is not a character monomial.
Sl2Case sl2_case(const Sl2Monomial& m, const Sl2Monomial& M, int a);

}  // namespace snakechar
