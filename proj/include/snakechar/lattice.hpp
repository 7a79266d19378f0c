#pragma once
// The monomial lattice: Laurent monomials in the variables Y_{i,k}, the
// A-variables, dominance classification, the maps u / wt / beta_i, exact
// factorization over the A-lattice, and the index geometry (the admissible
// grid X, the move grid W, the X' subgrid, and the plane embedding iota).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snakechar/cartan.hpp"
#include "snakechar/sl2.hpp"

namespace snakechar {

struct YFactor {
    int i = 0;  // node
    int k = 0;  // spectral index
    int e = 0;  // exponent

    auto operator<=>(const YFactor&) const = default;
};

// Canonical Laurent monomial: factors sorted by (node, index), no zeros.
class YMonomial {
  public:
    YMonomial() = default;
    explicit YMonomial(std::vector<YFactor> factors);
    static YMonomial var(int i, int k, int e = 1) { return YMonomial({{i, k, e}}); }

    const std::vector<YFactor>& factors() const { return f_; }
    int exp(int i, int k) const;  // the map u_{i,k}
    bool is_identity() const { return f_.empty(); }

    YMonomial operator*(const YMonomial& o) const;
    YMonomial inverse() const;
    YMonomial& operator*=(const YMonomial& o) { return *this = *this * o; }

    auto operator<=>(const YMonomial&) const = default;

    // "Y[i,k]^e ..." sorted by (i,k); identity renders as "1".
    std::string str() const;
    // exact JSON form [[i,k,e],...]
    std::string json() const;

  private:
    std::vector<YFactor> f_;
};

// Product of A-variables: sorted (j, l, exponent) triples, exponents nonzero.
struct AExponent {
    std::vector<YFactor> terms;

    auto operator<=>(const AExponent&) const = default;
};

bool in_X(const CartanData& cd, int i, int k);
bool in_W(const CartanData& cd, int i, int k);
bool in_Xprime(const CartanData& cd, int i, int k);

// The plane embedding of X; throws std::domain_error off the grid.
std::pair<int, int> iota(const CartanData& cd, int i, int k);

// A_{j,l} expanded in the Y's; throws std::domain_error when (j,l) is not
// on the move grid W.
YMonomial a_monomial(const CartanData& cd, int j, int l);

struct Classification {
    bool dominant = false;
    bool anti_dominant = false;
    std::vector<bool> j_dominant;  // per node 1..N
};

Classification classify(const CartanData& cd, const YMonomial& m);

Weight weight_of(const CartanData& cd, const YMonomial& m);

// Unique A-exponent whose Y-expansion equals ratio, or nullopt (NotInQ).
std::optional<AExponent> factor_as_A(const CartanData& cd, const YMonomial& ratio);

YMonomial expand_a(const CartanData& cd, const AExponent& ae);

// Projection keeping node-i factors only, as a single-node monomial in the
// raw spectral indices (callers rescale by r_i when interfacing with the
// unit-step sl2 layer).
Sl2Monomial beta_project(const YMonomial& m, int i);

}  // namespace snakechar
