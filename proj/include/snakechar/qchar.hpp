#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "snakechar/cartan.hpp"
#include "snakechar/lattice.hpp"
#include "snakechar/paths.hpp"
#include "snakechar/sl2.hpp"
#include "snakechar/snakes.hpp"

namespace snakechar {

// A finite formal sum of Laurent monomials with positive integer coefficients.
struct QCharacter {
    LieType lie_type;
    std::vector<std::pair<int, int>> snake;        // defining snake; empty for ad-hoc sets
    std::vector<std::pair<YMonomial, int>> terms;  // sorted by monomial, multiplicities > 0
    YMonomial highest;

    int multiplicity(const YMonomial& m) const;
    bool contains(const YMonomial& m) const { return multiplicity(m) > 0; }
    std::size_t distinct_terms() const { return terms.size(); }
    std::int64_t total_terms() const;
};

// Normalizes an explicit monomial list into a QCharacter.  `highest` is set to
// the unique dominant monomial when there is exactly one, else to 1.
QCharacter character_from_monomials(const CartanData& cd, std::vector<YMonomial> monomials,
                                    std::vector<std::pair<int, int>> snake = {});

// One path set P_{i_t,k_t} per snake point.
std::vector<std::vector<Path>> snake_path_sets(const CartanData& cd, const Snake& s);

// Streaming enumeration of non-overlapping tuples (each path strictly above the
// next); cb receives one index per page.
void for_each_tuple(const std::vector<std::vector<Path>>& pages,
                    const std::function<void(const std::vector<int>&)>& cb);
std::uint64_t count_tuples(const std::vector<std::vector<Path>>& pages);

// The q-character of the snake module: sum over non-overlapping tuples of the
// product of path monomials.  Honors SNAKE_QCHAR_THREADS; output is
// deterministic regardless of thread count.
QCharacter snake_qchar(const CartanData& cd, const Snake& s);

struct CharacterShape {
    bool thin = false;          // all multiplicities 1
    bool special = false;       // exactly one dominant monomial
    bool anti_special = false;  // exactly one anti-dominant monomial
};
CharacterShape character_shape(const CartanData& cd, const QCharacter& M);

enum class TupleMoveStatus { Moved, CannotMove, WouldOverlap };
struct TupleMoveResult {
    TupleMoveStatus status = TupleMoveStatus::CannotMove;
    std::vector<Path> tuple;  // the moved tuple (populated unless CannotMove)
    int component = -1;       // index of the component the move acted on
};
// Applies the lowering/raising move at (j,l) to the unique movable component.
TupleMoveResult tuple_move(const std::vector<Path>& tuple, int j, int l, MoveDir dir);

struct CondIIWitness {
    YMonomial x;                    // monomial outside M with two incoming A-edges
    std::pair<int, int> lift1, lift2;
};
struct CondIIIWitness {
    int node = 0;
    YMonomial member;               // a monomial of the offending coset
    std::vector<Sl2Monomial> expected, actual;
};
struct TheoremAReport {
    bool cond_i = false, cond_ii = false, cond_iii = false;
    std::vector<YMonomial> dominants;        // all dominant monomials found
    std::optional<CondIIWitness> ii_witness;
    std::optional<CondIIIWitness> iii_witness;
    bool ok() const { return cond_i && cond_ii && cond_iii; }
};
TheoremAReport verify_theorem_a(const CartanData& cd, const QCharacter& M);

// Canonical representative of m under multiplication by A_{i,.}^{+-1}; two
// monomials share a representative iff they lie in the same coset.
YMonomial coset_representative(const CartanData& cd, const YMonomial& m, int i);

struct RestrictedCharacter {
    std::vector<std::pair<Weight, int>> weights;  // sorted, multiplicities > 0
    bool weyl_invariant = false;
};
RestrictedCharacter restricted_character(const CartanData& cd, const QCharacter& M);

}  // namespace snakechar
