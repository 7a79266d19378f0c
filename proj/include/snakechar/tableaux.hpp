#pragma once
// Skew diagrams and their semistandard fillings: the combinatorial expression
// of the same characters as products of box monomials, plus the cross-check
// that the tableau generating function and the path tuple sum agree.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "snakechar/cartan.hpp"
#include "snakechar/lattice.hpp"
#include "snakechar/qchar.hpp"
#include "snakechar/snakes.hpp"

namespace snakechar {

struct DiagramColumn {
    int col = 0;     // 1-based column index
    int top = 0;     // row of the topmost box (may be negative)
    int height = 0;  // number of boxes

    int bottom() const { return top + height - 1; }
    auto operator<=>(const DiagramColumn&) const = default;
};

struct SkewDiagram {
    LieType lie_type;
    std::vector<DiagramColumn> cols;  // sorted by col, contiguous from 1

    auto operator<=>(const SkewDiagram&) const = default;
};

// Letters: type A uses 1..N+1; type B uses 1..N, 0, and barred -1..-N
// (encoded as negative ints).  Rank gives the total order.
using Letter = int;

std::vector<Letter> letter_alphabet(const CartanData& cd);
int letter_rank(const CartanData& cd, Letter a);
// Vertical neighbours must strictly increase; in type B the pair (0,0) is
// also allowed.  Horizontal neighbours weakly increase; in type B the pair
// (0,0) is forbidden.
bool vertical_ok(const CartanData& cd, Letter a, Letter b);
bool horizontal_ok(const CartanData& cd, Letter a, Letter b);

struct SkewTableau {
    SkewDiagram diagram;
    std::vector<std::vector<Letter>> fill;  // per column, top to bottom
};

// Validates and normalizes an explicit column list.  Throws std::domain_error
// naming the offending column.
SkewDiagram make_diagram(const CartanData& cd, std::vector<DiagramColumn> cols);

// The diagram of a snake whose points all lie in X'; throws otherwise.
SkewDiagram diagram_from_snake(const CartanData& cd, const Snake& s);
Snake snake_from_diagram(const CartanData& cd, const SkewDiagram& d);

// Monomial of one box holding letter `a` with plane shift kk = 2 r_check
// (col - row); boundary variables Y_0 and Y_{N+1} are dropped.
YMonomial box_monomial(const CartanData& cd, Letter a, int kk);
YMonomial tableau_monomial(const CartanData& cd, const SkewTableau& t);
YMonomial column_fill_monomial(const CartanData& cd, const DiagramColumn& dc,
                               const std::vector<Letter>& letters);

// All vertical-rule fills of one column, in lexicographic letter-rank order.
std::vector<std::vector<Letter>> column_fills(const CartanData& cd, const DiagramColumn& dc);

void for_each_tableau(const CartanData& cd, const SkewDiagram& d,
                      const std::function<void(const SkewTableau&)>& cb);
std::uint64_t count_tableaux(const CartanData& cd, const SkewDiagram& d);

// The generating function over all semistandard fillings (materialized).
QCharacter tableaux_qchar(const CartanData& cd, const SkewDiagram& d);

// Fixed-width text rendering: one line per row, cells separated by spaces,
// '.' for absent boxes, 'b<i>' for barred letters.
std::string render_tableau(const CartanData& cd, const SkewTableau& t);

struct KosReport {
    bool equal = false;
    bool per_column_bijection = false;  // fills <-> paths match monomially, multiplicity-free
    bool adjacency_preserved = false;   // column compatibility == strictly-above, all adjacent pairs
    std::uint64_t tableau_count = 0;    // chain count on the tableau side
    std::uint64_t tuple_count = 0;      // chain count on the path side
    bool direct = false;                // materialized comparison also ran
    bool direct_equal = false;
    std::string detail;                 // first mismatch, empty when equal
};

// Verifies that the tableau generating function equals the path tuple sum.
// The factored argument (column bijection + adjacency transfer + chain count)
// always runs and is exact: every component spans every shared plane column,
// so the strictly-above relation is transitive and adjacent-pair agreement
// determines the whole sum.  The materialized comparison additionally runs
// when both sides stay within direct_limit terms.
KosReport kos_check(const CartanData& cd, const SkewDiagram& d,
                    std::uint64_t direct_limit = 5'000'000);

}  // namespace snakechar
