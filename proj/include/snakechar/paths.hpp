#pragma once
// The path model: generation of the sets P_{i,k} in types A and B, corner
// extraction, the path -> monomial map, lowering/raising moves with exact
// epsilon-infinitesimal arithmetic, extremal paths, and the strictly-above
// relation between paths.

#include <compare>
#include <optional>
#include <vector>

#include "snakechar/cartan.hpp"
#include "snakechar/lattice.hpp"

namespace snakechar {

// Value m + e*eps for a formal infinitesimal 0 < eps < 1/2; lexicographic
// order on (m, e) realizes the numeric order exactly since |e| <= 1 always.
struct EpsRational {
    int m = 0;
    int e = 0;

    auto operator<=>(const EpsRational&) const = default;
};

struct PlanePoint {
    int x = 0;
    EpsRational y;

    auto operator<=>(const PlanePoint&) const = default;
};

// A path of the ambient set P_{i,k}.  Points are stored in arm order:
//   type A          — the N+2 points at x = 0..N+1;
//   type B, i = N   — the single spin arm of N+1 points;
//   type B, i < N   — the a-arm (N+1 points) followed by the abar-arm.
struct Path {
    LieType lie_type;
    int i = 0;
    int k = 0;
    std::vector<PlanePoint> pts;

    auto operator<=>(const Path&) const = default;

    int arm_count() const;
    // [first, last) index range of arm a (0-based) within pts
    std::pair<int, int> arm_span(int a) const;
};

struct CornerSet {
    std::vector<std::pair<int, int>> upper;  // lattice points, sorted
    std::vector<std::pair<int, int>> lower;

    bool has_upper(int i, int k) const;
    bool has_lower(int i, int k) const;
};

// Exhaustive, duplicate-free, lexicographically ordered path set.
// Throws std::domain_error when (i,k) is off the X grid.
std::vector<Path> gen_paths(const CartanData& cd, int i, int k);

CornerSet corners(const Path& p);

YMonomial path_monomial(const Path& p);

enum class Extremal { highest, lowest };
Path extremal_path(const CartanData& cd, int i, int k, Extremal which);

enum class MoveDir { lower, raise };

// Lower/raise the path at (j,l) on the move grid W; nullopt = CannotMove.
std::optional<Path> try_move(const Path& p, int j, int l, MoveDir dir);

// Per-column vertical extent; columns the path does not visit are absent.
struct ColumnExtent {
    int x;
    EpsRational lo, hi;
};
std::vector<ColumnExtent> column_extents(const Path& p);

// Every shared column of p sits strictly above (smaller y than) p'.
bool strictly_above(const Path& p, const Path& q);

// Pointwise minimum of two paths of the same P_{i,k}.
Path top_path(const Path& p, const Path& q);

}  // namespace snakechar
