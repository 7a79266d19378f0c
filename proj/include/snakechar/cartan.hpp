#pragma once
// Cartan data for the simple Lie algebras of types A_N and B_N: Cartan
// matrix, symmetrizer, weights in the fundamental-weight basis, and simple
// reflections.  Nodes are numbered 1..N; in type B the short node is N.

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace snakechar {

enum class Kind { A, B };

struct LieType {
    Kind kind = Kind::A;
    int rank = 1;

    auto operator<=>(const LieType&) const = default;
};

inline std::string to_string(Kind k) { return k == Kind::A ? "A" : "B"; }

// Weight in the omega-basis: coords[i-1] is the coefficient of omega_i.
struct Weight {
    std::vector<int> coords;

    auto operator<=>(const Weight&) const = default;

    Weight& operator+=(const Weight& o) {
        for (std::size_t t = 0; t < coords.size(); ++t) coords[t] += o.coords[t];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (std::size_t t = 0; t < coords.size(); ++t) coords[t] -= o.coords[t];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    bool is_zero() const {
        for (int c : coords)
            if (c != 0) return false;
        return true;
    }
};

struct CartanData {
    LieType lie_type;
    std::vector<std::vector<int>> cartan;       // C[i-1][j-1] = C_{ij}
    std::vector<int> r;                         // r[i-1] = r_i
    int r_check = 1;                            // r^vee
    std::vector<std::vector<int>> symmetrized;  // B = D C, D = diag(r_i)

    int N() const { return lie_type.rank; }
    int ri(int i) const { return r[i - 1]; }
    int C(int i, int j) const { return cartan[i - 1][j - 1]; }

    // alpha_i expressed in the omega-basis: the i-th column of C.
    Weight alpha(int i) const {
        Weight w{std::vector<int>(N(), 0)};
        for (int row = 1; row <= N(); ++row) w.coords[row - 1] = C(row, i);
        return w;
    }
    Weight omega(int i) const {
        Weight w{std::vector<int>(N(), 0)};
        w.coords[i - 1] = 1;
        return w;
    }
    Weight zero_weight() const { return Weight{std::vector<int>(N(), 0)}; }

    void check_node(int i) const {
        if (i < 1 || i > N())
            throw std::domain_error("node index " + std::to_string(i) +
                                    " out of range 1.." + std::to_string(N()));
    }
};

CartanData cartan_data(LieType t);

// s_i(w) = w - w_i * alpha_i  (w_i = i-th omega-coordinate of w).
Weight simple_reflection(const CartanData& cd, int i, const Weight& w);

}  // namespace snakechar
