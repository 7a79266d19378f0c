#include "snakechar/cartan.hpp"

namespace snakechar {

CartanData cartan_data(LieType t) {
    const int n = t.rank;
    if (t.kind == Kind::A && n < 1)
        throw std::invalid_argument("type A needs rank >= 1");
    if (t.kind == Kind::B && n < 2)
        throw std::invalid_argument("type B needs rank >= 2");

    CartanData cd;
    cd.lie_type = t;
    cd.cartan.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        cd.cartan[i][i] = 2;
        if (i + 1 < n) {
            cd.cartan[i][i + 1] = -1;
            cd.cartan[i + 1][i] = -1;
        }
    }
    if (t.kind == Kind::B) cd.cartan[n - 1][n - 2] = -2;  // C_{N,N-1}

    cd.r.assign(n, 1);
    cd.r_check = 1;
    if (t.kind == Kind::B) {
        for (int i = 0; i < n - 1; ++i) cd.r[i] = 2;
        cd.r[n - 1] = 1;  // short node
        cd.r_check = 2;
    }

    cd.symmetrized.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            cd.symmetrized[i][j] = cd.r[i] * cd.cartan[i][j];
    return cd;
}

Weight simple_reflection(const CartanData& cd, int i, const Weight& w) {
    cd.check_node(i);
    Weight out = w;
    const int wi = w.coords[i - 1];
    if (wi != 0) {
        const Weight ai = cd.alpha(i);
        for (int t = 0; t < cd.N(); ++t) out.coords[t] -= wi * ai.coords[t];
    }
    return out;
}

}  // namespace snakechar
