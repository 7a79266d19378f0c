#include "snakechar/lattice.hpp"

#include <algorithm>
#include <climits>

namespace snakechar {

YMonomial::YMonomial(std::vector<YFactor> factors) : f_(std::move(factors)) {
    std::sort(f_.begin(), f_.end(), [](const YFactor& a, const YFactor& b) {
        return std::pair{a.i, a.k} < std::pair{b.i, b.k};
    });
    std::size_t w = 0;
    for (std::size_t rd = 0; rd < f_.size();) {
        const int i = f_[rd].i, k = f_[rd].k;
        int e = 0;
        while (rd < f_.size() && f_[rd].i == i && f_[rd].k == k) e += f_[rd++].e;
        if (e != 0) f_[w++] = {i, k, e};
    }
    f_.resize(w);
}

int YMonomial::exp(int i, int k) const {
    auto it = std::lower_bound(f_.begin(), f_.end(), YFactor{i, k, INT_MIN},
                               [](const YFactor& a, const YFactor& b) {
                                   return std::pair{a.i, a.k} < std::pair{b.i, b.k};
                               });
    return (it != f_.end() && it->i == i && it->k == k) ? it->e : 0;
}

YMonomial YMonomial::operator*(const YMonomial& o) const {
    std::vector<YFactor> merged;
    merged.reserve(f_.size() + o.f_.size());
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() && b != o.f_.end()) {
        const auto ka = std::pair{a->i, a->k}, kb = std::pair{b->i, b->k};
        if (ka < kb) merged.push_back(*a++);
        else if (kb < ka) merged.push_back(*b++);
        else {
            const int e = a->e + b->e;
            if (e != 0) merged.push_back({a->i, a->k, e});
            ++a, ++b;
        }
    }
    merged.insert(merged.end(), a, f_.end());
    merged.insert(merged.end(), b, o.f_.end());
    YMonomial out;
    out.f_ = std::move(merged);  // already canonical
    return out;
}

YMonomial YMonomial::inverse() const {
    YMonomial out;
    out.f_ = f_;
    for (auto& f : out.f_) f.e = -f.e;
    return out;
}

std::string YMonomial::str() const {
    if (f_.empty()) return "1";
    std::string s;
    for (const auto& f : f_) {
        if (!s.empty()) s += ' ';
        s += "Y[" + std::to_string(f.i) + ',' + std::to_string(f.k) + ']';
        if (f.e != 1) s += '^' + std::to_string(f.e);
    }
    return s;
}

std::string YMonomial::json() const {
    std::string s = "[";
    for (const auto& f : f_) {
        if (s.size() > 1) s += ',';
        s += '[' + std::to_string(f.i) + ',' + std::to_string(f.k) + ',' +
             std::to_string(f.e) + ']';
    }
    return s + ']';
}

namespace {
int mod4(int x) { return ((x % 4) + 4) % 4; }
bool even(int x) { return (x & 1) == 0; }
}  // namespace

bool in_X(const CartanData& cd, int i, int k) {
    cd.check_node(i);
    if (cd.lie_type.kind == Kind::A) return !even(i - k);
    return i == cd.N() ? !even(k) : even(k);
}

bool in_W(const CartanData& cd, int i, int k) { return in_X(cd, i, k - cd.ri(i)); }

bool in_Xprime(const CartanData& cd, int i, int k) {
    if (cd.lie_type.kind == Kind::A) return in_X(cd, i, k);
    return i < cd.N() && mod4(2 * i - k) == 2;
}

std::pair<int, int> iota(const CartanData& cd, int i, int k) {
    if (!in_X(cd, i, k))
        throw std::domain_error("iota: (" + std::to_string(i) + "," + std::to_string(k) +
                                ") not in X");
    if (cd.lie_type.kind == Kind::A) return {i, k};
    const int n = cd.N();
    if (i == n) return {2 * n - 1, k};
    return mod4(2 * n + k - 2 * i) == 2 ? std::pair{2 * i, k}
                                        : std::pair{4 * n - 2 - 2 * i, k};
}

YMonomial a_monomial(const CartanData& cd, int j, int l) {
    if (!in_W(cd, j, l))
        throw std::domain_error("a_monomial: (" + std::to_string(j) + "," +
                                std::to_string(l) + ") not in W");
    std::vector<YFactor> f{{j, l + cd.ri(j), 1}, {j, l - cd.ri(j), 1}};
    for (int i = 1; i <= cd.N(); ++i) {
        switch (cd.C(i, j)) {
            case -1: f.push_back({i, l, -1}); break;
            case -2:
                f.push_back({i, l + 1, -1});
                f.push_back({i, l - 1, -1});
                break;
            default: break;
        }
    }
    return YMonomial(std::move(f));
}

Classification classify(const CartanData& cd, const YMonomial& m) {
    Classification c;
    c.dominant = c.anti_dominant = true;
    c.j_dominant.assign(cd.N() + 1, true);  // index 1..N
    for (const auto& f : m.factors()) {
        if (f.e > 0) c.anti_dominant = false;
        if (f.e < 0) {
            c.dominant = false;
            c.j_dominant[f.i] = false;
        }
    }
    return c;
}

Weight weight_of(const CartanData& cd, const YMonomial& m) {
    Weight w = cd.zero_weight();
    for (const auto& f : m.factors()) w.coords[f.i - 1] += f.e;
    return w;
}

YMonomial expand_a(const CartanData& cd, const AExponent& ae) {
    YMonomial out;
    for (const auto& t : ae.terms) {
        YMonomial a = a_monomial(cd, t.i, t.k);
        if (t.e < 0) a = a.inverse();
        for (int c = 0; c < std::abs(t.e); ++c) out *= a;
    }
    return out;
}

std::optional<AExponent> factor_as_A(const CartanData& cd, const YMonomial& ratio) {
    if (ratio.is_identity()) return AExponent{};
    // Peel from the top: at the maximal surviving spectral index M, the only
    // contributions are tops of A_{j,M-r_j}, so their exponents are forced.
    int kmin = INT_MAX;
    for (const auto& f : ratio.factors()) kmin = std::min(kmin, f.k);

    YMonomial rest = ratio;
    std::vector<YFactor> terms;
    while (!rest.is_identity()) {
        int M = INT_MIN;
        for (const auto& f : rest.factors()) M = std::max(M, f.k);
        bool peeled = false;
        for (const auto& f : std::vector<YFactor>(rest.factors())) {
            if (f.k != M) continue;
            const int j = f.i, l = M - cd.ri(j);
            // a genuine factorisation never dips below the ratio's own support
            if (l - cd.ri(j) < kmin) return std::nullopt;
            if (!in_W(cd, j, l)) return std::nullopt;
            terms.push_back({j, l, f.e});
            YMonomial a = a_monomial(cd, j, l);
            if (f.e > 0) a = a.inverse();
            for (int c = 0; c < std::abs(f.e); ++c) rest *= a;
            peeled = true;
        }
        if (!peeled) return std::nullopt;  // defensive; M always has a factor
    }
    std::sort(terms.begin(), terms.end(), [](const YFactor& a, const YFactor& b) {
        return std::pair{a.i, a.k} < std::pair{b.i, b.k};
    });
    return AExponent{std::move(terms)};
}

Sl2Monomial beta_project(const YMonomial& m, int i) {
    std::vector<std::pair<int, int>> f;
    for (const auto& x : m.factors())
        if (x.i == i) f.emplace_back(x.k, x.e);
    return Sl2Monomial(std::move(f));
}

}  // namespace snakechar
