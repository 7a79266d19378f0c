#include "snakechar/sl2.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <stdexcept>

namespace snakechar {

Sl2Monomial::Sl2Monomial(std::vector<std::pair<int, int>> factors) : f_(std::move(factors)) {
    std::sort(f_.begin(), f_.end());
    std::size_t w = 0;
    for (std::size_t rd = 0; rd < f_.size();) {
        int k = f_[rd].first, e = 0;
        while (rd < f_.size() && f_[rd].first == k) e += f_[rd++].second;
        if (e != 0) f_[w++] = {k, e};
    }
    f_.resize(w);
}

int Sl2Monomial::exp(int k) const {
    auto it = std::lower_bound(f_.begin(), f_.end(), std::pair<int, int>{k, INT_MIN});
    return (it != f_.end() && it->first == k) ? it->second : 0;
}

bool Sl2Monomial::dominant() const {
    return std::all_of(f_.begin(), f_.end(), [](auto& p) { return p.second > 0; });
}

Sl2Monomial Sl2Monomial::times(int k, int e) const {
    auto f = f_;
    f.emplace_back(k, e);
    return Sl2Monomial(std::move(f));
}

Sl2Monomial Sl2Monomial::operator*(const Sl2Monomial& o) const {
    auto f = f_;
    f.insert(f.end(), o.f_.begin(), o.f_.end());
    return Sl2Monomial(std::move(f));
}

namespace {

// General position: one string contains the other, or their union is not a
// string (not an unbroken same-parity progression).
bool general_position(const QString& s, const QString& t) {
    const int slo = s.center - s.length + 1, shi = s.center + s.length - 1;
    const int tlo = t.center - t.length + 1, thi = t.center + t.length - 1;
    if ((slo <= tlo && thi <= shi) || (tlo <= slo && shi <= thi)) return true;
    if (((slo ^ tlo) & 1) != 0) return true;         // different parity sublattices
    return shi + 2 < tlo || thi + 2 < slo;           // union has a gap
}

}  // namespace

std::vector<QString> qstring_decompose(const Sl2Monomial& M) {
    if (!M.dominant()) throw std::domain_error("qstring_decompose: monomial not dominant");
    std::vector<std::pair<int, int>> left(M.factors());
    std::vector<QString> out;
    while (!left.empty()) {
        // grow a string downward from the largest remaining index
        int top = left.back().first;
        int len = 0, k = top;
        while (true) {
            auto it = std::lower_bound(left.begin(), left.end(),
                                       std::pair<int, int>{k, INT_MIN});
            if (it == left.end() || it->first != k || it->second <= 0) break;
            if (--it->second == 0) left.erase(it);
            ++len;
            k -= 2;
        }
        out.push_back({top - len + 1, len});
    }
    for (std::size_t a = 0; a < out.size(); ++a)
        for (std::size_t b = a + 1; b < out.size(); ++b)
            assert(general_position(out[a], out[b]));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// (length+1) monomials of the evaluation module on one string: start from the
// full product of string variables and repeatedly apply A^{-1} at the top.
std::vector<Sl2Monomial> string_char(const QString& s) {
    std::vector<std::pair<int, int>> base;
    for (int t = 0; t < s.length; ++t) base.emplace_back(s.center - s.length + 1 + 2 * t, 1);
    std::vector<Sl2Monomial> out{Sl2Monomial(std::move(base))};
    for (int t = 0; t < s.length; ++t) {
        const int l = s.center + s.length + 1 - 2 * t;  // A_{l-1}^{-1} = Y_{l-2}^{-1} Y_l^{-1}
        out.push_back(out.back().times(l - 2, -1).times(l, -1));
    }
    return out;
}

}  // namespace

std::vector<Sl2Monomial> sl2_simple_qchar(const Sl2Monomial& M) {
    std::vector<Sl2Monomial> out{Sl2Monomial{}};
    for (const QString& s : qstring_decompose(M)) {
        std::vector<Sl2Monomial> next;
        next.reserve(out.size() * (s.length + 1));
        for (const auto& x : out)
            for (const auto& y : string_char(s)) next.push_back(x * y);
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Sl2Monomial> sl2_weyl_qchar(const Sl2Monomial& M) {
    if (!M.dominant()) throw std::domain_error("sl2_weyl_qchar: monomial not dominant");
    std::vector<Sl2Monomial> out{Sl2Monomial{}};
    for (const auto& [k, e] : M.factors())
        for (int c = 0; c < e; ++c) {
            std::vector<Sl2Monomial> next;
            next.reserve(out.size() * 2);
            for (const auto& x : out) {
                next.push_back(x.times(k, 1));
                next.push_back(x.times(k + 2, -1));
            }
            out = std::move(next);
        }
    std::sort(out.begin(), out.end());
    return out;
}

Sl2Case sl2_case(const Sl2Monomial& m, const Sl2Monomial& M, int a) {
    const auto simple = sl2_simple_qchar(M);
    if (!std::binary_search(simple.begin(), simple.end(), m))
        throw std::domain_error("sl2_case: monomial not in the simple character");
    const auto weyl = sl2_weyl_qchar(M);
    const auto in = [](const std::vector<Sl2Monomial>& v, const Sl2Monomial& x) {
        return std::binary_search(v.begin(), v.end(), x);
    };
    const Sl2Monomial down = m.times(a, -1).times(a + 2, -1);  // m A_{a+1}^{-1}
    const Sl2Monomial up = m.times(a - 2, 1).times(a, 1);      // m A_{a-1}
    const int ua = m.exp(a);

    if (ua == 1) {
        if (m.exp(a + 2) == 0) return in(simple, down) ? Sl2Case::I_lowerable : Sl2Case::inert;
        return in(weyl, down) && !in(simple, down) ? Sl2Case::II_weyl_only : Sl2Case::inert;
    }
    if (ua == -1) {
        if (m.exp(a - 2) == 0) return in(simple, up) ? Sl2Case::raiseable : Sl2Case::inert;
        return in(weyl, up) && !in(simple, up) ? Sl2Case::raise_weyl_only : Sl2Case::inert;
    }
    if (ua == 0) return !in(weyl, down) && !in(weyl, up) ? Sl2Case::III_neither : Sl2Case::inert;
    return Sl2Case::inert;  // |u_a| > 1 cannot happen for thin M
}

}  // namespace snakechar
