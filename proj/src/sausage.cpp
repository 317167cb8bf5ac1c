#include "rrg/sausage.hpp"

#include <algorithm>
#include <stdexcept>

#include "rrg/metrics.hpp"

namespace rrg {

FMap::FMap(int d, int l) : d_(d), l_(l) {
    if (d < 3 || l < 1) throw std::invalid_argument("FMap: need d >= 3 and l >= 1");
    values_.assign(std::size_t(l) * std::size_t(d - 2), Zero);
}

FMap::FMap(int d, int l, const std::string& text) : FMap(d, l) {
    if (int(text.size()) != l * (d - 2))
        throw std::invalid_argument("FMap: text length must be l*(d-2)");
    std::size_t k = 0;
    for (int i = 1; i <= l; ++i)
        for (int j = d - 1; j >= 2; --j) {
            char c = text[k++];
            Sign s = c == '+' ? Plus : c == '0' ? Zero : c == '-' ? Minus : throw std::invalid_argument("FMap: bad sign character");
            set(i, j, s);
        }
}

FMap FMap::constant(int d, int l, Sign s) {
    FMap f(d, l);
    std::fill(f.values_.begin(), f.values_.end(), s);
    return f;
}

FMap FMap::plus_prime(int d, int l) {
    FMap f = constant(d, l, Plus);
    f.set(1, d - 1, Zero);
    return f;
}

int FMap::index(int i, int j) const {
    if (i < 1 || i > l_ || j < 2 || j > d_ - 1) throw std::out_of_range("FMap: index");
    return (i - 1) * (d_ - 2) + (j - 2);
}

FMap::Sign FMap::at(int i, int j) const { return Sign(values_[std::size_t(index(i, j))]); }

void FMap::set(int i, int j, Sign s) { values_[std::size_t(index(i, j))] = s; }

std::string FMap::text() const {
    std::string out;
    for (int i = 1; i <= l_; ++i)
        for (int j = d_ - 1; j >= 2; --j)
            out.push_back(at(i, j) == Plus ? '+' : at(i, j) == Zero ? '0' : '-');
    return out;
}

bool FMap::leq(const FMap& other) const {
    if (d_ != other.d_ || l_ != other.l_) throw std::invalid_argument("FMap::leq: shape mismatch");
    for (std::size_t k = 0; k < values_.size(); ++k)
        if (values_[k] != Zero && values_[k] != other.values_[k]) return false;
    return true;
}

FMap FMap::inv() const {
    FMap g(d_, l_);
    for (int i = 1; i <= l_; ++i)
        for (int j = 2; j <= d_ - 1; ++j)
            g.set(i, j, Sign(-at(l_ + 1 - i, d_ + 1 - j)));
    return g;
}

std::vector<FMap> FMap::all(int d, int l) {
    int cells = l * (d - 2);
    std::vector<FMap> out;
    std::string text(std::size_t(cells), '+');
    const char alphabet[3] = {'+', '0', '-'};
    std::vector<int> digit(std::size_t(cells), 0);
    while (true) {
        for (int k = 0; k < cells; ++k) text[std::size_t(k)] = alphabet[digit[std::size_t(k)]];
        out.emplace_back(d, l, text);
        int k = cells - 1;
        while (k >= 0 && digit[std::size_t(k)] == 2) digit[std::size_t(k--)] = 0;
        if (k < 0) break;
        ++digit[std::size_t(k)];
    }
    return out;
}

Sausage build_sausage(int d, int l, const FMap& f) {
    if (f.d() != d || f.l() != l) throw std::invalid_argument("build_sausage: f shape mismatch");
    Sausage s;
    s.d = d;
    s.l = l;
    s.f = f;

    int next = 0;
    auto fresh_block = [&](int size) {
        std::vector<int> ids(static_cast<std::size_t>(size));
        for (int& x : ids) x = next++;
        return ids;
    };

    for (int i = 0; i < l; ++i) s.t_plus.push_back(fresh_block(d));
    for (int i = 0; i < l; ++i) s.t_minus.push_back(fresh_block(d));
    s.t_l = fresh_block(d - 1);
    s.t_r = fresh_block(d - 1);
    s.s_l = next++;
    s.t_l_sink = next++;
    s.s_r = next++;
    s.t_r_sink = next++;

    std::vector<Arc> arcs;
    auto tournament = [&](const std::vector<int>& block) {
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b)
                arcs.emplace_back(block[a], block[b]);
    };
    for (int i = 0; i < l; ++i) {
        tournament(s.t_plus[std::size_t(i)]);
        tournament(s.t_minus[std::size_t(i)]);
    }
    tournament(s.t_l);
    tournament(s.t_r);

    for (int x : s.t_l) {
        arcs.emplace_back(s.s_l, x);
        arcs.emplace_back(x, s.t_l_sink);
    }
    for (int x : s.t_r) {
        arcs.emplace_back(s.s_r, x);
        arcs.emplace_back(x, s.t_r_sink);
    }

    auto vp = [&](int i, int j) { return s.t_plus[std::size_t(i - 1)][std::size_t(j - 1)]; };
    auto vm = [&](int i, int j) { return s.t_minus[std::size_t(i - 1)][std::size_t(j - 1)]; };

    arcs.emplace_back(vp(1, d), s.s_l);
    arcs.emplace_back(s.t_l_sink, vm(1, 1));
    arcs.emplace_back(vm(l, d), s.s_r);
    arcs.emplace_back(s.t_r_sink, vp(l, 1));

    for (int i = 1; i <= l - 1; ++i) {
        arcs.emplace_back(vp(i + 1, d), vp(i, 1));
        arcs.emplace_back(vm(i, d), vm(i + 1, 1));
    }

    for (int i = 1; i <= l; ++i)
        for (int j = 2; j <= d - 1; ++j) {
            if (f.at(i, j) == FMap::Minus) arcs.emplace_back(vp(i, j), vm(i, d + 1 - j));
            if (f.at(i, j) == FMap::Plus) arcs.emplace_back(vm(i, d + 1 - j), vp(i, j));
        }

    s.digraph = Digraph(next, arcs);

    // degree law: total degree d except d-1 exactly at the 0-cells of f
    for (int v = 0; v < next; ++v) {
        int deg = s.digraph.total_degree(v);
        if (deg != d && deg != d - 1)
            throw std::logic_error("build_sausage: degree invariant broken at " + s.name_of(v));
    }
    for (int i = 1; i <= l; ++i)
        for (int j = 2; j <= d - 1; ++j) {
            bool zero = f.at(i, j) == FMap::Zero;
            if ((s.digraph.total_degree(vp(i, j)) == d - 1) != zero ||
                (s.digraph.total_degree(vm(i, d + 1 - j)) == d - 1) != zero)
                throw std::logic_error("build_sausage: degree-(d-1) set does not match f");
        }
    return s;
}

std::string Sausage::name_of(int v) const {
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < d; ++j) {
            if (t_plus[std::size_t(i)][std::size_t(j)] == v)
                return "v" + std::to_string(j + 1) + "(T+^" + std::to_string(i + 1) + ")";
            if (t_minus[std::size_t(i)][std::size_t(j)] == v)
                return "v" + std::to_string(j + 1) + "(T-^" + std::to_string(i + 1) + ")";
        }
    for (std::size_t j = 0; j < t_l.size(); ++j) {
        if (t_l[j] == v) return "v" + std::to_string(j + 1) + "(T_l)";
        if (t_r[j] == v) return "v" + std::to_string(j + 1) + "(T_r)";
    }
    if (v == s_l) return "s_l";
    if (v == t_l_sink) return "t_l";
    if (v == s_r) return "s_r";
    if (v == t_r_sink) return "t_r";
    return "?" + std::to_string(v);
}

int hom_count_formula(const FMap& f, const FMap& f_prime) {
    if (f.d() != f_prime.d())
        throw std::invalid_argument("hom_count_formula: different d");
    if (f.l() != f_prime.l()) return 0;
    bool straight = f.leq(f_prime);
    bool flipped = f.inv().leq(f_prime);
    if (straight && flipped) return 2;
    if (straight || flipped) return 1;
    return 0;
}

Sausage family_f1(int d, int l) {
    if (l < 1) throw std::invalid_argument("family_f1: l >= 1");
    return build_sausage(d, l, FMap::constant(d, l, FMap::Plus));
}

SausageIndicator family_f2(int d, int l) {
    if (l < 2) throw std::invalid_argument("family_f2: l >= 2");
    SausageIndicator out;
    out.sausage = build_sausage(d, l, FMap::plus_prime(d, l));
    // the two total-degree-(d-1) vertices of S(d,l,+')
    out.u = out.sausage.t_plus[0][std::size_t(d - 2)];   // v_{d-1}(T_+^1)
    out.v = out.sausage.t_minus[0][1];                   // v_2(T_-^1)

    // Orientation rule: (in, out) = (u, v) when every directed path from v
    // back to u has length >= 3; otherwise (v, u); at least one side must
    // pass.
    const Digraph& dg = out.sausage.digraph;
    auto min_cycle_free_path = [&](int from, int to) {
        auto len = directed_dist(dg, from, to);
        return !len || *len >= 3;
    };
    if (min_cycle_free_path(out.v, out.u))
        out.indicator = Indicator(dg, out.u, out.v);
    else if (min_cycle_free_path(out.u, out.v))
        out.indicator = Indicator(dg, out.v, out.u);
    else
        throw std::logic_error("family_f2: neither orientation satisfies the path condition");
    return out;
}

} // namespace rrg
