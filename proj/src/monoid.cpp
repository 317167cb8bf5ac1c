#include "rrg/monoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "rrg/codec.hpp"

namespace rrg {

namespace {

std::vector<int> closure(const std::vector<std::vector<int>>& table, int identity,
                         const std::vector<int>& seed) {
    std::set<int> got{identity};
    got.insert(seed.begin(), seed.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(got.begin(), got.end());
        for (int a : cur)
            for (int b : cur)
                if (got.insert(table[std::size_t(a)][std::size_t(b)]).second) grew = true;
    }
    return {got.begin(), got.end()};
}

} // namespace

Monoid::Monoid(std::vector<std::vector<int>> table, int identity,
               std::optional<std::vector<int>> generators)
    : n_(int(table.size())), identity_(identity), table_(std::move(table)),
      generators_(std::move(generators)) {
    if (n_ == 0) throw std::invalid_argument("Monoid: empty table");
    for (const auto& row : table_) {
        if (int(row.size()) != n_) throw std::invalid_argument("Monoid: table not square");
        for (int x : row)
            if (x < 0 || x >= n_) throw std::invalid_argument("Monoid: table entry out of range");
    }
    if (identity_ < 0 || identity_ >= n_)
        throw std::invalid_argument("Monoid: identity out of range");
    for (int x = 0; x < n_; ++x)
        if (product(identity_, x) != x || product(x, identity_) != x)
            throw std::invalid_argument("Monoid: identity law fails");
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (product(product(a, b), c) != product(a, product(b, c)))
                    throw std::invalid_argument("Monoid: not associative");
    if (generators_) {
        for (int g : *generators_)
            if (g < 0 || g >= n_) throw std::invalid_argument("Monoid: generator out of range");
        if (int(closure(table_, identity_, *generators_).size()) != n_)
            throw std::invalid_argument("Monoid: generators do not generate");
    }
    unit_.assign(std::size_t(n_), false);
    for (int g = 0; g < n_; ++g)
        for (int h = 0; h < n_; ++h)
            if (product(g, h) == identity_) unit_[std::size_t(g)] = true;
}

bool Monoid::is_group() const {
    for (int x = 0; x < n_; ++x)
        if (!unit_[std::size_t(x)]) return false;
    return true;
}

std::vector<int> Monoid::default_generators() const {
    if (n_ == 1) return {identity_};
    std::vector<int> gens;
    for (int x = 0; x < n_; ++x)
        if (x != identity_) gens.push_back(x);
    return gens;
}

std::vector<int> Monoid::left_ideal(int x) const {
    std::set<int> got;
    for (int m = 0; m < n_; ++m) got.insert(product(m, x));
    return {got.begin(), got.end()};
}

ClassStructure class_structure(const Monoid& m) {
    int n = m.size();
    ClassStructure cs;

    std::vector<std::vector<int>> ideals(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) ideals[std::size_t(v)] = m.left_ideal(v);

    // end classes: Mv = Mw, ids in order of smallest member
    cs.end_class.assign(std::size_t(n), -1);
    for (int v = 0; v < n; ++v) {
        if (cs.end_class[std::size_t(v)] != -1) continue;
        int id = int(cs.end_members.size());
        cs.end_members.emplace_back();
        for (int w = v; w < n; ++w)
            if (cs.end_class[std::size_t(w)] == -1 && ideals[std::size_t(w)] == ideals[std::size_t(v)]) {
                cs.end_class[std::size_t(w)] = id;
                cs.end_members.back().push_back(w);
            }
    }

    // aut classes: orbits of left multiplication by units
    cs.aut_class.assign(std::size_t(n), -1);
    for (int v = 0; v < n; ++v) {
        if (cs.aut_class[std::size_t(v)] != -1) continue;
        int id = int(cs.aut_members.size());
        cs.aut_members.emplace_back();
        std::vector<int> orbit;
        for (int g = 0; g < n; ++g)
            if (m.is_unit(g)) orbit.push_back(m.product(g, v));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        for (int w : orbit) {
            cs.aut_class[std::size_t(w)] = id;
            cs.aut_members.back().push_back(w);
        }
    }

    int k = cs.end_class_count();
    cs.leq.assign(std::size_t(k), std::vector<bool>(std::size_t(k), false));
    for (int v = 0; v < n; ++v)
        for (int w : ideals[std::size_t(v)])
            cs.leq[std::size_t(cs.end_class[std::size_t(v)])][std::size_t(cs.end_class[std::size_t(w)])] = true;

    // components of the comparability graph
    cs.component.assign(std::size_t(k), -1);
    int next = 0;
    for (int s = 0; s < k; ++s) {
        if (cs.component[std::size_t(s)] != -1) continue;
        std::vector<int> stack{s};
        cs.component[std::size_t(s)] = next;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b = 0; b < k; ++b)
                if (cs.component[std::size_t(b)] == -1 &&
                    (cs.leq[std::size_t(a)][std::size_t(b)] || cs.leq[std::size_t(b)][std::size_t(a)])) {
                    cs.component[std::size_t(b)] = next;
                    stack.push_back(b);
                }
        }
        ++next;
    }

    cs.unit_end_class = cs.end_class[std::size_t(m.identity())];
    cs.unit_aut_class = cs.aut_class[std::size_t(m.identity())];
    return cs;
}

RelSystem cayley_col(const Monoid& m, const std::vector<int>& generators) {
    if (generators.empty()) throw std::invalid_argument("cayley_col: empty generating set");
    {
        std::vector<int> gens = generators;
        Monoid check(m.table(), m.identity(), gens);  // validates generation
    }
    std::vector<std::string> colours;
    std::map<std::string, std::vector<Arc>> arcs;
    for (int c : generators) {
        std::string name = std::to_string(c);
        if (std::find(colours.begin(), colours.end(), name) != colours.end())
            throw std::invalid_argument("cayley_col: duplicate generator");
        colours.push_back(name);
        auto& list = arcs[name];
        for (int u = 0; u < m.size(); ++u) list.emplace_back(u, m.product(u, c));
    }
    return RelSystem(m.size(), colours, arcs);
}

RelSystem cayley_col(const Monoid& m) { return cayley_col(m, m.default_generators()); }

namespace {

/// Isomorphism-invariant profile used to prune the bijection search.
std::vector<int> element_profile(const Monoid& m, int x) {
    int n = m.size();
    std::vector<int> p;
    p.push_back(x == m.identity() ? 1 : 0);
    p.push_back(m.product(x, x) == x ? 1 : 0);
    p.push_back(m.is_unit(x) ? 1 : 0);
    std::set<int> left, right;
    for (int y = 0; y < n; ++y) {
        left.insert(m.product(x, y));
        right.insert(m.product(y, x));
    }
    p.push_back(int(left.size()));
    p.push_back(int(right.size()));
    // index and period of x
    std::vector<int> seen_at(std::size_t(n), -1);
    int cur = m.identity(), step = 0, index = 0, period = 0;
    while (true) {
        if (seen_at[std::size_t(cur)] >= 0) {
            index = seen_at[std::size_t(cur)];
            period = step - index;
            break;
        }
        seen_at[std::size_t(cur)] = step;
        cur = m.product(cur, x);
        ++step;
    }
    p.push_back(index);
    p.push_back(period);
    return p;
}

bool iso_dfs(const Monoid& a, const Monoid& b, std::vector<int>& f, std::vector<bool>& used, int next) {
    int n = a.size();
    if (next == n) return true;
    if (f[std::size_t(next)] != -1) return iso_dfs(a, b, f, used, next + 1);
    for (int img = 0; img < n; ++img) {
        if (used[std::size_t(img)]) continue;
        if (element_profile(a, next) != element_profile(b, img)) continue;
        f[std::size_t(next)] = img;
        used[std::size_t(img)] = true;
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            if (f[std::size_t(x)] == -1) continue;
            for (int y = 0; y < n && ok; ++y) {
                if (f[std::size_t(y)] == -1) continue;
                int p = f[std::size_t(a.product(x, y))];
                if (p != -1 && p != b.product(f[std::size_t(x)], f[std::size_t(y)])) ok = false;
            }
        }
        if (ok && iso_dfs(a, b, f, used, next + 1)) return true;
        f[std::size_t(next)] = -1;
        used[std::size_t(img)] = false;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> monoid_iso(const Monoid& a, const Monoid& b) {
    if (a.size() != b.size()) return std::nullopt;
    std::vector<int> f(std::size_t(a.size()), -1);
    std::vector<bool> used(std::size_t(a.size()), false);
    f[std::size_t(a.identity())] = b.identity();
    used[std::size_t(b.identity())] = true;
    if (!iso_dfs(a, b, f, used, 0)) return std::nullopt;
    return f;
}

std::vector<Monoid> all_monoid_tables(int n) {
    std::vector<Monoid> out;
    std::vector<std::vector<int>> table(std::size_t(n), std::vector<int>(std::size_t(n), 0));
    // cells in row-major order; identity candidates tried per completed table
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cells.emplace_back(i, j);

    auto partial_associative = [&](int filled) {
        // check triples whose products are all determined by the filled prefix
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int ab = table[std::size_t(a)][std::size_t(b)];
                if (a * n + b >= filled) continue;
                for (int c = 0; c < n; ++c) {
                    if (b * n + c >= filled) continue;
                    int bc = table[std::size_t(b)][std::size_t(c)];
                    if (ab * n + c >= filled || a * n + bc >= filled) continue;
                    if (table[std::size_t(ab)][std::size_t(c)] != table[std::size_t(a)][std::size_t(bc)])
                        return false;
                }
            }
        return true;
    };

    std::function<void(int)> rec = [&](int k) {
        if (k == n * n) {
            for (int e = 0; e < n; ++e) {
                bool id_ok = true;
                for (int x = 0; x < n && id_ok; ++x)
                    id_ok = table[std::size_t(e)][std::size_t(x)] == x &&
                            table[std::size_t(x)][std::size_t(e)] == x;
                if (id_ok) {
                    out.emplace_back(table, e);
                    break;  // a monoid has a unique identity
                }
            }
            return;
        }
        auto [i, j] = cells[std::size_t(k)];
        for (int v = 0; v < n; ++v) {
            table[std::size_t(i)][std::size_t(j)] = v;
            if (partial_associative(k + 1)) rec(k + 1);
        }
        table[std::size_t(i)][std::size_t(j)] = 0;
    };
    rec(0);
    return out;
}

std::string emit_monoid(const Monoid& m) {
    nlohmann::json j;
    j["n"] = m.size();
    j["identity"] = m.identity();
    j["table"] = m.table();
    if (m.generators()) j["generators"] = *m.generators();
    return j.dump();
}

Monoid parse_monoid(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(ParseError::Kind::BadJson, e.what());
    }
    try {
        auto table = j.at("table").get<std::vector<std::vector<int>>>();
        int identity = j.at("identity").get<int>();
        if (j.at("n").get<int>() != int(table.size()))
            throw ParseError(ParseError::Kind::BadJson, "monoid: n does not match table");
        std::optional<std::vector<int>> gens;
        if (j.contains("generators")) gens = j["generators"].get<std::vector<int>>();
        return Monoid(std::move(table), identity, std::move(gens));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(ParseError::Kind::BadJson, e.what());
    }
}

} // namespace rrg
