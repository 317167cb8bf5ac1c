#include "rrg/homogenize.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rrg/homsearch.hpp"
#include "rrg/metrics.hpp"

namespace rrg {

namespace {

std::logic_error stage_error(const std::string& what) {
    return std::logic_error("homogenize: " + what);
}

StagePoset poset_from_endos(const RelSystem& system, const std::vector<std::vector<int>>& endos) {
    int n = system.n();
    StagePoset p;
    std::vector<std::vector<bool>> reach(std::size_t(n), std::vector<bool>(std::size_t(n), false));
    for (const auto& f : endos)
        for (int v = 0; v < n; ++v) reach[std::size_t(v)][std::size_t(f[std::size_t(v)])] = true;

    p.end_class.assign(std::size_t(n), -1);
    for (int v = 0; v < n; ++v) {
        if (p.end_class[std::size_t(v)] != -1) continue;
        int id = int(p.members.size());
        p.members.emplace_back();
        for (int w = v; w < n; ++w)
            if (p.end_class[std::size_t(w)] == -1 && reach[std::size_t(v)][std::size_t(w)] &&
                reach[std::size_t(w)][std::size_t(v)]) {
                p.end_class[std::size_t(w)] = id;
                p.members.back().push_back(w);
            }
    }
    int k = p.class_count();
    p.leq.assign(std::size_t(k), std::vector<bool>(std::size_t(k), false));
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (reach[std::size_t(v)][std::size_t(w)])
                p.leq[std::size_t(p.end_class[std::size_t(v)])][std::size_t(p.end_class[std::size_t(w)])] =
                    true;

    p.component.assign(std::size_t(k), -1);
    int next = 0;
    for (int s = 0; s < k; ++s) {
        if (p.component[std::size_t(s)] != -1) continue;
        std::vector<int> stack{s};
        p.component[std::size_t(s)] = next;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b = 0; b < k; ++b)
                if (p.component[std::size_t(b)] == -1 &&
                    (p.leq[std::size_t(a)][std::size_t(b)] || p.leq[std::size_t(b)][std::size_t(a)])) {
                    p.component[std::size_t(b)] = next;
                    stack.push_back(b);
                }
        }
        ++next;
    }

    p.degree.assign(std::size_t(k), -1);
    for (int c = 0; c < k; ++c) {
        int deg = system.total_degree(p.members[std::size_t(c)].front());
        bool constant = true;
        for (int v : p.members[std::size_t(c)])
            if (system.total_degree(v) != deg) constant = false;
        p.degree[std::size_t(c)] = constant ? deg : -1;
    }
    return p;
}

std::vector<std::vector<int>> sorted_maps(std::vector<std::vector<int>> maps) {
    std::sort(maps.begin(), maps.end());
    return maps;
}

} // namespace

bool StagedSystem::degree_constant_per_class() const {
    for (int d : poset.degree)
        if (d < 0) return false;
    return true;
}

bool StagedSystem::degree_constant_per_component() const {
    if (!degree_constant_per_class()) return false;
    std::map<int, int> comp_deg;
    for (int c = 0; c < poset.class_count(); ++c) {
        auto [it, fresh] = comp_deg.emplace(poset.component[std::size_t(c)], poset.degree[std::size_t(c)]);
        if (!fresh && it->second != poset.degree[std::size_t(c)]) return false;
    }
    return true;
}

bool StagedSystem::degree_constant() const {
    for (int v = 1; v < system.n(); ++v)
        if (system.total_degree(v) != system.total_degree(0)) return false;
    return true;
}

bool StagedSystem::has_increasing_degree_property() const {
    if (!degree_constant_per_class()) return false;
    for (int a = 0; a < poset.class_count(); ++a)
        for (int b = 0; b < poset.class_count(); ++b)
            if (poset.leq[std::size_t(a)][std::size_t(b)] &&
                poset.degree[std::size_t(a)] > poset.degree[std::size_t(b)])
                return false;
    return true;
}

StagedSystem stage_d1(const Monoid& m, const std::vector<int>& generators) {
    StagedSystem s;
    s.system = cayley_col(m, generators);
    s.stage = Stage::D1;
    std::vector<std::vector<int>> endos;
    for (int g = 0; g < m.size(); ++g) {
        std::vector<int> f(std::size_t(m.size()));
        for (int v = 0; v < m.size(); ++v) f[std::size_t(v)] = m.product(g, v);
        endos.push_back(std::move(f));
    }
    s.endos = sorted_maps(std::move(endos));
    s.poset = poset_from_endos(s.system, s.endos);
    return s;
}

StagedSystem stage_d1(const Monoid& m) { return stage_d1(m, m.default_generators()); }

std::map<int, int> choose_step1_k(const StagedSystem& d1, const Monoid& m) {
    ClassStructure cs = class_structure(m);
    int n = m.size();
    auto deg1 = [&](int v) { return d1.system.total_degree(v); };

    // per-aut-class degree (automorphism-invariant, so constant)
    std::vector<int> aut_deg(std::size_t(cs.aut_class_count()));
    for (int a = 0; a < cs.aut_class_count(); ++a)
        aut_deg[std::size_t(a)] = deg1(cs.aut_members[std::size_t(a)].front());

    // base choice per aut class: lift everyone in an end class to its max
    std::map<int, int> k;
    std::vector<int> class_max(std::size_t(cs.end_class_count()), 0);
    for (int e = 0; e < cs.end_class_count(); ++e)
        for (int v : cs.end_members[std::size_t(e)])
            class_max[std::size_t(e)] =
                std::max(class_max[std::size_t(e)], deg1(v));
    for (int a = 0; a < cs.aut_class_count(); ++a) {
        if (a == cs.unit_aut_class) continue;
        int e = cs.end_class[std::size_t(cs.aut_members[std::size_t(a)].front())];
        k[a] = class_max[std::size_t(e)] - aut_deg[std::size_t(a)] + 1;
    }

    // linear extension of the non-unit end classes, bottom-up, least member
    // first among the minimal ones
    std::vector<int> order;
    std::vector<bool> placed(std::size_t(cs.end_class_count()), false);
    placed[std::size_t(cs.unit_end_class)] = true;
    while (int(order.size()) + 1 < cs.end_class_count()) {
        int pick = -1;
        for (int e = 0; e < cs.end_class_count(); ++e) {
            if (placed[std::size_t(e)]) continue;
            bool minimal = true;
            for (int f = 0; f < cs.end_class_count(); ++f)
                if (!placed[std::size_t(f)] && f != e && cs.leq[std::size_t(f)][std::size_t(e)])
                    minimal = false;
            if (minimal && (pick == -1 || cs.end_members[std::size_t(e)].front() <
                                              cs.end_members[std::size_t(pick)].front()))
                pick = e;
        }
        if (pick == -1) throw stage_error("class order is not a partial order");
        placed[std::size_t(pick)] = true;
        order.push_back(pick);
    }

    // fix-up pass: raising a whole end class by delta raises its relative
    // degree by (aut classes in it) * delta against everything below it
    auto aut_classes_of = [&](int e) {
        std::set<int> got;
        for (int v : cs.end_members[std::size_t(e)]) got.insert(cs.aut_class[std::size_t(v)]);
        return std::vector<int>(got.begin(), got.end());
    };
    auto t_value = [&](int e) {
        // class degree up to terms shared by every non-unit class
        int s = 0;
        for (int f : order)
            if (cs.leq[std::size_t(f)][std::size_t(e)])
                for (int a : aut_classes_of(f)) s += k.at(a);
        return class_max[std::size_t(e)] + s;
    };
    for (int e : order) {
        int deficit = 0;
        for (int f : order)
            if (f != e && cs.leq[std::size_t(f)][std::size_t(e)])
                deficit = std::max(deficit, t_value(f) - t_value(e));
        if (deficit > 0) {
            auto acs = aut_classes_of(e);
            int delta = (deficit + int(acs.size()) - 1) / int(acs.size());
            for (int a : acs) k[a] += delta;
        }
    }

    // units last: their degree is untouched by the unit-class multiplicity,
    // while every non-unit class gains twice it
    k[cs.unit_aut_class] = 1;
    {
        int units_deg = 0;
        for (int v = 0; v < n; ++v)
            if (!m.is_unit(v)) units_deg += k.at(cs.aut_class[std::size_t(v)]);
        units_deg += deg1(m.identity());

        auto min_nonunit_deg = [&]() {
            int best = -1;
            for (int e : order) {
                int sum_all = 0;
                for (auto& [a, ka] : k) sum_all += ka;
                int down = k.at(cs.unit_aut_class);
                for (int f : order)
                    if (cs.leq[std::size_t(f)][std::size_t(e)])
                        for (int a : aut_classes_of(f)) down += k.at(a);
                int deg = class_max[std::size_t(e)] + 1 + sum_all + down;
                if (best < 0 || deg < best) best = deg;
            }
            return best;
        };
        while (min_nonunit_deg() < units_deg) {
            int gap = units_deg - min_nonunit_deg();
            k[cs.unit_aut_class] += (gap + 1) / 2;
        }
    }
    return k;
}

StagedSystem step1(const StagedSystem& d1, const Monoid& m, const std::map<int, int>& k) {
    if (m.is_group()) throw std::invalid_argument("step1: M must not be a group");
    ClassStructure cs = class_structure(m);
    for (int a = 0; a < cs.aut_class_count(); ++a) {
        auto it = k.find(a);
        if (it == k.end() || it->second < 1)
            throw std::invalid_argument("step1: k must be positive on every aut class");
    }
    int n = m.size();

    // vertex layout: V(D1), then the pads P_v grouped by vertex, then z
    int next = n;
    std::map<int, std::vector<int>> pad;  // non-unit vertex -> its new vertices
    for (int v = 0; v < n; ++v) {
        if (m.is_unit(v)) continue;
        int ka = k.at(cs.aut_class[std::size_t(v)]);
        for (int i = 0; i < ka; ++i) pad[v].push_back(next++);
    }
    int z = next++;

    std::vector<std::string> colours = d1.system.colours();
    std::map<std::string, std::vector<Arc>> arcs;
    for (int c = 0; c < d1.system.colour_count(); ++c)
        arcs[colours[std::size_t(c)]] = d1.system.arcs(c);

    auto cls_leq = [&](int w, int v) {  // [w] <= [v] over end classes
        return cs.leq[std::size_t(cs.end_class[std::size_t(w)])]
                     [std::size_t(cs.end_class[std::size_t(v)])];
    };

    for (int a = 0; a < cs.aut_class_count(); ++a) {
        int ka = k.at(a);
        int w_rep = cs.aut_members[std::size_t(a)].front();
        for (int i = 1; i <= ka; ++i) {
            std::string main_c = "s1:" + std::to_string(a) + ":" + std::to_string(i);
            std::string prime_c = "s1:" + std::to_string(a) + "':" + std::to_string(i);
            colours.push_back(main_c);
            colours.push_back(prime_c);
            auto& main_arcs = arcs[main_c];
            auto& prime_arcs = arcs[prime_c];
            if (a == cs.unit_aut_class) {
                for (int v = 0; v < n; ++v)
                    if (!m.is_unit(v)) {
                        main_arcs.emplace_back(v, z);
                        prime_arcs.emplace_back(v, z);
                    }
            } else {
                for (int v = 0; v < n; ++v)
                    if (cls_leq(w_rep, v)) main_arcs.emplace_back(v, z);
                for (int v : cs.aut_members[std::size_t(a)])
                    main_arcs.emplace_back(v, pad.at(v)[std::size_t(i - 1)]);
                for (int v = 0; v < n; ++v)
                    if (!m.is_unit(v)) prime_arcs.emplace_back(v, z);
                for (int v : cs.aut_members[std::size_t(a)])
                    for (int u = 0; u < n; ++u)
                        if (m.is_unit(u)) prime_arcs.emplace_back(u, pad.at(v)[std::size_t(i - 1)]);
            }
        }
    }

    StagedSystem out;
    out.system = RelSystem(next, colours, arcs);
    out.stage = Stage::D2;

    // degree law of the construction, checked exactly
    {
        int sum_all = 0;
        for (auto& [a, ka] : k) sum_all += ka;
        long long sum_elements_nonunit = 0;
        for (int w = 0; w < n; ++w)
            if (!m.is_unit(w)) sum_elements_nonunit += k.at(cs.aut_class[std::size_t(w)]);
        for (int v = 0; v < n; ++v) {
            long long expect;
            if (m.is_unit(v)) {
                expect = d1.system.total_degree(v) + sum_elements_nonunit;
            } else {
                long long down = 0;
                for (int a = 0; a < cs.aut_class_count(); ++a)
                    if (cls_leq(cs.aut_members[std::size_t(a)].front(), v)) down += k.at(a);
                expect = d1.system.total_degree(v) + sum_all + down + k.at(cs.aut_class[std::size_t(v)]);
            }
            if (out.system.total_degree(v) != expect)
                throw stage_error("step1 degree law fails at vertex " + std::to_string(v));
        }
        long long units = 0;
        for (int v = 0; v < n; ++v)
            if (m.is_unit(v)) ++units;
        for (auto& [v, list] : pad)
            for (int x : list)
                if (out.system.total_degree(x) != units + 1)
                    throw stage_error("step1 new-vertex degree law fails");
        if (out.system.total_degree(z) < 2 * k.at(cs.unit_aut_class))
            throw stage_error("step1 z-degree law fails");
    }

    // transported endomorphisms
    for (const auto& f : d1.endos) {
        bool aut = is_bijective_map(f);
        std::vector<int> g(std::size_t(next), -1);
        for (int v = 0; v < n; ++v) g[std::size_t(v)] = f[std::size_t(v)];
        for (auto& [v, list] : pad)
            for (std::size_t i = 0; i < list.size(); ++i)
                g[std::size_t(list[i])] = aut ? pad.at(f[std::size_t(v)])[i] : z;
        g[std::size_t(z)] = z;
        out.endos.push_back(std::move(g));
    }
    out.endos = sorted_maps(std::move(out.endos));
    out.poset = poset_from_endos(out.system, out.endos);
    return out;
}

StagedSystem step2(const StagedSystem& d, const std::vector<int>& ideal_classes, int k,
                   const std::string& tag) {
    if (k < 1) throw std::invalid_argument("step2: k >= 1");
    if (!d.degree_constant_per_class())
        throw std::invalid_argument("step2: degree must be constant on end classes");
    std::set<int> ideal(ideal_classes.begin(), ideal_classes.end());
    for (int b : ideal)
        for (int a = 0; a < d.poset.class_count(); ++a)
            if (d.poset.leq[std::size_t(a)][std::size_t(b)] && !ideal.count(a))
                throw std::invalid_argument("step2: I is not an ideal");
    {
        std::set<int> degs;
        for (int c : ideal) degs.insert(d.poset.degree[std::size_t(c)]);
        if (degs.size() > 1)
            throw std::invalid_argument("step2: degree must be constant across I");
    }

    int n = d.system.n();
    auto in_ideal = [&](int v) { return ideal.count(d.poset.end_class[std::size_t(v)]) > 0; };

    int next = n;
    std::vector<std::vector<int>> pad(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        int size = in_ideal(v) ? k : 1;
        for (int i = 0; i < size; ++i) pad[std::size_t(v)].push_back(next++);
    }

    std::vector<std::string> colours = d.system.colours();
    std::map<std::string, std::vector<Arc>> arcs;
    for (int c = 0; c < d.system.colour_count(); ++c)
        arcs[colours[std::size_t(c)]] = d.system.arcs(c);

    for (int i = 0; i <= k; ++i) colours.push_back(tag + ":" + std::to_string(i));
    colours.push_back(tag + ":p");

    auto& zero_arcs = arcs[tag + ":0"];
    for (int v = 0; v < n; ++v)
        for (int x : pad[std::size_t(v)]) zero_arcs.emplace_back(v, x);
    for (int i = 1; i <= k; ++i) {
        auto& c_arcs = arcs[tag + ":" + std::to_string(i)];
        for (int v = 0; v < n; ++v)
            c_arcs.emplace_back(v, in_ideal(v) ? pad[std::size_t(v)][std::size_t(i - 1)]
                                               : pad[std::size_t(v)][0]);
    }
    auto& p_arcs = arcs[tag + ":p"];
    for (int v = 0; v < n; ++v)
        for (std::size_t i = 0; i < pad[std::size_t(v)].size(); ++i)
            for (std::size_t j = i; j < pad[std::size_t(v)].size(); ++j)
                p_arcs.emplace_back(pad[std::size_t(v)][i], pad[std::size_t(v)][j]);

    StagedSystem out;
    out.system = RelSystem(next, colours, arcs);
    out.stage = Stage::D2;

    for (int v = 0; v < n; ++v) {
        long long expect = d.system.total_degree(v) + (in_ideal(v) ? 2 * k : k + 1);
        if (out.system.total_degree(v) != expect)
            throw stage_error("step2 degree law fails at vertex " + std::to_string(v));
    }
    for (int v = 0; v < n; ++v)
        for (int x : pad[std::size_t(v)])
            if (out.system.total_degree(x) != k + 3)
                throw stage_error("step2 new-vertex degree law fails");

    for (const auto& f : d.endos) {
        std::vector<int> g(std::size_t(next), -1);
        for (int v = 0; v < n; ++v) g[std::size_t(v)] = f[std::size_t(v)];
        for (int v = 0; v < n; ++v) {
            int fv = f[std::size_t(v)];
            for (std::size_t i = 0; i < pad[std::size_t(v)].size(); ++i)
                g[std::size_t(pad[std::size_t(v)][i])] =
                    in_ideal(fv) ? pad[std::size_t(fv)][std::min(i, pad[std::size_t(fv)].size() - 1)]
                                 : pad[std::size_t(fv)][0];
        }
        out.endos.push_back(std::move(g));
    }
    out.endos = sorted_maps(std::move(out.endos));
    out.poset = poset_from_endos(out.system, out.endos);
    return out;
}

StagedSystem step3(const StagedSystem& d3) {
    if (!d3.degree_constant_per_component())
        throw std::invalid_argument("step3: degree must be constant per component");
    int n = d3.system.n();
    int delta_max = 0, delta_min = n > 0 ? d3.system.total_degree(0) : 0;
    for (int v = 0; v < n; ++v) {
        delta_max = std::max(delta_max, d3.system.total_degree(v));
        delta_min = std::min(delta_min, d3.system.total_degree(v));
    }

    std::vector<std::string> colours = d3.system.colours();
    std::map<std::string, std::vector<Arc>> arcs;
    for (int c = 0; c < d3.system.colour_count(); ++c) {
        auto list = d3.system.arcs(c);
        auto copy = list;
        for (auto& [u, v] : copy) {
            u += n;
            v += n;
        }
        list.insert(list.end(), copy.begin(), copy.end());
        arcs[colours[std::size_t(c)]] = std::move(list);
    }
    for (int c = delta_min; c <= delta_max; ++c) {
        std::string name = "s3:deg:" + std::to_string(c);
        colours.push_back(name);
        auto& list = arcs[name];
        for (int v = 0; v < n; ++v)
            if (d3.system.total_degree(v) <= c) list.emplace_back(v, v + n);
    }

    StagedSystem out;
    out.system = RelSystem(2 * n, colours, arcs);
    out.stage = Stage::D4;

    for (int v = 0; v < 2 * n; ++v)
        if (out.system.total_degree(v) != delta_max + 1)
            throw stage_error("step3 must give constant degree delta+1");

    for (const auto& f : d3.endos) {
        std::vector<int> g(std::size_t(2 * n));
        for (int v = 0; v < n; ++v) {
            g[std::size_t(v)] = f[std::size_t(v)];
            g[std::size_t(v + n)] = f[std::size_t(v)] + n;
        }
        out.endos.push_back(std::move(g));
    }
    out.endos = sorted_maps(std::move(out.endos));
    out.poset = poset_from_endos(out.system, out.endos);
    return out;
}

StagedSystem homogenize(const Monoid& m, HomogenizeTrace* trace) {
    auto note = [&](const std::string& line) {
        if (trace) trace->lines.push_back(line);
    };
    auto histogram = [](const RelSystem& s) {
        std::map<int, int> h;
        for (int v = 0; v < s.n(); ++v) ++h[s.total_degree(v)];
        std::string out;
        for (auto& [d, c] : h) out += std::to_string(d) + "x" + std::to_string(c) + " ";
        return out;
    };

    StagedSystem d1 = stage_d1(m);
    note("D1: n=" + std::to_string(d1.system.n()) + " degrees " + histogram(d1.system));
    if (m.is_group()) {
        if (!d1.degree_constant())
            throw stage_error("group Cayley system must be degree-constant");
        note("group: returning D1");
        return d1;
    }

    StagedSystem cur = step1(d1, m, choose_step1_k(d1, m));
    note("D2: n=" + std::to_string(cur.system.n()) + " degrees " + histogram(cur.system));
    if (!cur.degree_constant_per_class()) throw stage_error("step1 left a class non-constant");
    if (!cur.has_increasing_degree_property())
        throw stage_error("step1 violated the increasing degree property");

    int guard = 0;
    int step_tag = 0;
    while (!cur.degree_constant_per_component()) {
        if (++guard > cur.poset.class_count() + 64) throw stage_error("step2 loop did not terminate");

        // pick the non-constant component with the least representative
        int k0 = -1, least = -1;
        for (int c = 0; c < cur.poset.class_count(); ++c) {
            std::map<int, std::set<int>> comp_degs;
            for (int e = 0; e < cur.poset.class_count(); ++e)
                comp_degs[cur.poset.component[std::size_t(e)]].insert(cur.poset.degree[std::size_t(e)]);
            int comp = cur.poset.component[std::size_t(c)];
            if (comp_degs[comp].size() <= 1) continue;
            int rep = cur.poset.members[std::size_t(c)].front();
            if (k0 == -1 || rep < least) {
                k0 = comp;
                least = rep;
            }
        }
        if (k0 == -1) break;

        int min_deg = -1;
        for (int c = 0; c < cur.poset.class_count(); ++c)
            if (cur.poset.component[std::size_t(c)] == k0) {
                int d = cur.poset.degree[std::size_t(c)];
                if (min_deg < 0 || d < min_deg) min_deg = d;
            }
        std::vector<int> ideal;
        for (int c = 0; c < cur.poset.class_count(); ++c)
            if (cur.poset.component[std::size_t(c)] == k0 &&
                cur.poset.degree[std::size_t(c)] == min_deg)
                ideal.push_back(c);

        // pi: the degree-minimizing class outside I whose addition keeps an
        // ideal; ties by least representative
        std::set<int> ideal_set(ideal.begin(), ideal.end());
        int pi = -1;
        for (int c = 0; c < cur.poset.class_count(); ++c) {
            if (cur.poset.component[std::size_t(c)] != k0 || ideal_set.count(c)) continue;
            bool cover = true;
            for (int a = 0; a < cur.poset.class_count(); ++a)
                if (a != c && cur.poset.leq[std::size_t(a)][std::size_t(c)] && !ideal_set.count(a))
                    cover = false;
            if (!cover) continue;
            if (pi == -1 || cur.poset.degree[std::size_t(c)] < cur.poset.degree[std::size_t(pi)] ||
                (cur.poset.degree[std::size_t(c)] == cur.poset.degree[std::size_t(pi)] &&
                 cur.poset.members[std::size_t(c)].front() < cur.poset.members[std::size_t(pi)].front()))
                pi = c;
        }
        if (pi == -1) throw stage_error("no cover class found for a non-constant component");

        int k = cur.poset.degree[std::size_t(pi)] - min_deg + 1;
        note("step2 #" + std::to_string(step_tag) + ": component " + std::to_string(k0) + ", |I|=" +
             std::to_string(ideal.size()) + ", k=" + std::to_string(k));

        std::size_t want_min = ideal.size() + 1;
        cur = step2(cur, ideal, k, "s2#" + std::to_string(step_tag++));
        if (!cur.has_increasing_degree_property())
            throw stage_error("step2 violated the increasing degree property");
        // the minimizing set on the component must now cover I + pi
        {
            int new_min = -1;
            std::size_t at_min = 0;
            for (int c = 0; c < cur.poset.class_count(); ++c)
                if (cur.poset.component[std::size_t(c)] == k0) {
                    int d = cur.poset.degree[std::size_t(c)];
                    if (new_min < 0 || d < new_min) {
                        new_min = d;
                        at_min = 1;
                    } else if (d == new_min) {
                        ++at_min;
                    }
                }
            if (at_min < want_min) throw stage_error("step2 did not grow the minimizing ideal");
        }
        note("     n=" + std::to_string(cur.system.n()) + " degrees " + histogram(cur.system));
    }

    cur.stage = Stage::D3;
    note("D3: n=" + std::to_string(cur.system.n()) + " degrees " + histogram(cur.system));
    StagedSystem d4 = step3(cur);
    note("D4: n=" + std::to_string(d4.system.n()) + " degrees " + histogram(d4.system));
    return d4;
}

bool verify_end_transport(const StagedSystem& s, int jobs) {
    HomOptions o;
    o.jobs = jobs;
    auto maps = enumerate_homs(s.system, s.system, o);
    return maps == s.endos;
}

} // namespace rrg
