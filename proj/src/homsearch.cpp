#include "rrg/homsearch.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <limits>
#include <map>
#include <thread>
#include <tuple>

namespace rrg {

SystemView SystemView::of(const Graph& g) {
    SystemView v;
    v.n = g.n();
    v.colours = {"0"};
    v.out.resize(1);
    v.out[0].reserve(std::size_t(g.n()));
    for (int i = 0; i < g.n(); ++i) v.out[0].push_back(g.neighbours(i));
    v.in = v.out;
    v.out_union = v.out[0];
    v.in_union = v.in[0];
    return v;
}

SystemView SystemView::of(const Digraph& d) {
    SystemView v;
    v.n = d.n();
    v.colours = {"0"};
    v.out.resize(1);
    v.in.resize(1);
    for (int i = 0; i < d.n(); ++i) {
        v.out[0].push_back(d.out_neighbours(i));
        v.in[0].push_back(d.in_neighbours(i));
    }
    v.out_union = v.out[0];
    v.in_union = v.in[0];
    return v;
}

SystemView SystemView::of(const RelSystem& s) {
    SystemView v;
    v.n = s.n();
    v.colours = s.colours();
    int k = s.colour_count();
    v.out.resize(std::size_t(k));
    v.in.resize(std::size_t(k));
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < s.n(); ++i) {
            v.out[std::size_t(c)].push_back(s.out_neighbours(c, i));
            v.in[std::size_t(c)].push_back(s.in_neighbours(c, i));
        }
    v.out_union.assign(std::size_t(s.n()), Bitset(s.n()));
    v.in_union.assign(std::size_t(s.n()), Bitset(s.n()));
    for (int i = 0; i < s.n(); ++i)
        for (int c = 0; c < k; ++c) {
            v.out_union[std::size_t(i)].or_with(s.out_neighbours(c, i));
            v.in_union[std::size_t(i)].or_with(s.in_neighbours(c, i));
        }
    return v;
}

namespace {

/// Minimum length of a closed directed odd walk through each vertex
/// (INT_MAX where none exists). Walk lengths survive homomorphisms exactly,
/// so L[phi(v)] <= L[v] is a sound unary filter.
std::vector<int> odd_closed_walk_lengths(const SystemView& v) {
    const int inf = std::numeric_limits<int>::max();
    std::vector<int> res(std::size_t(v.n), inf);
    std::vector<int> d(2 * std::size_t(std::max(v.n, 1)), -1);
    for (int s = 0; s < v.n; ++s) {
        std::fill(d.begin(), d.end(), -1);
        std::deque<int> q;
        d[std::size_t(2 * s)] = 0;
        q.push_back(2 * s);
        int found = inf;
        while (!q.empty() && found == inf) {
            int state = q.front();
            q.pop_front();
            int x = state >> 1, p = state & 1;
            v.out_union[std::size_t(x)].for_each([&](int y) {
                int ns = 2 * y + (p ^ 1);
                if (d[std::size_t(ns)] == -1) {
                    d[std::size_t(ns)] = d[std::size_t(state)] + 1;
                    if (y == s && (p ^ 1) == 1 && found == inf) found = d[std::size_t(ns)];
                    q.push_back(ns);
                }
            });
        }
        res[std::size_t(s)] = found;
    }
    return res;
}

struct ArcConstraint {
    enum Kind : int { Out, In, Ball2, EdgeOdd };
    int neighbour;  // source vertex the constraint propagates to
    int colour;     // target colour index; threshold index for EdgeOdd
    Kind kind;      // Out: (v, neighbour) is an arc; In: (neighbour, v);
                    // Ball2: dist(v, neighbour) == 2 in the underlying graph;
                    // EdgeOdd: the edge {v, neighbour} lies on an odd closed
                    // walk of bounded length
};

struct Problem {
    const SystemView& src;
    const SystemView& tgt;
    HomOptions opts;
    bool self = false;  // find-non-identity semantics apply

    std::vector<int> order;                   // position -> source vertex
    std::vector<int> pos_of;                  // source vertex -> position
    std::vector<std::vector<int>> nbrs;       // underlying neighbour lists
    std::vector<std::vector<ArcConstraint>> constraints;  // per source vertex
    std::vector<Bitset> base;                 // static unary candidate sets
    std::vector<Bitset> ball2;                // target balls of radius 2
    std::vector<std::vector<Bitset>> edge_odd;  // per threshold, per target vertex
    bool infeasible = false;                  // some source colour missing in target

    /// Allowed images of ac.neighbour when the constraint's owner maps to w.
    const Bitset& forward_mask(const ArcConstraint& ac, int w) const {
        switch (ac.kind) {
            case ArcConstraint::Out: return tgt.out[std::size_t(ac.colour)][std::size_t(w)];
            case ArcConstraint::In: return tgt.in[std::size_t(ac.colour)][std::size_t(w)];
            case ArcConstraint::Ball2: return ball2[std::size_t(w)];
            default: return edge_odd[std::size_t(ac.colour)][std::size_t(w)];
        }
    }

    /// Allowed images of the constraint's owner when ac.neighbour maps to img.
    const Bitset& backward_mask(const ArcConstraint& ac, int img) const {
        switch (ac.kind) {
            case ArcConstraint::Out: return tgt.in[std::size_t(ac.colour)][std::size_t(img)];
            case ArcConstraint::In: return tgt.out[std::size_t(ac.colour)][std::size_t(img)];
            case ArcConstraint::Ball2: return ball2[std::size_t(img)];
            default: return edge_odd[std::size_t(ac.colour)][std::size_t(img)];
        }
    }
};

std::vector<int> connected_expansion_order(const SystemView& src, const std::vector<Bitset>& base) {
    int n = src.n;
    std::vector<int> order;
    order.reserve(std::size_t(n));
    std::vector<bool> placed(std::size_t(n), false);
    std::vector<int> attached(std::size_t(n), 0);
    std::vector<int> total_deg(std::size_t(n), 0);
    for (int v = 0; v < n; ++v)
        total_deg[std::size_t(v)] = src.out_union[std::size_t(v)].count() + src.in_union[std::size_t(v)].count();

    std::vector<int> dom(std::size_t(n), 0);
    for (int v = 0; v < n; ++v) dom[std::size_t(v)] = base[std::size_t(v)].count();

    auto attach = [&](int v) {
        placed[std::size_t(v)] = true;
        order.push_back(v);
        src.out_union[std::size_t(v)].for_each([&](int u) { ++attached[std::size_t(u)]; });
        src.in_union[std::size_t(v)].for_each([&](int u) {
            if (!src.out_union[std::size_t(v)].test(u)) ++attached[std::size_t(u)];
        });
    };

    while (int(order.size()) < n) {
        int best = -1;
        bool best_adjacent = false;
        for (int v = 0; v < n; ++v) {
            if (placed[std::size_t(v)]) continue;
            bool adj = attached[std::size_t(v)] > 0;
            if (best == -1) {
                best = v;
                best_adjacent = adj;
                continue;
            }
            // component roots: tightest static domain first, then degree;
            // within a component: most-anchored first
            auto key = [&](int x, bool a) {
                return std::tuple<int, int, int, int, int>(
                    a ? 1 : 0, a ? attached[std::size_t(x)] : 0, a ? 0 : -dom[std::size_t(x)],
                    total_deg[std::size_t(x)], -x);
            };
            if (key(v, adj) > key(best, best_adjacent)) {
                best = v;
                best_adjacent = adj;
            }
        }
        attach(best);
    }
    return order;
}

Problem build_problem(const SystemView& src, const SystemView& tgt, const HomOptions& opts, bool self) {
    Problem p{src, tgt, opts, self, {}, {}, {}, {}, {}, {}, {}, false};

    // colour alignment: a source colour carrying arcs must exist in the target
    std::vector<int> colour_map(src.colours.size(), -1);
    for (std::size_t c = 0; c < src.colours.size(); ++c) {
        int t = -1;
        for (std::size_t d = 0; d < tgt.colours.size(); ++d)
            if (tgt.colours[d] == src.colours[c]) t = int(d);
        colour_map[c] = t;
        if (t < 0) {
            bool has_arc = false;
            for (int v = 0; v < src.n && !has_arc; ++v)
                has_arc = !src.out[c][std::size_t(v)].empty();
            if (has_arc) p.infeasible = true;
        }
    }
    if (p.infeasible) return p;

    p.nbrs.assign(std::size_t(src.n), {});
    for (int v = 0; v < src.n; ++v) {
        Bitset both = src.out_union[std::size_t(v)];
        both.or_with(src.in_union[std::size_t(v)]);
        both.reset(v);
        both.for_each([&](int u) { p.nbrs[std::size_t(v)].push_back(u); });
    }

    p.constraints.assign(std::size_t(src.n), {});
    for (std::size_t c = 0; c < src.colours.size(); ++c) {
        int tc = colour_map[c];
        if (tc < 0) continue;
        for (int v = 0; v < src.n; ++v)
            src.out[c][std::size_t(v)].for_each([&](int u) {
                if (u == v) return;  // loops become unary constraints below
                p.constraints[std::size_t(v)].push_back({u, tc, ArcConstraint::Out});
                p.constraints[std::size_t(u)].push_back({v, tc, ArcConstraint::In});
            });
    }

    auto underlying = [](const SystemView& view) {
        std::vector<Bitset> rows(std::size_t(view.n), Bitset(view.n));
        for (int v = 0; v < view.n; ++v) {
            rows[std::size_t(v)] = view.out_union[std::size_t(v)];
            rows[std::size_t(v)].or_with(view.in_union[std::size_t(v)]);
            rows[std::size_t(v)].reset(v);
        }
        return rows;
    };

    if (opts.prune_parity) {
        // edge-level strengthening of the parity filter: an edge on an odd
        // closed walk of length t must map to an edge carrying one of length
        // <= t. Only sound when the target is loop-free, as loops let edges
        // collapse and flip walk parity.
        bool tgt_has_loop = false;
        for (std::size_t c = 0; c < tgt.colours.size() && !tgt_has_loop; ++c)
            for (int w = 0; w < tgt.n && !tgt_has_loop; ++w)
                if (tgt.out[c][std::size_t(w)].test(w)) tgt_has_loop = true;
        if (!tgt_has_loop && tgt.n > 0) {
            auto src_rows = underlying(src);
            auto tgt_rows = underlying(tgt);
            // even-length walk distances from a root over simple edges
            auto even_walk_dist = [](const std::vector<Bitset>& rows, int root) {
                std::vector<int> d(2 * rows.size(), -1);
                std::deque<int> q{2 * root};
                d[std::size_t(2 * root)] = 0;
                while (!q.empty()) {
                    int state = q.front();
                    q.pop_front();
                    int x = state >> 1, par = state & 1;
                    rows[std::size_t(x)].for_each([&](int y) {
                        int ns = 2 * y + (par ^ 1);
                        if (d[std::size_t(ns)] == -1) {
                            d[std::size_t(ns)] = d[std::size_t(state)] + 1;
                            q.push_back(ns);
                        }
                    });
                }
                std::vector<int> even(rows.size(), -1);
                for (std::size_t v = 0; v < rows.size(); ++v) even[v] = d[2 * v];
                return even;
            };
            // source edge values and the distinct thresholds
            std::map<std::pair<int, int>, int> edge_value;
            std::vector<int> thresholds;
            for (int v = 0; v < src.n; ++v) {
                auto even_to_v = even_walk_dist(src_rows, v);
                src_rows[std::size_t(v)].for_each([&](int u) {
                    if (u < v) return;
                    int back = even_to_v[std::size_t(u)];  // even walk u -> v
                    if (back < 0) return;
                    edge_value[{v, u}] = 1 + back;
                    thresholds.push_back(1 + back);
                });
            }
            std::sort(thresholds.begin(), thresholds.end());
            thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
            if (!thresholds.empty()) {
                p.edge_odd.assign(thresholds.size(), std::vector<Bitset>());
                for (auto& layer : p.edge_odd)
                    layer.assign(std::size_t(tgt.n), Bitset(tgt.n));
                for (int w = 0; w < tgt.n; ++w) {
                    auto even_to_w = even_walk_dist(tgt_rows, w);
                    tgt_rows[std::size_t(w)].for_each([&](int x) {
                        int lwx = even_to_w[std::size_t(x)] < 0
                                      ? std::numeric_limits<int>::max()
                                      : 1 + even_to_w[std::size_t(x)];
                        for (std::size_t ti = 0; ti < thresholds.size(); ++ti)
                            if (lwx <= thresholds[ti]) p.edge_odd[ti][std::size_t(w)].set(x);
                    });
                }
                for (const auto& [edge, value] : edge_value) {
                    int ti = int(std::lower_bound(thresholds.begin(), thresholds.end(), value) -
                                 thresholds.begin());
                    p.constraints[std::size_t(edge.first)].push_back(
                        {edge.second, ti, ArcConstraint::EdgeOdd});
                    p.constraints[std::size_t(edge.second)].push_back(
                        {edge.first, ti, ArcConstraint::EdgeOdd});
                }
            }
        }
    }

    if (opts.prune_distance2) {
        // distance never grows under a homomorphism, so images of vertices
        // at distance two stay within the radius-2 ball
        auto tgt_rows = underlying(tgt);
        p.ball2.assign(std::size_t(tgt.n), Bitset(tgt.n));
        for (int w = 0; w < tgt.n; ++w) {
            Bitset& b = p.ball2[std::size_t(w)];
            b = tgt_rows[std::size_t(w)];
            tgt_rows[std::size_t(w)].for_each([&](int x) { b.or_with(tgt_rows[std::size_t(x)]); });
            b.set(w);
        }
        auto src_rows = underlying(src);
        for (int v = 0; v < src.n; ++v) {
            Bitset two(src.n);
            src_rows[std::size_t(v)].for_each([&](int x) { two.or_with(src_rows[std::size_t(x)]); });
            two.andnot_with(src_rows[std::size_t(v)]);
            two.reset(v);
            two.for_each([&](int u) {
                if (u > v) {
                    p.constraints[std::size_t(v)].push_back({u, 0, ArcConstraint::Ball2});
                    p.constraints[std::size_t(u)].push_back({v, 0, ArcConstraint::Ball2});
                }
            });
        }
    }

    // static unary filters
    p.base.assign(std::size_t(src.n), Bitset(tgt.n));
    for (auto& b : p.base) b.fill_all();

    for (std::size_t c = 0; c < src.colours.size(); ++c) {
        int tc = colour_map[c];
        Bitset loop_mask(tgt.n);
        if (tc >= 0)
            for (int w = 0; w < tgt.n; ++w)
                if (tgt.out[std::size_t(tc)][std::size_t(w)].test(w)) loop_mask.set(w);
        for (int v = 0; v < src.n; ++v)
            if (src.out[c][std::size_t(v)].test(v)) p.base[std::size_t(v)].and_with(loop_mask);
    }

    if (opts.prune_parity) {
        auto lv = odd_closed_walk_lengths(src);
        auto lw = odd_closed_walk_lengths(tgt);
        // mask_leq[x] = { w : lw[w] <= x }, built over the distinct source values
        std::vector<int> values;
        for (int v = 0; v < src.n; ++v)
            if (lv[std::size_t(v)] != std::numeric_limits<int>::max()) values.push_back(lv[std::size_t(v)]);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        std::map<int, Bitset> mask_leq;
        for (int x : values) {
            Bitset m(tgt.n);
            for (int w = 0; w < tgt.n; ++w)
                if (lw[std::size_t(w)] <= x) m.set(w);
            mask_leq.emplace(x, std::move(m));
        }
        for (int v = 0; v < src.n; ++v)
            if (lv[std::size_t(v)] != std::numeric_limits<int>::max())
                p.base[std::size_t(v)].and_with(mask_leq.at(lv[std::size_t(v)]));
    }

    if (opts.bijective && opts.prune_degree) {
        // exact per-colour (out, in) degree signatures
        auto signature = [](const SystemView& view, const std::vector<int>& cmap, bool is_src, int v) {
            std::vector<std::pair<int, int>> sig;
            for (std::size_t c = 0; c < view.colours.size(); ++c) {
                int label = is_src ? cmap[c] : int(c);
                sig.emplace_back(label, view.out[c][std::size_t(v)].count() * 4096 +
                                            view.in[c][std::size_t(v)].count());
            }
            std::sort(sig.begin(), sig.end());
            return sig;
        };
        std::vector<int> id_map(tgt.colours.size());
        for (std::size_t c = 0; c < tgt.colours.size(); ++c) id_map[c] = int(c);
        std::map<std::vector<std::pair<int, int>>, Bitset> buckets;
        for (int w = 0; w < tgt.n; ++w) {
            auto sig = signature(tgt, id_map, false, w);
            auto it = buckets.find(sig);
            if (it == buckets.end()) it = buckets.emplace(sig, Bitset(tgt.n)).first;
            it->second.set(w);
        }
        for (int v = 0; v < src.n; ++v) {
            auto sig = signature(src, colour_map, true, v);
            auto it = buckets.find(sig);
            if (it == buckets.end())
                p.base[std::size_t(v)] = Bitset(tgt.n);
            else
                p.base[std::size_t(v)].and_with(it->second);
        }
    }

    p.order = connected_expansion_order(src, p.base);
    p.pos_of.assign(std::size_t(src.n), -1);
    for (int t = 0; t < src.n; ++t) p.pos_of[std::size_t(p.order[std::size_t(t)])] = t;

    return p;
}

class Searcher {
public:
    Searcher(const Problem& p, std::atomic<long long>& delivered, std::atomic<bool>& stop,
             std::chrono::steady_clock::time_point deadline, bool has_deadline)
        : p_(p), delivered_(delivered), stop_(stop), deadline_(deadline), has_deadline_(has_deadline) {
        map_.assign(std::size_t(p.src.n), -1);
        if (p.opts.prune_forward) {
            cand_ = p.base;
            dom_size_.resize(std::size_t(p.src.n));
            for (int v = 0; v < p.src.n; ++v) dom_size_[std::size_t(v)] = cand_[std::size_t(v)].count();
        }
        if (p.opts.bijective) used_ = Bitset(p.tgt.n);
        scratch_.assign(std::size_t(p.src.n), Bitset(p.tgt.n));
        attached_.assign(std::size_t(p.src.n), 0);
    }

    std::vector<std::vector<int>> solutions;
    std::optional<std::vector<int>> witness;
    long long count = 0;
    long long nodes = 0;
    long long roots_done = 0;
    bool hit_deadline = false;

    /// Runs the search with the root image restricted to `root_values`.
    void run(const std::vector<int>& root_values) {
        if (p_.src.n == 0) {
            deliver(map_);
            return;
        }
        int root = p_.order[0];
        for (int w : root_values) {
            if (stopped()) return;
            if (root_cand_ok(root, w)) assign_and_descend(root, w);
            ++roots_done;
        }
    }

    /// Candidate values for the root under static filters, in value order.
    std::vector<int> root_values() const {
        std::vector<int> vals;
        if (p_.src.n == 0) return vals;
        int root = p_.order[0];
        const Bitset& b = p_.base[std::size_t(root)];
        b.for_each([&](int w) {
            if (!(p_.self && w == root)) vals.push_back(w);
        });
        if (p_.self && b.test(root)) vals.push_back(root);  // identity branch last
        return vals;
    }

private:
    bool stopped() const { return stop_.load(std::memory_order_relaxed); }

    bool root_cand_ok(int root, int w) const {
        if (!p_.opts.prune_forward) return p_.base[std::size_t(root)].test(w);
        return cand_[std::size_t(root)].test(w);
    }

    void check_deadline() {
        if (!has_deadline_ || (++ticks_ & 1023) != 0) return;
        if (std::chrono::steady_clock::now() >= deadline_) {
            hit_deadline = true;
            stop_.store(true, std::memory_order_relaxed);
        }
    }

    /// Delivers a complete map; returns false to abort the whole search.
    bool deliver(const std::vector<int>& m) {
        if (p_.self && p_.opts.mode == HomMode::FindNonIdentity) {
            if (is_identity_map(m)) return true;
            witness = m;
            stop_.store(true, std::memory_order_relaxed);
            return false;
        }
        if (p_.opts.mode == HomMode::FindFirst) {
            witness = m;
            stop_.store(true, std::memory_order_relaxed);
            return false;
        }
        long long seen = delivered_.fetch_add(1, std::memory_order_relaxed) + 1;
        ++count;
        if (p_.opts.mode == HomMode::Enumerate) solutions.push_back(m);
        if (p_.opts.limit && seen >= *p_.opts.limit) {
            stop_.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }

    /// Effective candidate set of vertex v, written into the scratch bitset
    /// of the current depth.
    const Bitset& candidate_set(int v) {
        Bitset& c = scratch_[std::size_t(assigned_n_)];
        if (p_.opts.prune_forward) {
            c = cand_[std::size_t(v)];
            return c;
        }
        // backward checking: intersect constraints from already-assigned
        // neighbours on demand
        c = p_.base[std::size_t(v)];
        for (const auto& ac : p_.constraints[std::size_t(v)]) {
            int img = map_[std::size_t(ac.neighbour)];
            if (img < 0) continue;
            c.and_with(p_.backward_mask(ac, img));
        }
        return c;
    }

    void save_domain(int vertex) {
        Bitset& dom = cand_[std::size_t(vertex)];
        if (pool_top_ == pool_.size())
            pool_.push_back(dom);
        else
            pool_[pool_top_] = dom;  // copy-assign reuses the buffer
        trail_.push_back({vertex, pool_top_, dom_size_[std::size_t(vertex)]});
        ++pool_top_;
    }

    /// Forward-checks the constraints of a just-assigned vertex. Domains
    /// that shrink to a single value force their vertex immediately (unit
    /// propagation); forced assignments are recorded for undo.
    bool propagate_from(int v, std::vector<int>& forced) {
        queue_.clear();
        queue_.push_back(v);
        std::size_t head = 0;
        while (head < queue_.size()) {
            int x = queue_[head++];
            int wx = map_[std::size_t(x)];
            for (const auto& ac : p_.constraints[std::size_t(x)]) {
                int img = map_[std::size_t(ac.neighbour)];
                if (img >= 0) {
                    // two same-round forcings must still respect their arc
                    if (!p_.forward_mask(ac, wx).test(img)) return false;
                    continue;
                }
                Bitset& dom = cand_[std::size_t(ac.neighbour)];
                save_domain(ac.neighbour);
                dom.and_with(p_.forward_mask(ac, wx));
                if (p_.opts.bijective) dom.andnot_with(used_);
                int size = dom.count();
                dom_size_[std::size_t(ac.neighbour)] = size;
                if (size == 0) return false;
                if (size == 1) {
                    // forced
                    int first = dom.first();
                    if (p_.opts.bijective) used_.set(first);
                    map_[std::size_t(ac.neighbour)] = first;
                    attach(ac.neighbour);
                    forced.push_back(ac.neighbour);
                    queue_.push_back(ac.neighbour);
                }
            }
        }
        return true;
    }

    void attach(int v) {
        ++assigned_n_;
        for (int u : p_.nbrs[std::size_t(v)]) ++attached_[std::size_t(u)];
    }

    void detach(int v) {
        --assigned_n_;
        for (int u : p_.nbrs[std::size_t(v)]) --attached_[std::size_t(u)];
    }

    void assign_and_descend(int v, int w) {
        check_deadline();
        if (stopped()) return;
        ++nodes;

        map_[std::size_t(v)] = w;
        attach(v);
        if (p_.opts.bijective) used_.set(w);  // descend already filtered w against used_
        std::size_t trail_mark = trail_.size();
        std::vector<int> forced;
        bool ok = true;
        if (p_.opts.prune_forward) {
            ok = propagate_from(v, forced);
        } else {
            for (const auto& ac : p_.constraints[std::size_t(v)]) {
                int img = map_[std::size_t(ac.neighbour)];
                if (img < 0) continue;
                if (!p_.forward_mask(ac, w).test(img)) {
                    ok = false;
                    break;
                }
            }
        }

        if (ok) descend();

        for (int x : forced) {
            if (p_.opts.bijective) used_.reset(map_[std::size_t(x)]);
            map_[std::size_t(x)] = -1;
            detach(x);
        }
        while (trail_.size() > trail_mark) {
            --pool_top_;
            const TrailEntry& e = trail_.back();
            cand_[std::size_t(e.vertex)] = pool_[pool_top_];
            dom_size_[std::size_t(e.vertex)] = e.old_size;
            trail_.pop_back();
        }
        if (p_.opts.bijective) used_.reset(w);
        map_[std::size_t(v)] = -1;
        detach(v);
    }

    /// Next vertex to branch on: smallest live domain on the connected
    /// frontier, ties by index; falls back to the static order when
    /// domains are not maintained.
    int pick_vertex() const {
        if (!p_.opts.prune_forward) {
            for (int k = 0; k < p_.src.n; ++k)
                if (map_[std::size_t(p_.order[std::size_t(k)])] < 0) return p_.order[std::size_t(k)];
            return -1;
        }
        int best = -1;
        bool best_frontier = false;
        int best_size = 0, best_att = 0;
        for (int v = 0; v < p_.src.n; ++v) {
            if (map_[std::size_t(v)] >= 0) continue;
            bool frontier = attached_[std::size_t(v)] > 0;
            int size = dom_size_[std::size_t(v)];
            int att = attached_[std::size_t(v)];
            if (best < 0 || std::tuple(!frontier, size, -att, p_.pos_of[std::size_t(v)]) <
                                std::tuple(!best_frontier, best_size, -best_att,
                                           p_.pos_of[std::size_t(best)])) {
                best = v;
                best_frontier = frontier;
                best_size = size;
                best_att = att;
            }
        }
        return best;
    }

    void descend() {
        if (stopped()) return;
        if (assigned_n_ == p_.src.n) {
            deliver(map_);
            return;
        }
        int v = pick_vertex();
        candidate_set(v);
        Bitset& c = scratch_[std::size_t(assigned_n_)];
        if (p_.opts.bijective) c.andnot_with(used_);
        bool self_last = p_.self && c.test(v);
        int skip = self_last ? v : -1;
        bool aborted = false;
        c.for_each([&](int w) {
            if (aborted || w == skip || stopped()) return;
            assign_and_descend(v, w);
            if (witness.has_value()) aborted = true;
        });
        if (self_last && !aborted && !stopped()) assign_and_descend(v, skip);
    }

    const Problem& p_;
    std::atomic<long long>& delivered_;
    std::atomic<bool>& stop_;
    std::chrono::steady_clock::time_point deadline_;
    bool has_deadline_;
    struct TrailEntry {
        int vertex;
        std::size_t slot;
        int old_size;
    };

    std::vector<int> map_;
    std::vector<Bitset> cand_;
    std::vector<Bitset> scratch_;  // per-depth working candidate sets
    Bitset used_;
    std::vector<TrailEntry> trail_;
    std::vector<Bitset> pool_;
    std::size_t pool_top_ = 0;
    std::vector<int> queue_;    // unit-propagation worklist
    std::vector<int> dom_size_; // live candidate counts (forward mode)
    std::vector<int> attached_; // number of assigned underlying neighbours
    int assigned_n_ = 0;
    unsigned ticks_ = 0;
};

} // namespace

HomResult search_homs(const SystemView& src, const SystemView& tgt, const HomOptions& opts) {
    bool self = (src.n == tgt.n);
    Problem p = build_problem(src, tgt, opts, self && opts.mode == HomMode::FindNonIdentity);
    HomResult result;
    if (p.infeasible) return result;
    if (src.n > 0 && tgt.n == 0) return result;

    std::atomic<long long> delivered{0};
    std::atomic<bool> stop{false};
    auto deadline = std::chrono::steady_clock::now();
    bool has_deadline = opts.time_limit_s.has_value();
    if (has_deadline)
        deadline += std::chrono::microseconds(static_cast<long long>(*opts.time_limit_s * 1e6));

    Searcher proto(p, delivered, stop, deadline, has_deadline);
    std::vector<int> roots = proto.root_values();

    int jobs = std::max(1, opts.jobs);
    std::vector<Searcher> searchers;
    if (jobs == 1 || int(roots.size()) <= 1 || src.n == 0) {
        proto.run(roots);
        searchers.push_back(std::move(proto));
    } else {
        jobs = std::min<int>(jobs, int(roots.size()));
        std::vector<std::vector<int>> chunks;
        chunks.resize(std::size_t(jobs));
        for (std::size_t i = 0; i < roots.size(); ++i)
            chunks[i % std::size_t(jobs)].push_back(roots[i]);
        searchers.reserve(std::size_t(jobs));
        for (int j = 0; j < jobs; ++j)
            searchers.emplace_back(p, delivered, stop, deadline, has_deadline);
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j)
            threads.emplace_back([&, j] { searchers[std::size_t(j)].run(chunks[std::size_t(j)]); });
        for (auto& t : threads) t.join();
    }

    bool timed_out = false;
    result.roots_total = static_cast<long long>(roots.size());
    for (auto& s : searchers) {
        timed_out = timed_out || s.hit_deadline;
        result.count += s.count;
        result.nodes += s.nodes;
        result.roots_done += s.roots_done;
        for (auto& m : s.solutions) result.maps.push_back(std::move(m));
        if (s.witness && (!result.witness || *s.witness < *result.witness)) result.witness = s.witness;
    }

    if (opts.mode == HomMode::Enumerate) {
        std::sort(result.maps.begin(), result.maps.end());
        if (opts.limit && static_cast<long long>(result.maps.size()) > *opts.limit)
            result.maps.resize(std::size_t(*opts.limit));
        result.count = static_cast<long long>(result.maps.size());
    }
    if (opts.limit && result.count > *opts.limit) result.count = *opts.limit;

    bool limit_hit = opts.limit && result.count >= *opts.limit;
    result.complete = !timed_out && !limit_hit;
    if ((opts.mode == HomMode::FindFirst || opts.mode == HomMode::FindNonIdentity))
        result.complete = result.witness.has_value() || !timed_out;
    return result;
}

bool is_core(const Graph& g) {
    // stream endomorphisms, stop at the first non-bijective one
    HomOptions o;
    auto maps = enumerate_homs(g, g, o);
    for (const auto& m : maps)
        if (!is_bijective_map(m)) return false;
    return true;
}

std::vector<int> compose_maps(const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[std::size_t(g[i])];
    return h;
}

bool is_identity_map(const std::vector<int>& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != int(i)) return false;
    return true;
}

bool is_bijective_map(const std::vector<int>& f) {
    std::vector<bool> seen(f.size(), false);
    for (int x : f) {
        if (x < 0 || std::size_t(x) >= f.size() || seen[std::size_t(x)]) return false;
        seen[std::size_t(x)] = true;
    }
    return true;
}

EndMonoid end_monoid_from_maps(std::vector<std::vector<int>> maps) {
    std::sort(maps.begin(), maps.end());
    EndMonoid m;
    m.elements = std::move(maps);
    int k = m.size();
    m.table.assign(std::size_t(k), std::vector<int>(std::size_t(k), -1));
    for (int i = 0; i < k; ++i) {
        if (is_identity_map(m.elements[std::size_t(i)])) m.identity = i;
        for (int j = 0; j < k; ++j) {
            auto h = compose_maps(m.elements[std::size_t(i)], m.elements[std::size_t(j)]);
            auto it = std::lower_bound(m.elements.begin(), m.elements.end(), h);
            if (it == m.elements.end() || *it != h)
                throw std::logic_error("end_monoid: endomorphisms not closed under composition");
            m.table[std::size_t(i)][std::size_t(j)] = int(it - m.elements.begin());
        }
    }
    if (m.identity < 0 && k > 0)
        throw std::logic_error("end_monoid: identity endomorphism missing");
    return m;
}

} // namespace rrg
