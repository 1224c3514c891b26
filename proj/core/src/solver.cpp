#include "acyclic/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <future>
#include <stdexcept>

namespace acyclic {

namespace {

struct BudgetStop {};

using Clock = std::chrono::steady_clock;

/// Backtracking engine shared by the acyclic and plain-proper decision
/// procedures.
///
/// Propagation keeps, per uncoloured vertex, the set of colours eliminated
/// so far, each with the trail positions that justify the elimination:
/// a coloured neighbour for properness, or the coloured path that the
/// candidate would close into a bicoloured cycle. Empty availability is a
/// conflict, singleton availability forces an assignment. Conflicts carry
/// their reasons, so the search can backjump over decisions the failure
/// does not depend on; with backjumping disabled the same loop degrades to
/// chronological backtracking.
class Engine {
public:
    Engine(const Graph& g, int k, bool acyclic, const SolveOptions& opt)
        : g_(g), n_(g.vertex_count()), k_(k), acyclic_(acyclic), opt_(opt) {
        colour_.assign(n_, -1);
        pos_of_.assign(n_, -1);
        elim_.assign(n_, 0u);
        elim_reason_.assign(static_cast<size_t>(n_) * k_, {});
        colcnt_.assign(static_cast<size_t>(n_) * k_, 0);
        stamp_.assign(n_, 0);
        parent_.assign(n_, -1);
        full_mask_ = (k_ >= 32) ? ~0u : ((1u << k_) - 1u);
        build_difference_constraints();
    }

    SolveResult run(const SolveBudget& budget, std::optional<std::pair<int, int>> seed,
                    std::atomic<bool>* cancel) {
        cancel_ = cancel;
        node_limit_ = budget.node_limit;
        if (budget.wall_limit) deadline_ = Clock::now() + *budget.wall_limit;

        try {
            if (seed) {
                decisions_.push_back(
                    {seed->first, trail_.size(), full_mask_ & ~(1u << seed->second), {}});
                assign(seed->first, seed->second, /*decision=*/true, {});
            }
            while (true) {
                drain_forced();
                while (!conflict_ && acyclic_ && aux_propagate()) drain_forced();
                if (conflict_) {
                    if (!resolve_conflict()) return {Outcome::no, std::nullopt, nodes_};
                    continue;
                }
                if (static_cast<int>(trail_.size()) == n_) {
                    Colouring witness{k_, colour_};
                    return {Outcome::yes, std::move(witness), nodes_};
                }
                int v = select();
                // Colours are interchangeable before any is placed, so the
                // very first decision only ever tries colour 0.
                bool first = decisions_.empty();
                decisions_.push_back({v, trail_.size(), first ? full_mask_ & ~1u : 0u, {}});
                int c = std::countr_zero(avail_mask(v) & ~decisions_.back().tried);
                assign(v, c, /*decision=*/true, {});
            }
        } catch (const BudgetStop&) {
            dump_stats();
            return {Outcome::unknown, std::nullopt, nodes_};
        }
    }

    void dump_stats() const {
        if (!std::getenv("ACYCLIC_SOLVER_STATS")) return;
        std::fprintf(stderr,
                     "[stats] decisions=%llu forced=%llu conflicts=%llu avg_jump=%.2f "
                     "cycle_checks=%llu max_depth=%llu\n",
                     (unsigned long long)stat_decisions_, (unsigned long long)stat_forced_,
                     (unsigned long long)stat_conflicts_,
                     stat_conflicts_ ? (double)stat_jump_total_ / stat_conflicts_ : 0.0,
                     (unsigned long long)stat_cycle_checks_, (unsigned long long)stat_max_depth_);
    }

private:
    struct TrailEntry {
        int vertex;
        int colour;
        bool decision;
        int level;
        size_t elim_mark;
        std::vector<int> reason;  // trail positions; empty for decisions
    };

    struct DecisionRec {
        int vertex;
        size_t trail_pos;
        std::uint32_t tried;
        std::vector<int> accum;  // conflict levels collected from failed values
    };

    std::uint32_t avail_mask(int v) const { return full_mask_ & ~elim_[v]; }
    int avail_count(int v) const { return std::popcount(avail_mask(v)); }

    /// Distinctness is forced beyond plain adjacency: two vertices with k
    /// common neighbours always receive different colours in a k-acyclic
    /// colouring (two of the common neighbours share a colour, closing a
    /// bicoloured 4-cycle otherwise). diff_adj_ holds real neighbours merged
    /// with these pairs; it drives properness-style elimination and the
    /// pair propagation below.
    void build_difference_constraints() {
        diff_adj_.assign(n_, {});
        for (int v = 0; v < n_; ++v)
            diff_adj_[v].assign(g_.neighbours(v).begin(), g_.neighbours(v).end());
        if (acyclic_ && k_ >= 2) {
            std::vector<int> common(n_, 0);
            for (int x = 0; x < n_; ++x) {
                std::fill(common.begin(), common.end(), 0);
                for (int w : g_.neighbours(x))
                    for (int y : g_.neighbours(w))
                        if (y > x) ++common[y];
                for (int y = x + 1; y < n_; ++y) {
                    if (common[y] < k_ || g_.has_edge(x, y)) continue;
                    diff_adj_[x].push_back(y);
                    diff_adj_[y].push_back(x);
                }
            }
            for (auto& nb : diff_adj_) std::sort(nb.begin(), nb.end());
        }
    }

    /// Trail positions whose assignments pinned v's current availability.
    void collect_pins(int v, std::vector<int>& out) const {
        for (int c = 0; c < k_; ++c) {
            if (!(elim_[v] & (1u << c))) continue;
            const auto& r = elim_reason_[static_cast<size_t>(v) * k_ + c];
            out.insert(out.end(), r.begin(), r.end());
        }
    }

    // ---- guaranteed-structure propagation -------------------------------
    //
    // For a colour pair {ca, cb}, a vertex is *sure* when it is coloured ca
    // or cb, or uncoloured with availability inside {ca, cb}: every
    // completion places it in those two classes. A *contributing pair* is a
    // mutually-distinct pair {x, y} with equal two-colour availability
    // {g, d}, g inside the colour pair and d outside: every completion
    // colours exactly one member g. Union-find over sure vertices (real
    // edges, common-neighbour hops through a pair, and pair bridges that
    // are connected regardless of which member takes g) yields components
    // that are connected within the two classes in *every* completion.
    // A vertex with two attachment points into one component therefore
    // closes a cycle lying inside two colour classes no matter how the
    // search continues, so the colours of the pair can be eliminated
    // outright; reasons only involve the assignments that pinned the
    // structure, never the free choices inside it.

    int aux_find(int v) {
        while (aux_parent_[v] != v) v = aux_parent_[v] = aux_parent_[aux_parent_[v]];
        return v;
    }

    /// Positions justifying the component's sure/pair memberships.
    void aux_component_reason(int root, const std::vector<char>& in_s,
                              const std::vector<std::array<int, 2>>& pairs,
                              const std::vector<int>& pair_root, std::vector<int>& out) {
        for (int v = 0; v < n_; ++v) {
            if (!in_s[v] || aux_find(v) != root) continue;
            if (colour_[v] != -1)
                out.push_back(pos_of_[v]);
            else
                collect_pins(v, out);
        }
        for (size_t p = 0; p < pairs.size(); ++p) {
            if (pair_root[p] == -1 || aux_find(pair_root[p]) != root) continue;
            collect_pins(pairs[p][0], out);
            collect_pins(pairs[p][1], out);
        }
    }

    bool aux_propagate_pair(int ca, int cb) {
        const std::uint32_t pair_mask = (1u << ca) | (1u << cb);
        std::vector<char>& in_s = aux_in_s_;
        in_s.assign(n_, 0);
        for (int v = 0; v < n_; ++v) {
            if (colour_[v] == ca || colour_[v] == cb)
                in_s[v] = 1;
            else if (colour_[v] == -1 && (avail_mask(v) & ~pair_mask) == 0)
                in_s[v] = 1;
        }
        // disjoint contributing pairs, greedily in index order
        std::vector<std::array<int, 2>> pairs;
        std::vector<char>& in_pair = aux_in_pair_;
        in_pair.assign(n_, 0);
        for (int x = 0; x < n_; ++x) {
            if (in_pair[x] || colour_[x] != -1 || in_s[x]) continue;
            std::uint32_t m = avail_mask(x);
            if (std::popcount(m) != 2 || !(m & pair_mask) || (m & pair_mask) == m) continue;
            for (int y : diff_adj_[x]) {
                if (y <= x || in_pair[y] || colour_[y] != -1 || avail_mask(y) != m) continue;
                pairs.push_back({x, y});
                in_pair[x] = in_pair[y] = 1;
                break;
            }
        }

        aux_parent_.resize(n_);
        for (int v = 0; v < n_; ++v) aux_parent_[v] = v;

        bool conflict_found = false;
        int conflict_root = -1;
        // sure-sure edges; a repeated union is a cycle certain in every
        // completion (the coloured part alone is cycle-checked at
        // assignment time, so a new detection here involves sure vertices)
        for (int v = 0; v < n_ && !conflict_found; ++v) {
            if (!in_s[v]) continue;
            for (int w : g_.neighbours(v)) {
                if (w <= v || !in_s[w]) continue;
                int rv = aux_find(v), rw = aux_find(w);
                if (rv == rw) {
                    conflict_found = true;
                    conflict_root = rv;
                    break;
                }
                aux_parent_[rv] = rw;
            }
        }

        std::vector<int> pair_root(pairs.size(), -1);
        if (!conflict_found) {
            // hops through a pair: sure vertices adjacent to both members
            // are connected via whichever member lands in the classes
            for (size_t p = 0; p < pairs.size() && !conflict_found; ++p) {
                auto [x, y] = pairs[p];
                int first = -1;
                for (int u : g_.neighbours(x)) {
                    if (!in_s[u] || !g_.has_edge(y, u)) continue;
                    if (first == -1) {
                        first = u;
                        continue;
                    }
                    int ru = aux_find(u), rf = aux_find(first);
                    if (ru == rf) {
                        conflict_found = true;
                        conflict_root = ru;
                        break;
                    }
                    aux_parent_[ru] = rf;
                }
                if (first != -1) pair_root[p] = aux_find(first);
            }
        }

        // pair bridges: components touched by both members merge in every
        // completion; two double-touched components on both sides would
        // already be a certain cycle
        while (!conflict_found) {
            bool merged = false;
            for (size_t p = 0; p < pairs.size() && !conflict_found; ++p) {
                auto [x, y] = pairs[p];
                std::vector<int> tx, ty;
                for (int u : g_.neighbours(x))
                    if (in_s[u]) tx.push_back(aux_find(u));
                for (int u : g_.neighbours(y))
                    if (in_s[u]) ty.push_back(aux_find(u));
                std::sort(tx.begin(), tx.end());
                std::sort(ty.begin(), ty.end());
                tx.erase(std::unique(tx.begin(), tx.end()), tx.end());
                ty.erase(std::unique(ty.begin(), ty.end()), ty.end());
                std::vector<int> common;
                std::set_intersection(tx.begin(), tx.end(), ty.begin(), ty.end(),
                                      std::back_inserter(common));
                if (common.size() >= 2) {
                    for (size_t i = 1; i < common.size(); ++i)
                        aux_parent_[aux_find(common[i])] = aux_find(common[0]);
                    merged = true;
                }
                if (!common.empty() && pair_root[p] == -1) pair_root[p] = aux_find(common[0]);
            }
            if (!merged) break;
        }

        if (conflict_found) {
            conflict_ = true;
            conflict_positions_.clear();
            aux_component_reason(aux_find(conflict_root), in_s, pairs, pair_root,
                                 conflict_positions_);
            return true;
        }

        // a vertex with two attachments into one component cannot take
        // either colour of the pair
        bool changed = false;
        for (int z = 0; z < n_ && !conflict_; ++z) {
            if (colour_[z] != -1 || in_s[z] || in_pair[z]) continue;
            std::uint32_t hit = avail_mask(z) & pair_mask;
            if (!hit) continue;
            std::vector<int> roots;
            for (int u : g_.neighbours(z))
                if (in_s[u]) roots.push_back(aux_find(u));
            for (size_t p = 0; p < pairs.size(); ++p) {
                if (pair_root[p] == -1) continue;
                auto [x, y] = pairs[p];
                if (g_.has_edge(z, x) && g_.has_edge(z, y))
                    roots.push_back(aux_find(pair_root[p]));
            }
            std::sort(roots.begin(), roots.end());
            auto dup = std::adjacent_find(roots.begin(), roots.end());
            if (dup == roots.end()) continue;
            std::vector<int> reason;
            aux_component_reason(*dup, in_s, pairs, pair_root, reason);
            while (hit && !conflict_) {
                int c = std::countr_zero(hit);
                hit &= hit - 1;
                log_elim(z, c, reason);
                changed = true;
            }
        }
        return changed;
    }

    bool aux_propagate() {
        bool changed = false;
        for (int ca = 0; ca < k_ && !conflict_; ++ca)
            for (int cb = ca + 1; cb < k_ && !conflict_; ++cb)
                if (aux_propagate_pair(ca, cb)) changed = true;
        return changed && !conflict_;
    }

    /// Two mutually-distinct uncoloured vertices confined to the same two
    /// colours use both of them in every completion, so every vertex
    /// distinct from both loses both colours.
    void pair_propagate(int x) {
        std::uint32_t mask = avail_mask(x);
        for (int y : diff_adj_[x]) {
            if (conflict_) return;
            if (colour_[y] != -1 || avail_mask(y) != mask) continue;
            std::vector<int> reason;
            collect_pins(x, reason);
            collect_pins(y, reason);
            // z distinct from both x and y (sorted-list intersection)
            const auto& a = diff_adj_[x];
            const auto& b = diff_adj_[y];
            size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] < b[j]) {
                    ++i;
                } else if (a[i] > b[j]) {
                    ++j;
                } else {
                    int z = a[i];
                    ++i, ++j;
                    if (z == x || z == y || colour_[z] != -1) continue;
                    std::uint32_t hit = mask;
                    while (hit) {
                        int c = std::countr_zero(hit);
                        hit &= hit - 1;
                        log_elim(z, c, reason);
                        if (conflict_) return;
                    }
                }
            }
        }
    }

    void tick() {
        ++nodes_;
        if (node_limit_ && nodes_ > *node_limit_) throw BudgetStop{};
        if ((nodes_ & 0x3ffu) == 0) {
            if (deadline_ && Clock::now() > *deadline_) throw BudgetStop{};
            if (cancel_ && cancel_->load(std::memory_order_relaxed)) throw BudgetStop{};
        }
    }

    /// Among centre's neighbours coloured c_other, looks for two joined by a
    /// path through coloured {c_centre, c_other} vertices avoiding centre;
    /// such a path plus centre is a bicoloured cycle. Returns the trail
    /// positions of the path. BFS keeps the witness path short, which keeps
    /// conflict reasons small and backjumps sharp.
    std::optional<std::vector<int>> two_class_path(int centre, int c_centre, int c_other) {
        ++stat_cycle_checks_;
        const int token = ++stamp_token_;
        for (int s : g_.neighbours(centre)) {
            if (colour_[s] != c_other) continue;
            if (stamp_[s] == token) {
                std::vector<int> positions;
                for (int x = s; x != -1; x = parent_[x]) positions.push_back(pos_of_[x]);
                return positions;
            }
            stamp_[s] = token;
            parent_[s] = -1;
            bfs_queue_.clear();
            bfs_queue_.push_back(s);
            for (size_t head = 0; head < bfs_queue_.size(); ++head) {
                int u = bfs_queue_[head];
                for (int w : g_.neighbours(u)) {
                    if (w == centre) continue;
                    int cw = colour_[w];
                    if (cw != c_centre && cw != c_other) continue;
                    if (stamp_[w] != token) {
                        stamp_[w] = token;
                        parent_[w] = u;
                        bfs_queue_.push_back(w);
                    }
                }
            }
        }
        return std::nullopt;
    }

    void raise_conflict_at(int v) {
        conflict_ = true;
        conflict_positions_.clear();
        for (int c = 0; c < k_; ++c) {
            const auto& r = elim_reason_[static_cast<size_t>(v) * k_ + c];
            conflict_positions_.insert(conflict_positions_.end(), r.begin(), r.end());
        }
    }

    void log_elim(int v, int c, std::vector<int> reason) {
        if (elim_[v] & (1u << c)) return;  // keep the earliest justification
        elim_[v] |= 1u << c;
        elim_reason_[static_cast<size_t>(v) * k_ + c] = std::move(reason);
        elim_log_.emplace_back(v, c);
        int cnt = avail_count(v);
        if (cnt == 0)
            raise_conflict_at(v);
        else if (cnt == 1)
            force_queue_.push_back(v);
        else if (cnt == 2 && acyclic_)
            pair_queue_.push_back(v);
    }

    void assign(int v, int c, bool decision, std::vector<int> reason) {
        tick();
        if (decision) ++stat_decisions_; else ++stat_forced_;
        if (decision && std::getenv("ACYCLIC_SOLVER_TRACE") && stat_decisions_ < 300)
            std::fprintf(stderr, "D%llu L%zu v%d c%d avail=%x\n",
                         (unsigned long long)stat_decisions_, decisions_.size(), v, c, avail_mask(v));
        if (decisions_.size() > stat_max_depth_) stat_max_depth_ = decisions_.size();
        if (decision) decisions_.back().tried |= 1u << c;
        trail_.push_back(
            {v, c, decision, static_cast<int>(decisions_.size()), elim_log_.size(), std::move(reason)});
        pos_of_[v] = static_cast<int>(trail_.size()) - 1;
        colour_[v] = c;
        for (int w : g_.neighbours(v)) ++colcnt_[static_cast<size_t>(w) * k_ + c];

        if (acyclic_) {
            // The assignment itself may close a cycle among coloured vertices.
            for (int c2 = 0; c2 < k_; ++c2) {
                if (c2 == c || colcnt_[static_cast<size_t>(v) * k_ + c2] < 2) continue;
                if (auto path = two_class_path(v, c, c2)) {
                    conflict_ = true;
                    conflict_positions_ = std::move(*path);
                    conflict_positions_.push_back(pos_of_[v]);
                    return;
                }
            }
        }
        for (int w : diff_adj_[v]) {
            if (colour_[w] != -1) continue;
            log_elim(w, c, {pos_of_[v]});
            if (conflict_) return;
        }
        if (!acyclic_) return;
        // Cycle-driven eliminations: a neighbour that now sees two c-coloured
        // neighbours may have candidate colours that would close a cycle.
        for (int w : g_.neighbours(v)) {
            if (colour_[w] != -1 || colcnt_[static_cast<size_t>(w) * k_ + c] < 2) continue;
            std::uint32_t mask = avail_mask(w);
            while (mask) {
                int c2 = std::countr_zero(mask);
                mask &= mask - 1;
                if (c2 == c) continue;
                if (auto path = two_class_path(w, c2, c)) {
                    log_elim(w, c2, std::move(*path));
                    if (conflict_) return;
                }
            }
        }
    }

    void drain_forced() {
        while (!conflict_ && (!force_queue_.empty() || !pair_queue_.empty())) {
            if (!force_queue_.empty()) {
                int v = force_queue_.front();
                force_queue_.pop_front();
                if (colour_[v] != -1) continue;
                std::uint32_t mask = avail_mask(v);
                if (std::popcount(mask) != 1) continue;
                int c = std::countr_zero(mask);
                std::vector<int> reason;
                for (int c2 = 0; c2 < k_; ++c2) {
                    if (c2 == c) continue;
                    const auto& r = elim_reason_[static_cast<size_t>(v) * k_ + c2];
                    reason.insert(reason.end(), r.begin(), r.end());
                }
                assign(v, c, /*decision=*/false, std::move(reason));
                continue;
            }
            int v = pair_queue_.front();
            pair_queue_.pop_front();
            if (colour_[v] != -1 || avail_count(v) != 2) continue;
            pair_propagate(v);
        }
    }

    void pop_trail_to(size_t keep) {
        while (trail_.size() > keep) {
            const TrailEntry& e = trail_.back();
            while (elim_log_.size() > e.elim_mark) {
                auto [v, c] = elim_log_.back();
                elim_log_.pop_back();
                elim_[v] &= ~(1u << c);
                elim_reason_[static_cast<size_t>(v) * k_ + c].clear();
            }
            for (int w : g_.neighbours(e.vertex)) --colcnt_[static_cast<size_t>(w) * k_ + e.colour];
            colour_[e.vertex] = -1;
            pos_of_[e.vertex] = -1;
            trail_.pop_back();
        }
    }

    /// Decision levels reachable from the given trail positions through
    /// forcing reasons.
    std::vector<int> expand_levels(const std::vector<int>& positions) {
        std::vector<char> seen(trail_.size(), 0);
        std::vector<int> stack = positions;
        std::vector<int> levels;
        while (!stack.empty()) {
            int p = stack.back();
            stack.pop_back();
            if (p < 0 || seen[p]) continue;
            seen[p] = 1;
            const TrailEntry& e = trail_[p];
            if (e.decision) {
                levels.push_back(e.level);
            } else {
                stack.insert(stack.end(), e.reason.begin(), e.reason.end());
            }
        }
        std::sort(levels.begin(), levels.end());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
        return levels;
    }

    /// Returns false when the search space is exhausted (proven no).
    bool resolve_conflict() {
        ++stat_conflicts_;
        if (std::getenv("ACYCLIC_SOLVER_TRACE") && stat_conflicts_ < 60) {
            std::fprintf(stderr, "CONFLICT %llu at depth %zu positions:",
                         (unsigned long long)stat_conflicts_, decisions_.size());
            for (int p : conflict_positions_) std::fprintf(stderr, " %d(v%d)", p, trail_[p].vertex);
            std::fprintf(stderr, "\n");
        }
        std::vector<int> levels;
        if (opt_.backjumping) levels = expand_levels(conflict_positions_);
        if (opt_.backjumping && !levels.empty())
            stat_jump_total_ += decisions_.size() - levels.back();
        conflict_ = false;
        conflict_positions_.clear();
        force_queue_.clear();
        pair_queue_.clear();

        while (true) {
            int target;
            if (opt_.backjumping) {
                if (levels.empty()) return false;
                target = levels.back();
            } else {
                if (decisions_.empty()) return false;
                target = static_cast<int>(decisions_.size());
            }
            decisions_.resize(target);
            DecisionRec& rec = decisions_.back();
            pop_trail_to(rec.trail_pos);
            if (opt_.backjumping) {
                for (int l : levels)
                    if (l != target) rec.accum.push_back(l);
            }
            std::uint32_t untried = avail_mask(rec.vertex) & ~rec.tried;
            if (untried) {
                int c = std::countr_zero(untried);
                assign(rec.vertex, c, /*decision=*/true, {});
                return true;
            }
            // All values exhausted: bubble the accumulated conflict up.
            if (opt_.backjumping) {
                std::vector<int> pre;
                for (int c = 0; c < k_; ++c) {
                    const auto& r = elim_reason_[static_cast<size_t>(rec.vertex) * k_ + c];
                    pre.insert(pre.end(), r.begin(), r.end());
                }
                std::vector<int> from_elims = expand_levels(pre);
                levels = std::move(rec.accum);
                levels.insert(levels.end(), from_elims.begin(), from_elims.end());
                std::sort(levels.begin(), levels.end());
                levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
                while (!levels.empty() && levels.back() >= target) levels.pop_back();
            }
            decisions_.pop_back();
        }
    }

    int select() const {
        // fewest available colours; ties broken towards high degree so the
        // search anchors in the constrained part of gadget graphs
        int best = -1, best_count = k_ + 1, best_degree = -1;
        for (int v = 0; v < n_; ++v) {
            if (colour_[v] != -1) continue;
            int c = avail_count(v);
            int d = g_.degree(v);
            if (c < best_count || (c == best_count && d > best_degree)) {
                best = v;
                best_count = c;
                best_degree = d;
            }
        }
        return best;
    }

    const Graph& g_;
    int n_;
    int k_;
    bool acyclic_;
    SolveOptions opt_;
    std::uint32_t full_mask_ = 0;

    std::vector<int> colour_, pos_of_;
    std::vector<std::uint32_t> elim_;
    std::vector<std::vector<int>> elim_reason_;
    std::vector<int> colcnt_;
    std::vector<int> stamp_;
    std::vector<int> aux_parent_;
    std::vector<char> aux_in_s_, aux_in_pair_;
    int stamp_token_ = 0;
    std::vector<int> parent_;
    std::vector<int> bfs_queue_;

    std::vector<std::vector<int>> diff_adj_;
    std::vector<TrailEntry> trail_;
    std::vector<std::pair<int, int>> elim_log_;
    std::vector<DecisionRec> decisions_;
    std::deque<int> force_queue_;
    std::deque<int> pair_queue_;
    bool conflict_ = false;
    std::vector<int> conflict_positions_;

    std::uint64_t nodes_ = 0;
    std::uint64_t stat_decisions_ = 0, stat_forced_ = 0, stat_conflicts_ = 0,
                  stat_jump_total_ = 0, stat_cycle_checks_ = 0, stat_pair_elims_ = 0,
                  stat_max_depth_ = 0;
    std::optional<std::uint64_t> node_limit_;
    std::optional<Clock::time_point> deadline_;
    std::atomic<bool>* cancel_ = nullptr;
};

void check_witness(const Graph& g, const Colouring& w, bool acyclic) {
    bool ok = acyclic ? is_acyclic_colouring(g, w) : is_proper(g, w);
    if (!ok) throw std::logic_error("solver produced an invalid witness");
}

SolveResult solve_decision(const Graph& g, int k, bool acyclic, const SolveBudget& budget,
                           const SolveOptions& options) {
    const int n = g.vertex_count();
    const long long m = g.edge_count();
    if (k > 31) throw std::invalid_argument("palette sizes above 31 are not supported");
    if (n == 0) return {Outcome::yes, Colouring{k, {}}, 0};
    if (k <= 0) return {Outcome::no, std::nullopt, 0};
    if (acyclic && options.density_prune && m >= 1 &&
        static_cast<long long>(k) * n <= static_cast<long long>(n) + m)
        return {Outcome::no, std::nullopt, 0};
    if (acyclic && options.regular_prune) {
        int d = g.degree(0);
        if (d >= 1 && k < (d + 4) / 2 && is_d_regular(g, d)) return {Outcome::no, std::nullopt, 0};
    }
    if (k >= n) {
        Colouring identity{k, std::vector<int>(n)};
        for (int v = 0; v < n; ++v) identity.assignment[v] = v;
        check_witness(g, identity, acyclic);
        return {Outcome::yes, std::move(identity), 0};
    }

    if (options.workers > 1) {
        // Split the first branching vertex's colours across workers. The
        // yes/no answer matches the sequential solve; the witness may not.
        std::atomic<bool> cancel{false};
        SolveOptions seq = options;
        seq.workers = 1;
        std::vector<std::future<SolveResult>> futures;
        futures.reserve(k);
        for (int c = 0; c < k; ++c) {
            futures.push_back(std::async(std::launch::async, [&, c]() {
                Engine e(g, k, acyclic, seq);
                SolveResult r = e.run(budget, std::make_pair(0, c), &cancel);
                if (r.outcome == Outcome::yes) cancel.store(true);
                return r;
            }));
        }
        SolveResult agg{Outcome::no, std::nullopt, 0};
        bool saw_unknown = false;
        for (auto& f : futures) {
            SolveResult r = f.get();
            agg.nodes += r.nodes;
            if (r.outcome == Outcome::yes && agg.outcome != Outcome::yes) {
                agg.outcome = Outcome::yes;
                agg.witness = std::move(r.witness);
            } else if (r.outcome == Outcome::unknown) {
                saw_unknown = true;
            }
        }
        if (agg.outcome != Outcome::yes && saw_unknown) agg.outcome = Outcome::unknown;
        if (agg.outcome == Outcome::yes) check_witness(g, *agg.witness, acyclic);
        return agg;
    }

    Engine e(g, k, acyclic, options);
    SolveResult r = e.run(budget, std::nullopt, nullptr);
    if (r.outcome == Outcome::yes) check_witness(g, *r.witness, acyclic);
    return r;
}

/// Would extending the partial assignment with col[v] = c close a
/// bicoloured cycle through v? A cycle through v in classes {c, c2} must
/// enter and leave through two c2-coloured neighbours of v, so it exists
/// iff two such neighbours are joined by a path of coloured {c, c2}
/// vertices avoiding v.
bool closes_cycle(const Graph& g, const std::vector<int>& col, int v, int c, int k,
                  std::vector<int>& stamp, int& token, std::vector<int>& stack) {
    std::array<int, 32> cnt{};
    for (int w : g.neighbours(v))
        if (col[w] >= 0) ++cnt[col[w]];
    for (int c2 = 0; c2 < k; ++c2) {
        if (c2 == c || cnt[c2] < 2) continue;
        ++token;
        for (int s : g.neighbours(v)) {
            if (col[s] != c2) continue;
            if (stamp[s] == token) return true;
            stamp[s] = token;
            stack.clear();
            stack.push_back(s);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : g.neighbours(u)) {
                    if (w == v || (col[w] != c && col[w] != c2)) continue;
                    if (stamp[w] != token) {
                        stamp[w] = token;
                        stack.push_back(w);
                    }
                }
            }
        }
    }
    return false;
}

struct Enumerator {
    const Graph& g;
    int k;
    std::uint64_t cap;
    bool acyclic;
    std::optional<Clock::time_point> deadline;
    EnumerateResult out;
    std::vector<int> col, stamp, stack;
    int token = 0;
    std::uint64_t steps = 0;
    bool stopped = false;

    void rec(int v) {
        if (stopped) return;
        if (deadline && (++steps & 0xfffu) == 0 && Clock::now() > *deadline) {
            out.budget_exhausted = true;
            stopped = true;
            return;
        }
        if (v == g.vertex_count()) {
            if (out.colourings.size() == cap) {
                out.overflow = true;
                stopped = true;
                return;
            }
            out.colourings.push_back(Colouring{k, col});
            return;
        }
        for (int c = 0; c < k && !stopped; ++c) {
            bool ok = true;
            for (int w : g.neighbours(v))
                if (col[w] == c) {
                    ok = false;
                    break;
                }
            if (ok && acyclic && closes_cycle(g, col, v, c, k, stamp, token, stack)) ok = false;
            if (ok) {
                col[v] = c;
                rec(v + 1);
                col[v] = -1;
            }
        }
    }
};

EnumerateResult enumerate_colourings(const Graph& g, int k, std::uint64_t cap, bool acyclic,
                                     std::optional<std::chrono::milliseconds> wall) {
    if (k < 0 || k > 31) throw std::invalid_argument("palette size out of range");
    const int n = g.vertex_count();
    if (n == 0) {
        EnumerateResult result;
        result.colourings.push_back(Colouring{k, {}});
        return result;
    }
    if (k == 0) return {};
    Enumerator e{g, k, cap, acyclic};
    if (wall) e.deadline = Clock::now() + *wall;
    e.col.assign(n, -1);
    e.stamp.assign(n, 0);
    e.rec(0);
    return std::move(e.out);
}

}  // namespace

SolveResult is_k_acyclic_colourable(const Graph& g, int k, const SolveBudget& budget,
                                    const SolveOptions& options) {
    return solve_decision(g, k, /*acyclic=*/true, budget, options);
}

SolveResult is_k_colourable(const Graph& g, int k, const SolveBudget& budget,
                            const SolveOptions& options) {
    return solve_decision(g, k, /*acyclic=*/false, budget, options);
}

NumberResult acyclic_chromatic_number(const Graph& g, const SolveBudget& budget,
                                      const SolveOptions& options) {
    const int n = g.vertex_count();
    const long long m = g.edge_count();
    if (n == 0) return {0, 0};
    if (m == 0) return {1, 0};

    std::optional<Clock::time_point> deadline;
    if (budget.wall_limit) deadline = Clock::now() + *budget.wall_limit;
    std::uint64_t used = 0;

    int k = static_cast<int>(
        std::max<long long>(1, Rational::make(n + m, n).strict_ceil()));
    for (;; ++k) {
        SolveBudget inner;
        if (budget.node_limit) {
            if (used >= *budget.node_limit) return {std::nullopt, used};
            inner.node_limit = *budget.node_limit - used;
        }
        if (deadline) {
            auto left = std::chrono::duration_cast<std::chrono::milliseconds>(*deadline -
                                                                              Clock::now());
            if (left.count() <= 0) return {std::nullopt, used};
            inner.wall_limit = left;
        }
        SolveResult r = solve_decision(g, k, true, inner, options);
        used += r.nodes;
        if (r.outcome == Outcome::yes) return {k, used};
        if (r.outcome == Outcome::unknown) return {std::nullopt, used};
    }
}

EnumerateResult enumerate_acyclic_colourings(const Graph& g, int k, std::uint64_t cap,
                                             std::optional<std::chrono::milliseconds> wall) {
    return enumerate_colourings(g, k, cap, true, wall);
}

EnumerateResult enumerate_proper_colourings(const Graph& g, int k, std::uint64_t cap,
                                            std::optional<std::chrono::milliseconds> wall) {
    return enumerate_colourings(g, k, cap, false, wall);
}

Rational max_average_degree(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0 || n > 20) throw std::invalid_argument("mad sweep requires 1 <= n <= 20");
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    long long best_2e = 0, best_n = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int edges = 0;
        for (std::uint32_t rest = mask; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            edges += std::popcount(adj[v] & mask & ((1u << v) - 1u));
        }
        int size = std::popcount(mask);
        if (static_cast<long long>(2 * edges) * best_n > best_2e * size) {
            best_2e = 2 * edges;
            best_n = size;
        }
    }
    return Rational::make(best_2e, best_n);
}

BoundReport bound_report(const Graph& g, bool enable_mad) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("bound_report requires a non-empty vertex set");
    BoundReport report;
    report.density_bound = Rational::make(n + g.edge_count(), n);
    int d = g.degree(0);
    if (d >= 1 && is_d_regular(g, d)) report.regular_bound = (d + 4) / 2;
    if (enable_mad) {
        if (n > 20)
            throw std::invalid_argument("mad computation refused beyond 20 vertices");
        Rational mad = max_average_degree(g);
        report.mad_bound = Rational::make(2 * mad.den + mad.num, 2 * mad.den);
    }
    return report;
}

bool trivial_yes_threshold(int k, int d) {
    if (k < 3) throw std::invalid_argument("trivial_yes_threshold requires k >= 3");
    if (d < 0) throw std::invalid_argument("degree must be non-negative");
    if (d >= k) return false;           // 0.38 k^(3/4) < k for all k >= 1
    if (d > 10'000'000) return false;   // keeps the exact comparison in range
    using big = __int128;
    big lhs = big(d) * d * d * d * 100'000'000LL;  // d^4 * 100^4
    big rhs = big(2'085'136LL) * k * k * k;        // 38^4 * k^3
    return lhs <= rhs;
}

long long npc_degree_bound(int k) {
    if (k < 3) throw std::invalid_argument("npc_degree_bound requires k >= 3");
    long long s = static_cast<long long>(std::sqrt(static_cast<double>(k)));
    while (s * s < k) ++s;
    while (s >= 1 && (s - 1) * (s - 1) >= k) --s;
    return static_cast<long long>(k) * (k - 1 + s);
}

RegularRegime regular_regime(int k, int d) {
    if (k < 3) throw std::invalid_argument("regular_regime requires k >= 3");
    if (d < 0) throw std::invalid_argument("degree must be non-negative");
    int hi = std::max(2 * k - 3, k + 1);
    if (d >= k + 1 && d <= hi) return RegularRegime::candidate_npc;
    if (d >= 2 * k - 2) return RegularRegime::always_no;
    return RegularRegime::open;
}

}  // namespace acyclic
