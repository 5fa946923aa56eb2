#pragma once

// Isomorph-free backtracking construction of orbit matrices.
//
// Rows are added in stages: each stage fixes the block-orbit length of its
// rows and may pin per-class entry constraints (used to build the rows
// through fixed points before the rest, the way the tables in the literature
// are organized).  A node is kept only if it is the lexicographically
// minimal representative of its class under within-stage row permutations
// and within-class column permutations; deleting the last row of a minimal
// matrix leaves a minimal matrix, so the generation is orderly and needs no
// global seen-set.  Depth counts are therefore counts of inequivalent
// partial matrices reachable in stage order.
//
// Parallel runs expand a frontier single-threaded, hand frontier subtrees to
// workers, and merge by frontier order; every reported number is identical
// for any worker count.

#include <atomic>
#include <thread>

#include "omf/canonical.hpp"
#include "omf/design.hpp"
#include "omf/kernel.hpp"
#include "omf/row_types.hpp"

namespace omf {

struct RowStage {
    int block_len = 0;
    int count = 0;
    std::vector<ClassPin> pins;  // per point class, may be empty
};

// One stage per distinct block-orbit length, ascending, no pins.
inline std::vector<RowStage> flat_stages(const OrbitDistribution& dist) {
    std::vector<RowStage> out;
    for (const OrbitClass& cls : dist.block_classes())
        out.push_back(RowStage{cls.size, cls.count(), {}});
    return out;
}

// Stage plan that saturates the fixed-point columns first: fixed blocks,
// then the rows carrying exactly one fixed point, then fixed-point-free
// rows.  Applicable when the fixed-block type is unique, the fixed blocks
// already cover every fixed-point pair lambda times (so no later block can
// carry two fixed points), and the remaining fixed-point incidences are
// consumed by a unique number of rows of a single block-orbit length.
// Falls back to the flat plan whenever any of this fails to hold.
inline std::vector<RowStage> incident_stages(const DesignParams& params,
                                             const OrbitDistribution& dist) {
    std::vector<OrbitClass> bcls = dist.block_classes();
    std::vector<OrbitClass> pcls = dist.point_classes();
    if (bcls.empty() || bcls[0].size != 1 || pcls.empty() || pcls[0].size != 1)
        return flat_stages(dist);
    int u = bcls[0].count();   // fixed blocks
    int up = pcls[0].count();  // fixed points
    std::vector<RowType> ft = fixed_block_types(params, dist);
    if (ft.size() != 1) return flat_stages(dist);
    long long a = 0;  // fixed points per fixed block
    for (int c = pcls[0].begin; c < pcls[0].end; ++c) a += ft[0].entries[c];
    if (static_cast<long long>(u) * a * (a - 1) !=
        static_cast<long long>(up) * (up - 1) * params.lambda)
        return flat_stages(dist);
    long long remaining = static_cast<long long>(up) * params.k -
                          static_cast<long long>(u) * a;
    if (remaining < 0) return flat_stages(dist);

    // A row of block orbit length W with a fixed-point incidence adds W to
    // that point column's mass.  Every fixed-point column already carries at
    // least u times the smallest fixed-point entry of the fixed block type,
    // so only orbits with W below the leftover column mass can be incident.
    long long min_fixed_entry = params.k;
    for (int c = pcls[0].begin; c < pcls[0].end; ++c)
        min_fixed_entry = std::min<long long>(min_fixed_entry, ft[0].entries[c]);
    long long incident_cap = params.k - static_cast<long long>(u) * min_fixed_entry;

    // The remaining fixed-point incidences must decompose uniquely into
    // full orbits of a single length.
    int pick_len = 0, pick_count = 0, solutions = 0;
    for (std::size_t ci = 1; ci < bcls.size(); ++ci) {
        int W = bcls[ci].size;
        if (W > incident_cap) continue;
        if (remaining % W == 0 && remaining / W <= bcls[ci].count()) {
            ++solutions;
            pick_len = W;
            pick_count = static_cast<int>(remaining / W);
        }
    }
    if (remaining == 0) {
        solutions = 1;
        pick_count = 0;
    }
    if (solutions != 1) return flat_stages(dist);
    // Mixed-length decompositions would also have to be ruled out; only
    // accept when no other class could contribute at all.
    if (remaining > 0) {
        for (std::size_t ci = 1; ci < bcls.size(); ++ci) {
            int W = bcls[ci].size;
            if (W != pick_len && W <= incident_cap && W <= remaining)
                return flat_stages(dist);
        }
    }

    std::vector<RowStage> out;
    out.push_back(RowStage{1, u, {}});
    std::vector<ClassPin> one_pin(pcls.size());
    one_pin[0] = ClassPin{1, 1};
    std::vector<ClassPin> zero_pin(pcls.size());
    zero_pin[0] = ClassPin{0, 0};
    for (std::size_t ci = 1; ci < bcls.size(); ++ci) {
        int W = bcls[ci].size;
        int n = bcls[ci].count();
        if (W == pick_len && pick_count > 0) {
            out.push_back(RowStage{W, pick_count, one_pin});
            if (n - pick_count > 0) out.push_back(RowStage{W, n - pick_count, zero_pin});
        } else {
            out.push_back(RowStage{W, n, zero_pin});
        }
    }
    return out;
}

struct SearchSpec {
    DesignParams params;
    OrbitDistribution dist;
    std::vector<RowStage> stages;    // empty: incident_stages(params, dist)
    std::vector<Row> prescribed_rows;
    int target_depth = -1;           // -1: all rows
    bool count_only = false;
    std::size_t store_limit = 10000;
    // Discards branches whose columns can no longer be filled by the
    // remaining rows.  Sound for complete-matrix classification; leave off
    // when intermediate partial-matrix counts are the result.
    bool prune_unfillable_columns = false;
};

struct SearchReport {
    std::vector<std::uint64_t> depth_counts;      // [d] = inequivalent matrices with d rows
    std::vector<std::uint64_t> depth_candidates;  // arithmetic-valid extensions tried
    std::uint64_t nodes_expanded = 0;
    int max_depth = 0;                            // deepest d with depth_counts[d] > 0
    std::vector<PartialOrbitMatrix> matrices;     // retained at target depth
    bool store_limit_hit = false;
    std::uint64_t content_hash = 0;               // XOR of class-key hashes at target depth
};

namespace detail {

struct StageCtx {
    RowStage stage;
    std::vector<RowType> types;
    int first_row = 0;
};

struct SearchCtx {
    DesignParams P;
    OrbitDistribution D;
    long long target_pair = 0;  // L * lambda, the uniform scaled pair target
    std::vector<OrbitClass> classes;
    std::vector<StageCtx> stages;
    std::vector<int> stage_of_row;
    std::vector<RowSegments> segs_at;              // per depth
    std::vector<std::vector<long long>> future_cap;  // [depth][class] per-column capacity
    int t = 0;
    int target = 0;
    bool count_only = false;
    bool prune_capacity = false;
    std::size_t store_limit = 0;
};

struct Node {
    std::vector<Row> rows;
    std::vector<int> lens;
    std::vector<long long> budget;  // per column: k*omega - sum Omega_i*gamma_ir
};

// Columns of one class with identical entry history; they are still
// interchangeable, so a new row places a non-increasing tuple on them.
struct ColGroup {
    int cls = 0;
    std::vector<int> cols;
    long long budget = 0;
};

inline std::vector<ColGroup> column_groups(const SearchCtx& ctx, const Node& nd) {
    std::vector<ColGroup> groups;
    for (std::size_t ci = 0; ci < ctx.classes.size(); ++ci) {
        const OrbitClass& cls = ctx.classes[ci];
        std::vector<int> order(cls.end - cls.begin);
        for (int c = cls.begin; c < cls.end; ++c) order[c - cls.begin] = c;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            for (const Row& r : nd.rows) {
                if (r[a] != r[b]) return r[a] > r[b];
            }
            return a < b;
        });
        std::size_t i = 0;
        while (i < order.size()) {
            std::size_t j = i;
            auto same = [&](int a, int b) {
                for (const Row& r : nd.rows)
                    if (r[a] != r[b]) return false;
                return true;
            };
            ColGroup g;
            g.cls = static_cast<int>(ci);
            while (j < order.size() && same(order[i], order[j])) {
                g.cols.push_back(order[j]);
                ++j;
            }
            g.budget = nd.budget[g.cols[0]];
            groups.push_back(std::move(g));
            i = j;
        }
    }
    return groups;
}

// Enumerates all placements of one row type onto the column groups and
// invokes sink on every arithmetically valid candidate row.
class RowPlacer {
  public:
    RowPlacer(const SearchCtx& ctx, const Node& nd, const RowType& type,
              bool final_row)
        : ctx_(ctx), nd_(nd), final_(final_row) {
        groups_ = column_groups(ctx, nd);
        int nc = static_cast<int>(ctx.classes.size());
        avail_.assign(nc, {});
        for (int ci = 0; ci < nc; ++ci) {
            const OrbitClass& cls = ctx.classes[ci];
            avail_[ci].assign(kMaxEntry + 1, 0);
            for (int c = cls.begin; c < cls.end; ++c)
                ++avail_[ci][type.entries[c]];
        }
        W_ = type.block_len;
        int nprev = static_cast<int>(nd.rows.size());
        S_.assign(nprev, 0);
        // Max remaining pair contribution after each group, from static caps.
        rem_.assign(groups_.size() + 1, std::vector<long long>(nprev, 0));
        for (int gi = static_cast<int>(groups_.size()) - 1; gi >= 0; --gi) {
            const ColGroup& g = groups_[gi];
            long long coeff = ctx.D.scale / ctx.classes[g.cls].size;
            long long cap = static_cast<long long>(group_cap(g)) * g.cols.size();
            for (int j = 0; j < nprev; ++j) {
                long long gj = nd.rows[j][g.cols[0]];
                rem_[gi][j] = rem_[gi + 1][j] + coeff * gj * cap;
            }
        }
        row_.assign(ctx.D.num_point_orbits(), 0);
    }

    template <typename Sink>
    void run(Sink&& sink) {
        place_group(0, std::forward<Sink>(sink));
    }

  private:
    static constexpr int kMaxEntry = 64;

    int group_cap(const ColGroup& g) const {
        int cap = 0;
        for (int e = kMaxEntry; e >= 0; --e)
            if (avail_[g.cls][e] > 0) {
                cap = e;
                break;
            }
        long long bc = g.budget / W_;
        return static_cast<int>(std::min<long long>(cap, bc));
    }

    int group_min(const ColGroup& g, int depth_after) const {
        long long need = 0;
        if (final_) {
            need = g.budget;  // exact fill handled by bounds below
        } else if (ctx_.prune_capacity) {
            need = g.budget - ctx_.future_cap[depth_after][g.cls];
        }
        if (need <= 0) return 0;
        return static_cast<int>((need + W_ - 1) / W_);
    }

    template <typename Sink>
    void place_group(std::size_t gi, Sink&& sink) {
        int nprev = static_cast<int>(nd_.rows.size());
        if (gi == groups_.size()) {
            for (int j = 0; j < nprev; ++j)
                if (S_[j] != ctx_.target_pair) return;
            sink(row_);
            return;
        }
        const ColGroup& g = groups_[gi];
        int emin = group_min(g, static_cast<int>(nd_.rows.size()) + 1);
        int emax = group_cap(g);
        if (final_) {
            // The last row must saturate every column exactly.
            if (g.budget % W_ != 0) return;
            long long e = g.budget / W_;
            if (e < emin || e > emax) return;
            emin = emax = static_cast<int>(e);
        }
        place_slot(gi, 0, emin, emax, std::forward<Sink>(sink));
    }

    // Entries are non-decreasing along a group's columns: any other order
    // within interchangeable columns cannot be lexicographically minimal.
    template <typename Sink>
    void place_slot(std::size_t gi, std::size_t si, int prev, int emax, Sink&& sink) {
        const ColGroup& g = groups_[gi];
        int nprev = static_cast<int>(nd_.rows.size());
        if (si == g.cols.size()) {
            for (int j = 0; j < nprev; ++j) {
                if (S_[j] > ctx_.target_pair) return;
                if (S_[j] + rem_[gi + 1][j] < ctx_.target_pair) return;
            }
            place_group(gi + 1, std::forward<Sink>(sink));
            return;
        }
        long long coeff = ctx_.D.scale / ctx_.classes[g.cls].size;
        for (int e = prev; e <= emax; ++e) {
            if (avail_[g.cls][e] == 0) continue;
            if (static_cast<long long>(W_) * e > g.budget) continue;
            --avail_[g.cls][e];
            row_[g.cols[si]] = static_cast<Entry>(e);
            bool ok = true;
            for (int j = 0; j < nprev; ++j) {
                S_[j] += coeff * nd_.rows[j][g.cols[si]] * e;
                if (S_[j] > ctx_.target_pair) ok = false;
            }
            if (ok) place_slot(gi, si + 1, e, emax, std::forward<Sink>(sink));
            for (int j = 0; j < nprev; ++j)
                S_[j] -= coeff * nd_.rows[j][g.cols[si]] * e;
            row_[g.cols[si]] = 0;
            ++avail_[g.cls][e];
        }
    }

    const SearchCtx& ctx_;
    const Node& nd_;
    bool final_;
    int W_ = 0;
    std::vector<ColGroup> groups_;
    std::vector<std::vector<int>> avail_;  // per class: entry value -> count left
    std::vector<long long> S_;             // scaled pair sums vs previous rows
    std::vector<std::vector<long long>> rem_;
    Row row_;
};

struct Tally {
    std::vector<std::uint64_t> counts;
    std::vector<std::uint64_t> candidates;
    std::uint64_t expanded = 0;
    std::uint64_t hash = 0;
    std::vector<PartialOrbitMatrix> kept;
    bool store_hit = false;
};

inline void finalize_report(SearchReport& rep, Tally& total, int target,
                            std::size_t store_limit) {
    rep.depth_counts = std::move(total.counts);
    rep.depth_candidates = std::move(total.candidates);
    rep.nodes_expanded = total.expanded;
    rep.content_hash = total.hash;
    rep.store_limit_hit = total.store_hit;
    rep.matrices = std::move(total.kept);
    if (rep.matrices.size() > store_limit) {
        rep.matrices.resize(store_limit);
        rep.store_limit_hit = true;
    }
    std::sort(rep.matrices.begin(), rep.matrices.end(),
              [](const PartialOrbitMatrix& x, const PartialOrbitMatrix& y) {
                  return x.rows < y.rows;
              });
    for (int d = 0; d <= target; ++d)
        if (rep.depth_counts[d] > 0) rep.max_depth = d;
}

inline void merge_into(Tally& into, const Tally& from, std::size_t store_limit) {
    for (std::size_t d = 0; d < from.counts.size(); ++d) {
        into.counts[d] += from.counts[d];
        into.candidates[d] += from.candidates[d];
    }
    into.expanded += from.expanded;
    into.hash ^= from.hash;
    into.store_hit = into.store_hit || from.store_hit;
    for (const PartialOrbitMatrix& m : from.kept) {
        if (into.kept.size() < store_limit)
            into.kept.push_back(m);
        else
            into.store_hit = true;
    }
}

class Searcher {
  public:
    Searcher(const SearchCtx& ctx) : ctx_(ctx) {}

    // Generates canonical children of nd and feeds them to visit(child).
    template <typename Visit>
    void children(const Node& nd, Tally& tally, Visit&& visit) {
        int d = static_cast<int>(nd.rows.size());
        const StageCtx& sc = ctx_.stages[ctx_.stage_of_row[d]];
        bool final_row = (d + 1 == ctx_.t);
        ++tally.expanded;
        for (const RowType& type : sc.types) {
            RowPlacer placer(ctx_, nd, type, final_row);
            placer.run([&](const Row& cand) {
                ++tally.candidates[d + 1];
                Node child;
                child.rows = nd.rows;
                child.rows.push_back(cand);
                if (!is_minimal(child.rows, ctx_.segs_at[d + 1], ctx_.D)) return;
                child.lens = nd.lens;
                child.lens.push_back(sc.stage.block_len);
                child.budget = nd.budget;
                for (int c = 0; c < ctx_.D.num_point_orbits(); ++c)
                    child.budget[c] -= static_cast<long long>(sc.stage.block_len) * cand[c];
                visit(child);
            });
        }
    }

    void record(const Node& nd, Tally& tally) {
        int d = static_cast<int>(nd.rows.size());
        ++tally.counts[d];
        if (d == ctx_.target) {
            PartialOrbitMatrix m;
            m.params = ctx_.P;
            m.dist = ctx_.D;
            m.rows = nd.rows;
            m.row_lens = nd.lens;
            tally.hash ^= equivalence_key(m).hash;
            if (!ctx_.count_only) {
                if (tally.kept.size() < ctx_.store_limit)
                    tally.kept.push_back(std::move(m));
                else
                    tally.store_hit = true;
            }
        }
    }

    void dfs(const Node& nd, Tally& tally) {
        int d = static_cast<int>(nd.rows.size());
        if (d >= ctx_.target) return;
        children(nd, tally, [&](const Node& child) {
            record(child, tally);
            dfs(child, tally);
        });
    }

  private:
    const SearchCtx& ctx_;
};

}  // namespace detail

namespace detail {

inline SearchCtx build_ctx(const SearchSpec& spec) {
    SearchCtx ctx;
    ctx.P = spec.params;
    ctx.D = spec.dist;
    if (!ctx.P.admissible())
        throw std::invalid_argument("design parameters are not admissible");
    ctx.target_pair = ctx.D.scale * ctx.P.lambda;
    ctx.classes = ctx.D.point_classes();
    ctx.t = ctx.D.num_block_orbits();
    std::vector<RowStage> plan =
        spec.stages.empty() ? incident_stages(ctx.P, ctx.D) : spec.stages;
    // The plan must reproduce the block-orbit multiset in order.
    std::vector<int> plan_lens;
    for (const RowStage& st : plan)
        for (int i = 0; i < st.count; ++i) plan_lens.push_back(st.block_len);
    if (plan_lens != ctx.D.block_sizes)
        throw std::invalid_argument("stage plan does not match the block orbit sizes");
    int row0 = 0;
    for (const RowStage& st : plan) {
        StageCtx sc;
        sc.stage = st;
        sc.first_row = row0;
        TypeQuery q;
        q.params = ctx.P;
        q.dist = ctx.D;
        q.block_len = st.block_len;
        q.pins = st.pins;
        sc.types = enumerate_types(q);
        ctx.stages.push_back(std::move(sc));
        row0 += st.count;
    }
    ctx.stage_of_row.assign(ctx.t, 0);
    for (std::size_t si = 0; si < ctx.stages.size(); ++si)
        for (int i = 0; i < ctx.stages[si].stage.count; ++i)
            ctx.stage_of_row[ctx.stages[si].first_row + i] = static_cast<int>(si);
    ctx.segs_at.assign(ctx.t + 1, {});
    for (int d = 1; d <= ctx.t; ++d) {
        RowSegments segs;
        for (const StageCtx& sc : ctx.stages) {
            int b = sc.first_row;
            int e = std::min(d, sc.first_row + sc.stage.count);
            if (b < e) segs.emplace_back(b, e);
        }
        ctx.segs_at[d] = segs;
    }
    ctx.target = spec.target_depth < 0 ? ctx.t : spec.target_depth;
    if (ctx.target > ctx.t)
        throw std::invalid_argument("target depth exceeds the number of block orbits");
    ctx.count_only = spec.count_only;
    ctx.store_limit = spec.store_limit;
    ctx.prune_capacity = spec.prune_unfillable_columns;
    ctx.future_cap.assign(ctx.t + 1, std::vector<long long>(ctx.classes.size(), 0));
    for (int d = ctx.t - 1; d >= 0; --d) {
        for (std::size_t ci = 0; ci < ctx.classes.size(); ++ci) {
            const StageCtx& sc = ctx.stages[ctx.stage_of_row[d]];
            long long cap = std::min<long long>(ctx.classes[ci].size, ctx.P.k);
            if (ci < sc.stage.pins.size() && sc.stage.pins[ci].cap >= 0)
                cap = std::min<long long>(cap, sc.stage.pins[ci].cap);
            ctx.future_cap[d][ci] =
                ctx.future_cap[d + 1][ci] + cap * sc.stage.block_len;
        }
    }
    return ctx;
}

inline Node root_node(const SearchCtx& ctx, const SearchSpec& spec) {
    Node nd;
    nd.budget.resize(ctx.D.num_point_orbits());
    for (int c = 0; c < ctx.D.num_point_orbits(); ++c)
        nd.budget[c] = ctx.P.k * static_cast<long long>(ctx.D.point_sizes[c]);
    if (spec.prescribed_rows.empty()) return nd;
    int p = static_cast<int>(spec.prescribed_rows.size());
    if (p > ctx.t) throw std::invalid_argument("too many prescribed rows");
    std::vector<Row> rows = spec.prescribed_rows;
    std::vector<int> lens;
    for (int i = 0; i < p; ++i) {
        lens.push_back(ctx.D.block_sizes[i]);
        const Row& r = rows[i];
        if (static_cast<int>(r.size()) != ctx.D.num_point_orbits())
            throw std::invalid_argument("prescribed row has wrong width");
        if (!check_row_sum(r, ctx.P) ||
            row_quadratic(r, ctx.D, lens[i]) != row_quadratic_target(ctx.P, ctx.D, lens[i]) ||
            !dual_integrality_ok(r, ctx.D, lens[i]))
            throw std::invalid_argument("prescribed row " + std::to_string(i + 1) +
                                        " violates the row conditions");
        for (int j = 0; j < i; ++j)
            if (pair_product(rows[j], r, ctx.D, lens[i]) !=
                pair_product_target(ctx.P, ctx.D, lens[i]))
                throw std::invalid_argument("prescribed rows " + std::to_string(j + 1) +
                                            " and " + std::to_string(i + 1) +
                                            " violate the pair condition");
    }
    if (!column_sums_ok(rows, lens, ctx.P, ctx.D, false))
        throw std::invalid_argument("prescribed rows violate the column bound");
    // Canonicalize so the orderly test accepts the subtree.
    nd.rows = minimal_rows(rows, ctx.segs_at[p], ctx.D);
    nd.lens = lens;
    for (int c = 0; c < ctx.D.num_point_orbits(); ++c)
        for (int i = 0; i < p; ++i)
            nd.budget[c] -= static_cast<long long>(lens[i]) * nd.rows[i][c];
    return nd;
}

}  // namespace detail

// All valid canonical one-row extensions of a partial matrix under the
// spec's stage plan, sorted ascending by row content.
inline std::vector<PartialOrbitMatrix> extend_one_row(const PartialOrbitMatrix& m,
                                                      const SearchSpec& spec) {
    detail::SearchCtx ctx = detail::build_ctx(spec);
    int d = m.depth();
    if (d >= ctx.t) return {};
    detail::Node nd;
    nd.rows = m.rows;
    nd.lens = m.row_lens;
    nd.budget.resize(ctx.D.num_point_orbits());
    for (int c = 0; c < ctx.D.num_point_orbits(); ++c) {
        nd.budget[c] = ctx.P.k * static_cast<long long>(ctx.D.point_sizes[c]);
        for (int i = 0; i < d; ++i)
            nd.budget[c] -= static_cast<long long>(m.row_lens[i]) * m.rows[i][c];
    }
    detail::Tally tally;
    tally.counts.assign(ctx.t + 1, 0);
    tally.candidates.assign(ctx.t + 1, 0);
    detail::Searcher searcher(ctx);
    std::vector<PartialOrbitMatrix> out;
    searcher.children(nd, tally, [&](const detail::Node& child) {
        PartialOrbitMatrix pm;
        pm.params = ctx.P;
        pm.dist = ctx.D;
        pm.rows = child.rows;
        pm.row_lens = child.lens;
        out.push_back(std::move(pm));
    });
    std::sort(out.begin(), out.end(),
              [](const PartialOrbitMatrix& x, const PartialOrbitMatrix& y) {
                  return x.rows < y.rows;
              });
    return out;
}

inline SearchReport run_search(const SearchSpec& spec, int workers = 1) {
    detail::SearchCtx ctx = detail::build_ctx(spec);
    detail::Searcher searcher(ctx);
    detail::Node root = detail::root_node(ctx, spec);

    SearchReport rep;
    detail::Tally total;
    total.counts.assign(ctx.t + 1, 0);
    total.candidates.assign(ctx.t + 1, 0);
    int d0 = static_cast<int>(root.rows.size());
    if (d0 > ctx.target)
        throw std::invalid_argument("target depth is below the prescribed rows");
    for (int d = 0; d < d0; ++d) total.counts[d] = 1;
    searcher.record(root, total);

    if (workers < 1) workers = 1;
    // Single-threaded frontier expansion, depth by depth.
    std::vector<detail::Node> frontier{root};
    int fdepth = d0;
    std::size_t want = static_cast<std::size_t>(workers) * 4;
    while (fdepth < ctx.target && (workers > 1 ? frontier.size() < want : false)) {
        std::vector<detail::Node> next;
        for (const detail::Node& nd : frontier)
            searcher.children(nd, total, [&](const detail::Node& child) {
                searcher.record(child, total);
                next.push_back(child);
            });
        frontier = std::move(next);
        ++fdepth;
        if (frontier.empty()) break;
    }

    if (fdepth >= ctx.target || frontier.empty()) {
        if (workers <= 1 && fdepth < ctx.target)
            for (const detail::Node& nd : frontier) searcher.dfs(nd, total);
        detail::finalize_report(rep, total, ctx.target, spec.store_limit);
        return rep;
    }
    if (workers <= 1) {
        for (const detail::Node& nd : frontier) searcher.dfs(nd, total);
        detail::finalize_report(rep, total, ctx.target, spec.store_limit);
        return rep;
    }

    // Workers own frontier indices round-robin; merging in index order keeps
    // every report independent of scheduling.
    std::vector<detail::Tally> part(frontier.size());
    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= frontier.size()) break;
            detail::Tally& t = part[i];
            t.counts.assign(ctx.t + 1, 0);
            t.candidates.assign(ctx.t + 1, 0);
            searcher.dfs(frontier[i], t);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
    for (const detail::Tally& t : part) detail::merge_into(total, t, spec.store_limit);
    detail::finalize_report(rep, total, ctx.target, spec.store_limit);
    return rep;
}

// Deepest row count any partial matrix reaches under the spec's plan.
inline int max_completable_rows(SearchSpec spec, int workers = 1) {
    spec.target_depth = -1;
    spec.count_only = true;
    spec.prune_unfillable_columns = false;
    return run_search(spec, workers).max_depth;
}

}  // namespace omf
