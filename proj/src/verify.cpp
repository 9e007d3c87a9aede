#include "ocycle/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>

namespace ocycle {

nlohmann::json AutomorphismReport::to_json() const {
    nlohmann::json j;
    j["order"] = group_order;
    j["nodes"] = nodes;
    j["millis"] = millis;
    j["budget"] = budget;
    j["budget_exhausted"] = !complete;
    if (sample_nonidentity)
        j["witness"] = *sample_nonidentity;
    else
        j["witness"] = nullptr;
    return j;
}

namespace {

struct AutSearch {
    const TripleSystem& ts;
    int v;
    long long budget;
    bool stop_on_nonidentity;

    std::vector<int> third;  // v*v, -1 where p == q
    std::vector<int> cls;
    std::vector<std::vector<int>> class_members;
    std::vector<int> order;  // branching order: small classes first

    std::vector<int> sigma, sigma_inv;
    std::vector<int> assigned;  // assignment stack, used for propagation and undo

    long long nodes = 0;
    long long count = 0;
    bool aborted = false;  // budget exhausted or early stop
    bool exhausted = false;
    std::optional<std::vector<int>> witness;

    explicit AutSearch(const TripleSystem& t, long long b, bool stop)
        : ts(t), v(t.order()), budget(b), stop_on_nonidentity(stop) {
        third.assign(static_cast<size_t>(v) * v, -1);
        for (const Triple& blk : ts.blocks()) {
            auto set = [&](int a, int bb, int c) {
                third[static_cast<size_t>(a) * v + bb] = c;
                third[static_cast<size_t>(bb) * v + a] = c;
            };
            set(blk.p[0], blk.p[1], blk.p[2]);
            set(blk.p[0], blk.p[2], blk.p[1]);
            set(blk.p[1], blk.p[2], blk.p[0]);
        }
        refine();
        sigma.assign(v, -1);
        sigma_inv.assign(v, -1);
    }

    // Iterated equitable refinement: the fingerprint of a point is the
    // multiset of its blocks seen as class pairs.  Label-invariant, so an
    // automorphism can only map within classes.
    void refine() {
        cls.assign(v, 0);
        std::vector<std::vector<int>> incident(v);
        for (int i = 0; i < static_cast<int>(ts.blocks().size()); ++i)
            for (int x : ts.block(i).p) incident[x].push_back(i);

        int nclasses = 1;
        for (int round = 0; round < v; ++round) {
            std::map<std::pair<int, std::vector<std::pair<int, int>>>, std::vector<int>> buckets;
            for (int p = 0; p < v; ++p) {
                std::vector<std::pair<int, int>> fp;
                fp.reserve(incident[p].size());
                for (int bi : incident[p]) {
                    const Triple& t = ts.block(bi);
                    int a = -1, b = -1;
                    for (int x : t.p) {
                        if (x == p) continue;
                        (a < 0 ? a : b) = x;
                    }
                    int ca = cls[a], cb = cls[b];
                    fp.emplace_back(std::min(ca, cb), std::max(ca, cb));
                }
                std::sort(fp.begin(), fp.end());
                buckets[{cls[p], std::move(fp)}].push_back(p);
            }
            int id = 0;
            for (const auto& [key, members] : buckets) {
                for (int p : members) cls[p] = id;
                ++id;
            }
            if (id == nclasses) break;
            nclasses = id;
        }
        class_members.assign(nclasses, {});
        for (int p = 0; p < v; ++p) class_members[cls[p]].push_back(p);

        order.resize(v);
        for (int p = 0; p < v; ++p) order[p] = p;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            size_t sa = class_members[cls[a]].size();
            size_t sb = class_members[cls[b]].size();
            if (sa != sb) return sa < sb;
            return a < b;
        });
    }

    // Assign sigma[p] = q and propagate every forced third-point image.
    // Returns false on contradiction; the stack mark lets the caller undo.
    bool assign(int p, int q) {
        size_t queue_start = assigned.size();
        if (!set_image(p, q)) return false;
        for (size_t qi = queue_start; qi < assigned.size(); ++qi) {
            int a = assigned[qi];
            int fa = sigma[a];
            for (size_t bj = 0; bj < qi; ++bj) {
                int b = assigned[bj];
                int r = third[static_cast<size_t>(a) * v + b];
                int fr = third[static_cast<size_t>(fa) * v + sigma[b]];
                if (sigma[r] >= 0) {
                    if (sigma[r] != fr) return false;
                } else {
                    if (!set_image(r, fr)) return false;
                }
            }
        }
        return true;
    }

    bool set_image(int p, int q) {
        if (cls[p] != cls[q]) return false;
        if (sigma_inv[q] >= 0) return false;
        sigma[p] = q;
        sigma_inv[q] = p;
        assigned.push_back(p);
        return true;
    }

    void undo_to(size_t mark) {
        while (assigned.size() > mark) {
            int p = assigned.back();
            assigned.pop_back();
            sigma_inv[sigma[p]] = -1;
            sigma[p] = -1;
        }
    }

    void dfs() {
        if (aborted) return;
        int p = -1;
        for (int cand : order) {
            if (sigma[cand] < 0) {
                p = cand;
                break;
            }
        }
        if (p < 0) {
            count++;
            bool identity = true;
            for (int x = 0; x < v && identity; ++x) identity = (sigma[x] == x);
            if (!identity && !witness) witness = sigma;
            if (!identity && stop_on_nonidentity) aborted = true;
            return;
        }
        for (int q : class_members[cls[p]]) {
            if (sigma_inv[q] >= 0) continue;
            if (++nodes > budget) {
                exhausted = true;
                aborted = true;
                return;
            }
            size_t mark = assigned.size();
            if (assign(p, q)) dfs();
            undo_to(mark);
            if (aborted) return;
        }
    }
};

}  // namespace

AutomorphismReport automorphism_order(const TripleSystem& ts, long long node_budget) {
    auto t0 = std::chrono::steady_clock::now();
    AutSearch search(ts, node_budget, /*stop_on_nonidentity=*/false);
    search.dfs();
    auto t1 = std::chrono::steady_clock::now();

    AutomorphismReport rep;
    rep.group_order = search.count;
    rep.complete = !search.exhausted;
    rep.sample_nonidentity = search.witness;
    rep.nodes = search.nodes;
    rep.budget = node_budget;
    rep.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

Tri is_af(const TripleSystem& ts, long long node_budget) {
    AutSearch search(ts, node_budget, /*stop_on_nonidentity=*/true);
    search.dfs();
    if (search.witness) return Tri::False;
    if (search.exhausted) return Tri::Inconclusive;
    return Tri::True;
}

std::optional<OverlapCycle> exhaustive_ocycle_search(const TripleSystem& ts, int order_cap) {
    if (ts.order() > order_cap)
        throw std::invalid_argument("exhaustive_ocycle_search: order " +
                                    std::to_string(ts.order()) + " above cap " +
                                    std::to_string(order_cap));
    size_t b = static_cast<size_t>(ts.block_count());
    if (b == 0) return std::nullopt;

    std::vector<std::vector<int>> incident(ts.order());
    for (size_t i = 0; i < b; ++i)
        for (int x : ts.block(i).p) incident[x].push_back(static_cast<int>(i));

    std::vector<OrientedBlock> seq;
    seq.reserve(b);
    std::vector<bool> used(b, false);

    // Block 0 is pinned as the first block (rotation freedom); everything
    // else is tried in every orientation.
    std::function<bool(int)> dfs = [&](int tail) -> bool {
        if (seq.size() == b) return tail == seq.front().head;
        for (int bi : incident[tail]) {
            if (used[bi]) continue;
            const Triple& t = ts.block(bi);
            int o1 = -1, o2 = -1;
            for (int x : t.p) {
                if (x == tail) continue;
                (o1 < 0 ? o1 : o2) = x;
            }
            used[bi] = true;
            seq.push_back({tail, o1, o2});
            if (dfs(o2)) return true;
            seq.back() = {tail, o2, o1};
            if (dfs(o1)) return true;
            seq.pop_back();
            used[bi] = false;
        }
        return false;
    };

    const Triple& first = ts.block(0);
    std::array<std::array<int, 3>, 6> orients = {{{first.p[0], first.p[1], first.p[2]},
                                                  {first.p[0], first.p[2], first.p[1]},
                                                  {first.p[1], first.p[0], first.p[2]},
                                                  {first.p[1], first.p[2], first.p[0]},
                                                  {first.p[2], first.p[0], first.p[1]},
                                                  {first.p[2], first.p[1], first.p[0]}}};
    for (const auto& o : orients) {
        used[0] = true;
        seq.push_back({o[0], o[1], o[2]});
        if (dfs(o[2])) return OverlapCycle{seq};
        seq.pop_back();
        used[0] = false;
    }
    return std::nullopt;
}

}  // namespace ocycle
