#include "ocycle/cycle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace ocycle {

std::string OrientedBlock::to_string() const {
    std::ostringstream os;
    os << "(" << head << "," << hidden << "," << tail << ")";
    return os.str();
}

std::string OcycleReport::to_string() const {
    std::ostringstream os;
    os << "ocycle: " << blocks_in_cycle << " blocks over a system of " << blocks_in_system
       << ", coverage " << covered << " of " << blocks_in_system << ", " << total_defects()
       << " defect(s)";
    for (const auto& s : chain_violations) os << "\n  " << s;
    for (const auto& s : bad_blocks) os << "\n  " << s;
    for (const auto& s : coverage) os << "\n  " << s;
    long long listed = static_cast<long long>(chain_violations.size() + bad_blocks.size() +
                                              coverage.size());
    if (listed < total_defects()) os << "\n  ... (" << (total_defects() - listed) << " more)";
    return os.str();
}

namespace {

void add_capped(std::vector<std::string>& list, long long& total, const std::string& msg) {
    if (list.size() < OcycleReport::kItemCap) list.push_back(msg);
    total++;
}

// Membership and structural checks shared by cycle and path validation.
// Returns per-system-block hit counts for the coverage pass.
std::vector<long long> check_blocks(const TripleSystem& ts,
                                    const std::vector<OrientedBlock>& blocks,
                                    OcycleReport& rep) {
    std::vector<long long> hits(ts.block_count(), 0);
    for (size_t i = 0; i < blocks.size(); ++i) {
        const OrientedBlock& ob = blocks[i];
        if (ob.head == ob.hidden || ob.head == ob.tail || ob.hidden == ob.tail) {
            add_capped(rep.bad_blocks, rep.total_bad_blocks,
                       "block " + std::to_string(i) + " " + ob.to_string() +
                           " has repeated points");
            continue;
        }
        if (ob.head < 0 || ob.head >= ts.order() || ob.hidden < 0 || ob.hidden >= ts.order() ||
            ob.tail < 0 || ob.tail >= ts.order()) {
            add_capped(rep.bad_blocks, rep.total_bad_blocks,
                       "block " + std::to_string(i) + " " + ob.to_string() +
                           " has a label outside [0," + std::to_string(ts.order()) + ")");
            continue;
        }
        int idx = ts.index_of(ob.triple());
        if (idx < 0) {
            add_capped(rep.bad_blocks, rep.total_bad_blocks,
                       "block " + std::to_string(i) + " " + ob.to_string() +
                           " is not a block of the system");
            continue;
        }
        hits[idx]++;
    }
    return hits;
}

void check_chaining(const std::vector<OrientedBlock>& blocks, bool cyclic, OcycleReport& rep) {
    if (blocks.empty()) return;
    size_t last = cyclic ? blocks.size() : blocks.size() - 1;
    for (size_t i = 0; i + 1 <= last && blocks.size() > 1; ++i) {
        const OrientedBlock& a = blocks[i];
        const OrientedBlock& b = blocks[(i + 1) % blocks.size()];
        if (a.tail != b.head) {
            add_capped(rep.chain_violations, rep.total_chain_violations,
                       "junction " + std::to_string(i) + ": tail " + std::to_string(a.tail) +
                           " != head " + std::to_string(b.head));
        }
    }
    if (cyclic && blocks.size() == 1) {
        // A single block cannot chain to itself: head != tail by distinctness.
        add_capped(rep.chain_violations, rep.total_chain_violations,
                   "junction 0: tail " + std::to_string(blocks[0].tail) + " != head " +
                       std::to_string(blocks[0].head));
    }
}

}  // namespace

OcycleReport validate_ocycle(const TripleSystem& ts, const OverlapCycle& c) {
    OcycleReport rep;
    rep.blocks_in_cycle = static_cast<long long>(c.size());
    rep.blocks_in_system = ts.block_count();

    check_chaining(c.blocks, /*cyclic=*/true, rep);
    std::vector<long long> hits = check_blocks(ts, c.blocks, rep);

    for (size_t i = 0; i < hits.size(); ++i) {
        if (hits[i] == 1) {
            rep.covered++;
        } else if (hits[i] == 0) {
            add_capped(rep.coverage, rep.total_coverage,
                       "system block " + ts.block(i).to_string() + " not covered");
        } else {
            rep.covered++;
            add_capped(rep.coverage, rep.total_coverage,
                       "system block " + ts.block(i).to_string() + " covered " +
                           std::to_string(hits[i]) + " times");
        }
    }
    return rep;
}

OcycleReport validate_path_chaining(const TripleSystem& ts, const OverlapPath& p) {
    OcycleReport rep;
    rep.blocks_in_cycle = static_cast<long long>(p.size());
    rep.blocks_in_system = ts.block_count();
    check_chaining(p.blocks, /*cyclic=*/false, rep);
    check_blocks(ts, p.blocks, rep);
    return rep;
}

std::vector<int> junction_points(const OverlapCycle& c) {
    std::vector<int> pts;
    pts.reserve(c.size());
    for (const auto& b : c.blocks) pts.push_back(b.head);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

bool has_junction(const OverlapCycle& c, int p) {
    for (const auto& b : c.blocks)
        if (b.head == p) return true;
    return false;
}

OverlapCycle rotate_to(const OverlapCycle& c, size_t i) {
    if (i >= c.size()) throw std::out_of_range("rotate_to: index out of range");
    OverlapCycle r;
    r.blocks.reserve(c.size());
    for (size_t k = 0; k < c.size(); ++k) r.blocks.push_back(c.blocks[(i + k) % c.size()]);
    return r;
}

size_t find_block(const OverlapCycle& c, const Triple& t) {
    for (size_t i = 0; i < c.size(); ++i)
        if (c.blocks[i].triple() == t) return i;
    return static_cast<size_t>(-1);
}

OverlapCycle splice_at(const OverlapCycle& c1, const OverlapCycle& c2, int p) {
    auto first_at = [&](const OverlapCycle& c) -> size_t {
        for (size_t i = 0; i < c.size(); ++i)
            if (c.blocks[i].head == p) return i;
        return static_cast<size_t>(-1);
    };
    size_t i1 = first_at(c1);
    size_t i2 = first_at(c2);
    if (i1 == static_cast<size_t>(-1) || i2 == static_cast<size_t>(-1)) {
        throw std::invalid_argument("splice point " + std::to_string(p) +
                                    " is not a junction of both cycles");
    }
    std::unordered_set<Triple, TripleHash> seen;
    for (const auto& b : c1.blocks) seen.insert(b.triple());
    for (const auto& b : c2.blocks) {
        if (seen.count(b.triple())) {
            throw std::invalid_argument("splice requires block-disjoint cycles; both contain " +
                                        b.triple().to_string());
        }
    }
    OverlapCycle out = rotate_to(c1, i1);
    OverlapCycle r2 = rotate_to(c2, i2);
    out.blocks.insert(out.blocks.end(), r2.blocks.begin(), r2.blocks.end());
    return out;
}

OverlapPath cut_between(const OverlapCycle& c, size_t i) {
    if (i >= c.size()) throw std::out_of_range("cut_between: index out of range");
    OverlapPath p;
    p.blocks.reserve(c.size());
    for (size_t k = 0; k < c.size(); ++k) p.blocks.push_back(c.blocks[(i + 1 + k) % c.size()]);
    return p;
}

OverlapPath reorient_end(OverlapPath p, PathEnd which) {
    if (p.empty()) throw std::invalid_argument("reorient_end on an empty path");
    if (which == PathEnd::Last) {
        OrientedBlock& b = p.blocks.back();
        std::swap(b.hidden, b.tail);
    } else {
        OrientedBlock& b = p.blocks.front();
        std::swap(b.head, b.hidden);
    }
    return p;
}

OverlapCycle close_path(const OverlapPath& p) {
    if (p.empty()) throw std::invalid_argument("close_path on an empty path");
    if (p.end_point() != p.start_point()) {
        throw std::invalid_argument("close_path: path ends at " + std::to_string(p.end_point()) +
                                    ", starts at " + std::to_string(p.start_point()));
    }
    return OverlapCycle{p.blocks};
}

OverlapCycle join_paths(const OverlapPath& a, const OverlapPath& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("join_paths on an empty path");
    if (a.end_point() != b.start_point() || b.end_point() != a.start_point()) {
        throw std::invalid_argument("join_paths: endpoints do not match up");
    }
    OverlapCycle c;
    c.blocks.reserve(a.size() + b.size());
    c.blocks.insert(c.blocks.end(), a.blocks.begin(), a.blocks.end());
    c.blocks.insert(c.blocks.end(), b.blocks.begin(), b.blocks.end());
    return c;
}

OverlapCycle reversed(const OverlapCycle& c) {
    OverlapCycle r;
    r.blocks.reserve(c.size());
    for (auto it = c.blocks.rbegin(); it != c.blocks.rend(); ++it)
        r.blocks.push_back(it->reversed());
    return r;
}

std::vector<OverlapCycle> merge_all(std::vector<OverlapCycle> cycles,
                                    const std::vector<int>& forbidden) {
    std::set<int> banned(forbidden.begin(), forbidden.end());

    {  // inputs must be pairwise block-disjoint
        std::unordered_set<Triple, TripleHash> seen;
        for (const auto& c : cycles) {
            for (const auto& b : c.blocks) {
                if (!seen.insert(b.triple()).second) {
                    throw std::invalid_argument(
                        "merge_all requires pairwise block-disjoint cycles; " +
                        b.triple().to_string() + " repeats");
                }
            }
        }
    }

    struct Entry {
        size_t creation;
        OverlapCycle cycle;
        std::vector<int> junctions;  // sorted distinct, forbidden removed
    };
    auto junctions_of = [&](const OverlapCycle& c) {
        std::vector<int> j = junction_points(c);
        if (!banned.empty()) {
            j.erase(std::remove_if(j.begin(), j.end(), [&](int p) { return banned.count(p); }),
                    j.end());
        }
        return j;
    };

    std::vector<Entry> entries;
    for (size_t i = 0; i < cycles.size(); ++i) {
        if (cycles[i].empty()) continue;
        entries.push_back({i, std::move(cycles[i]), {}});
        entries.back().junctions = junctions_of(entries.back().cycle);
    }

    while (true) {
        // Smallest (junction label, creation index pair) over all sharing pairs.
        int best_p = -1;
        size_t bi = 0, bj = 0;
        for (size_t i = 0; i < entries.size(); ++i) {
            for (size_t j = i + 1; j < entries.size(); ++j) {
                const auto& a = entries[i].junctions;
                const auto& b = entries[j].junctions;
                size_t x = 0, y = 0;
                while (x < a.size() && y < b.size()) {
                    if (a[x] == b[y]) {
                        if (best_p < 0 || a[x] < best_p) {
                            best_p = a[x];
                            bi = i;
                            bj = j;
                        }
                        break;
                    }
                    if (a[x] < b[y])
                        ++x;
                    else
                        ++y;
                }
            }
        }
        if (best_p < 0) break;
        entries[bi].cycle = splice_at(entries[bi].cycle, entries[bj].cycle, best_p);
        entries[bi].junctions = junctions_of(entries[bi].cycle);
        entries.erase(entries.begin() + bj);
    }

    std::vector<OverlapCycle> out;
    out.reserve(entries.size());
    for (auto& e : entries) out.push_back(std::move(e.cycle));
    return out;
}

CompressedCycle compress(const OverlapCycle& c) {
    CompressedCycle cc;
    cc.points.reserve(c.size());
    for (const auto& b : c.blocks) cc.points.push_back(b.head);
    return cc;
}

OverlapCycle decompress(const TripleSystem& ts, const CompressedCycle& cc) {
    OverlapCycle c;
    size_t n = cc.points.size();
    c.blocks.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        int p = cc.points[i];
        int q = cc.points[(i + 1) % n];
        if (p == q) {
            throw std::invalid_argument("decompress: repeated consecutive point " +
                                        std::to_string(p) + " at position " + std::to_string(i));
        }
        int idx = ts.block_index_of_pair(p, q);  // range-checks labels
        if (idx < 0) {
            throw std::invalid_argument("decompress: pair {" + std::to_string(p) + "," +
                                        std::to_string(q) + "} not covered by the system");
        }
        c.blocks.push_back({p, ts.block(idx).third(p, q), q});
    }
    OcycleReport rep = validate_ocycle(ts, c);
    if (!rep.clean()) {
        ValidationReport vr;
        vr.v = ts.order();
        throw ValidationError("decompress: result is not a valid ocycle over the system\n" +
                                  rep.to_string(),
                              vr);
    }
    return c;
}

OverlapCycle canonical_rotation(const OverlapCycle& c) {
    if (c.size() <= 1) return c;
    size_t n = c.size();
    size_t best = 0;
    auto less_rotation = [&](size_t a, size_t b) {
        // compare compressed forms, then full block sequences
        for (size_t k = 0; k < n; ++k) {
            int ha = c.blocks[(a + k) % n].head;
            int hb = c.blocks[(b + k) % n].head;
            if (ha != hb) return ha < hb;
        }
        for (size_t k = 0; k < n; ++k) {
            const OrientedBlock& x = c.blocks[(a + k) % n];
            const OrientedBlock& y = c.blocks[(b + k) % n];
            if (x.hidden != y.hidden) return x.hidden < y.hidden;
            if (x.tail != y.tail) return x.tail < y.tail;
        }
        return false;
    };
    for (size_t i = 1; i < n; ++i)
        if (less_rotation(i, best)) best = i;
    return rotate_to(c, best);
}

}  // namespace ocycle
