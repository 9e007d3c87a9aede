#ifndef OCYCLE_CYCLE_HPP
#define OCYCLE_CYCLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ocycle/design.hpp"

namespace ocycle {

// A block written for a 1-overlap listing: head and tail are the block's
// overlap points, hidden is the point between them.
struct OrientedBlock {
    int head = 0;
    int hidden = 0;
    int tail = 0;

    Triple triple() const { return Triple(head, hidden, tail); }
    OrientedBlock reversed() const { return {tail, hidden, head}; }
    bool operator==(const OrientedBlock&) const = default;
    std::string to_string() const;
};

// Cyclic block sequence with tail(i) == head(i+1), indices mod size.
struct OverlapCycle {
    std::vector<OrientedBlock> blocks;

    size_t size() const { return blocks.size(); }
    bool empty() const { return blocks.empty(); }
};

// Open block sequence; same chaining but no wraparound.
struct OverlapPath {
    std::vector<OrientedBlock> blocks;

    size_t size() const { return blocks.size(); }
    bool empty() const { return blocks.empty(); }
    int start_point() const { return blocks.front().head; }
    int end_point() const { return blocks.back().tail; }
};

// Head sequence of a cycle: one point per block, no closing repeat.
struct CompressedCycle {
    std::vector<int> points;

    size_t size() const { return points.size(); }
    bool operator==(const CompressedCycle&) const = default;
};

struct OcycleReport {
    static constexpr int kItemCap = 100;

    long long blocks_in_cycle = 0;
    long long blocks_in_system = 0;
    long long covered = 0;  // distinct system blocks hit at least once

    std::vector<std::string> chain_violations;
    std::vector<std::string> bad_blocks;  // malformed or not blocks of the system
    std::vector<std::string> coverage;    // missing / duplicated blocks

    long long total_chain_violations = 0;
    long long total_bad_blocks = 0;
    long long total_coverage = 0;

    long long total_defects() const {
        return total_chain_violations + total_bad_blocks + total_coverage;
    }
    bool clean() const { return total_defects() == 0; }
    std::string to_string() const;
};

// Checks chaining at every junction, membership of every oriented block in
// ts, and exact coverage of ts's block set.  Never throws.
OcycleReport validate_ocycle(const TripleSystem& ts, const OverlapCycle& c);

// Chaining + membership for an open path (no coverage requirement).
OcycleReport validate_path_chaining(const TripleSystem& ts, const OverlapPath& p);

// --- junction helpers -------------------------------------------------------

// Sorted distinct junction points (heads) of a cycle.
std::vector<int> junction_points(const OverlapCycle& c);
bool has_junction(const OverlapCycle& c, int p);

// --- the splice/cut/reorient algebra ----------------------------------------

// Rotate both cycles to their first junction at p and concatenate.  Requires
// p to be a junction of both and the block sets to be disjoint; throws
// std::invalid_argument otherwise.
OverlapCycle splice_at(const OverlapCycle& c1, const OverlapCycle& c2, int p);

// Open the cycle between block i and block i+1: the path starts at block i+1
// and ends at block i.  Throws std::out_of_range on a bad index.
OverlapPath cut_between(const OverlapCycle& c, size_t i);

enum class PathEnd { First, Last };

// Swap the written order at one end of a path: Last turns (h,x,t) into
// (h,t,x), First turns (h,x,t) into (x,h,t).  Involution per end.
OverlapPath reorient_end(OverlapPath p, PathEnd which);

// Close a path whose last tail equals its first head.
OverlapCycle close_path(const OverlapPath& p);

// Concatenate two paths a: p->q and b: q->p into a cycle.
OverlapCycle join_paths(const OverlapPath& a, const OverlapPath& b);

// Read the cycle backwards, flipping each block.  Validity is preserved.
OverlapCycle reversed(const OverlapCycle& c);

// Cycle starting at block i.
OverlapCycle rotate_to(const OverlapCycle& c, size_t i);

// Position of the block with this underlying triple, or npos.
size_t find_block(const OverlapCycle& c, const Triple& t);

// Greedy fixed-point splicing in canonical order: repeatedly splice the pair
// of cycles sharing the smallest junction point (ties by creation index)
// until no two share one.  Junction points listed in `forbidden` are never
// spliced at.  Inputs must be pairwise block-disjoint.
std::vector<OverlapCycle> merge_all(std::vector<OverlapCycle> cycles,
                                    const std::vector<int>& forbidden = {});

// --- compressed form --------------------------------------------------------

CompressedCycle compress(const OverlapCycle& c);

// Rebuild the full cycle from heads using ts as the lookup table.  Throws
// std::invalid_argument on repeated consecutive points or a pair not covered
// by ts, and ValidationError if the result does not cover ts exactly.
OverlapCycle decompress(const TripleSystem& ts, const CompressedCycle& cc);

// The rotation with lexicographically least compressed form (ties broken by
// the full block sequence).  Used at serialization time.
OverlapCycle canonical_rotation(const OverlapCycle& c);

}  // namespace ocycle

#endif
