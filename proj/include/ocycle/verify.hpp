#ifndef OCYCLE_VERIFY_HPP
#define OCYCLE_VERIFY_HPP

#include <optional>
#include <vector>

#include <json.hpp>

#include "ocycle/cycle.hpp"
#include "ocycle/design.hpp"

namespace ocycle {

inline constexpr long long kDefaultAutomorphismBudget = 100'000'000;

struct AutomorphismReport {
    long long group_order = 0;  // meaningful only when complete
    bool complete = false;      // false = node budget exhausted, inconclusive
    std::optional<std::vector<int>> sample_nonidentity;
    long long nodes = 0;
    double millis = 0.0;
    long long budget = 0;

    nlohmann::json to_json() const;
};

// Exact order of the automorphism group by backtracking over point images.
// Assigning two points of a block forces the image of the third, so the
// search propagates forced images and only branches on genuinely free
// points; candidate images are restricted to the same class of an iterated
// pair-neighborhood refinement.  Exact if the search completes within the
// node budget, otherwise complete == false.
AutomorphismReport automorphism_order(const TripleSystem& ts,
                                      long long node_budget = kDefaultAutomorphismBudget);

enum class Tri { False, True, Inconclusive };

// True iff the automorphism group is trivial.  Stops at the first
// non-identity automorphism found.
Tri is_af(const TripleSystem& ts, long long node_budget = kDefaultAutomorphismBudget);

// Independent oracle for tiny systems: depth-first search over all block
// orderings and orientations.  Returns a valid ocycle or nullopt when the
// exhaustive search proves none exists.  Throws std::invalid_argument when
// ts.order() exceeds the cap.
std::optional<OverlapCycle> exhaustive_ocycle_search(const TripleSystem& ts, int order_cap = 9);

}  // namespace ocycle

#endif
