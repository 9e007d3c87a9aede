#ifndef OCYCLE_BASE_CASES_HPP
#define OCYCLE_BASE_CASES_HPP

#include <string>
#include <vector>

#include "ocycle/constructions.hpp"
#include "ocycle/cycle.hpp"
#include "ocycle/design.hpp"

namespace ocycle {

// A documented single-token correction to a shipped listing.  `row` and
// `col` are 1-based display coordinates (col 0 for sequence listings),
// `token` is the 1-based position inside the cell/row.  The original token
// must match before the corrected one is substituted.
struct ErrataEntry {
    int v = 0;
    int row = 0;
    int col = 0;
    int token = 0;
    std::string original;
    std::string corrected;
    std::string defect;  // what the uncorrected listing violates
    std::string reason;
};

// One ingested listing: the verbatim text, the oriented blocks in listing
// order, the validated system, and the verified cycle over it.
struct BaseCaseAsset {
    int v = 0;
    std::string raw_text;
    std::vector<OrientedBlock> parsed_blocks;
    TripleSystem sts;
    OverlapCycle cycle;
    std::vector<ErrataEntry> errata;  // corrections that were applied
};

// Orders with shipped listings: 7, 9, 13, 15, 19, 21, 25, 27, 33.
const std::vector<int>& base_case_orders();

// The parsed, validated asset for a supported order.  Both STS validity and
// ocycle validity are certified at first use and the asset is cached.
// Listings come from $OCYCLE_DATA_DIR when set, else from the copies
// embedded at build time.  Throws std::invalid_argument on unsupported v.
const BaseCaseAsset& base_case(int v);

// Parse one listing into oriented blocks (no validation beyond token
// syntax).  Grid listings (cells separated by '|') are read column-major;
// plain listings are alternating overlap/hidden point sequences.  Optional
// errata are applied to matching tokens first.
std::vector<OrientedBlock> parse_appendix_listing(const std::string& text, int v);
std::vector<OrientedBlock> parse_appendix_listing(const std::string& text, int v,
                                                  const std::vector<ErrataEntry>& errata);

std::vector<ErrataEntry> parse_errata_json(const std::string& json_text);

// The fixed STS(7) seed for the 2v+7 construction: the v=7 base-case block
// set, relabeled 0..6 -> -3..3.
Fano7Seed fano7_standard();

}  // namespace ocycle

#endif
