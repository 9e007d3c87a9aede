#ifndef OCYCLE_DESIGN_HPP
#define OCYCLE_DESIGN_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ocycle {

// A block of a triple system: three distinct point labels, stored ascending.
struct Triple {
    std::array<int, 3> p;

    Triple(int a, int b, int c);

    bool contains(int x) const { return p[0] == x || p[1] == x || p[2] == x; }

    // The element different from a and b.  Both must be members.
    int third(int a, int b) const;

    bool operator==(const Triple& o) const { return p == o.p; }
    bool operator<(const Triple& o) const { return p < o.p; }

    std::string to_string() const;
};

struct TripleHash {
    size_t operator()(const Triple& t) const {
        size_t h = 1469598103934665603ull;
        for (int x : t.p) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct PairDefect {
    int p;
    int q;
    long long count;  // 0 = uncovered, >= 2 = covered that many times
};

// Outcome of structural STS validation.  Itemised defect lists are capped at
// kItemCap entries; totals are always exact.
struct ValidationReport {
    static constexpr int kItemCap = 100;

    int v = 0;
    long long blocks_seen = 0;
    long long blocks_expected = 0;

    std::vector<std::string> structural;             // admissibility, ranges, malformed blocks
    std::vector<PairDefect> uncovered;               // pairs covered zero times
    std::vector<PairDefect> overcovered;             // pairs covered two or more times
    std::vector<std::pair<int, long long>> replication_off;  // (point, block count)

    long long total_uncovered = 0;
    long long total_overcovered = 0;
    long long total_replication_off = 0;
    long long total_defects = 0;

    bool clean() const { return total_defects == 0; }
    std::string to_string() const;
};

class ValidationError : public std::runtime_error {
  public:
    ValidationError(const std::string& msg, ValidationReport rep)
        : std::runtime_error(msg), report_(std::move(rep)) {}
    const ValidationReport& report() const { return report_; }

  private:
    ValidationReport report_;
};

// true iff an STS(v) exists: v == 1 or 3 (mod 6).
bool admissible_order(long long v);

// v(v-1)/6.
long long sts_block_count(long long v);

// A Steiner triple system: order v, block list in construction order, and a
// total pair -> block index.  Immutable once built; cheap to copy by value is
// not a goal, pass by reference.
class TripleSystem {
  public:
    // Validates everything; throws ValidationError naming the first offending
    // pair/block if the input is not an STS(v).  v in {1, 3} give the
    // degenerate empty/one-block systems; v == 0 is rejected.
    static TripleSystem make(int v, std::vector<Triple> blocks);

    int order() const { return v_; }
    long long block_count() const { return static_cast<long long>(blocks_.size()); }
    const std::vector<Triple>& blocks() const { return blocks_; }
    const Triple& block(size_t i) const { return blocks_[i]; }

    // The unique block containing both points.  Throws std::out_of_range on
    // labels outside [0, v) and std::invalid_argument on p == q.
    const Triple& block_of_pair(int p, int q) const;

    // Position of that block in blocks(), or -1 if v < 2 edge cases.
    int block_index_of_pair(int p, int q) const;

    // The hidden point recovered from a pair.
    int third_point(int p, int q) const { return block_of_pair(p, q).third(p, q); }

    bool has_block(const Triple& t) const;

    // Index of an exact block, or -1.
    int index_of(const Triple& t) const;

  private:
    TripleSystem(int v, std::vector<Triple> blocks, std::vector<int32_t> pair_index)
        : v_(v), blocks_(std::move(blocks)), pair_to_block_(std::move(pair_index)) {}

    void check_pair_labels(int p, int q) const;

    int v_ = 0;
    std::vector<Triple> blocks_;
    std::vector<int32_t> pair_to_block_;  // v*v entries, -1 where unset
};

// Non-throwing full check: block count, pair coverage, replication numbers.
// Empty defect list iff TripleSystem::make would succeed.
ValidationReport validate_sts(int v, const std::vector<Triple>& blocks);

}  // namespace ocycle

#endif
