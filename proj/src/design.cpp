#include "ocycle/design.hpp"

#include <algorithm>
#include <sstream>

namespace ocycle {

namespace {
// Orders above this would need >100MB of pair-index; far beyond anything the
// constructions here are used for.
constexpr int kMaxOrder = 4096;
}  // namespace

Triple::Triple(int a, int b, int c) : p{a, b, c} {
    std::sort(p.begin(), p.end());
    if (p[0] == p[1] || p[1] == p[2]) {
        throw std::invalid_argument("triple elements must be three distinct points: " +
                                    to_string());
    }
}

int Triple::third(int a, int b) const {
    for (int x : p) {
        if (x != a && x != b) return x;
    }
    return p[0];  // unreachable for valid arguments
}

std::string Triple::to_string() const {
    std::ostringstream os;
    os << "{" << p[0] << "," << p[1] << "," << p[2] << "}";
    return os.str();
}

bool admissible_order(long long v) {
    long long r = v % 6;
    return v >= 1 && (r == 1 || r == 3);
}

long long sts_block_count(long long v) { return v * (v - 1) / 6; }

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    os << "STS(" << v << "): " << blocks_seen << " blocks (expected " << blocks_expected << "), "
       << total_defects << " defect(s)";
    for (const auto& s : structural) os << "\n  " << s;
    for (const auto& d : uncovered)
        os << "\n  pair {" << d.p << "," << d.q << "} uncovered";
    for (const auto& d : overcovered)
        os << "\n  pair {" << d.p << "," << d.q << "} covered " << d.count << " times";
    for (const auto& r : replication_off)
        os << "\n  point " << r.first << " lies in " << r.second << " blocks, expected "
           << (v - 1) / 2;
    long long listed = static_cast<long long>(structural.size() + uncovered.size() +
                                              overcovered.size() + replication_off.size());
    long long total_items =
        static_cast<long long>(structural.size()) + total_uncovered + total_overcovered +
        total_replication_off;
    if (listed < total_items) os << "\n  ... (" << (total_items - listed) << " more)";
    return os.str();
}

ValidationReport validate_sts(int v, const std::vector<Triple>& blocks) {
    ValidationReport rep;
    rep.v = v;
    rep.blocks_seen = static_cast<long long>(blocks.size());

    auto structural_defect = [&](const std::string& msg) {
        if (rep.structural.size() < ValidationReport::kItemCap)
            rep.structural.push_back(msg);
        rep.total_defects++;
    };

    if (v < 1) {
        structural_defect("order " + std::to_string(v) + " rejected: must be >= 1");
        return rep;
    }
    if (v > kMaxOrder) {
        structural_defect("order " + std::to_string(v) + " above supported maximum " +
                          std::to_string(kMaxOrder));
        return rep;
    }
    if (!admissible_order(v)) {
        structural_defect("order " + std::to_string(v) +
                          " not admissible: an STS(v) exists iff v = 1 or 3 (mod 6)");
        return rep;
    }

    rep.blocks_expected = sts_block_count(v);
    if (rep.blocks_seen != rep.blocks_expected) {
        structural_defect("block count " + std::to_string(rep.blocks_seen) + " != v(v-1)/6 = " +
                          std::to_string(rep.blocks_expected));
    }

    // Pair coverage counts; saturating so garbage input cannot overflow.
    std::vector<uint8_t> cover(static_cast<size_t>(v) * v, 0);
    std::vector<long long> repl(v, 0);
    bool ranges_ok = true;
    for (size_t i = 0; i < blocks.size(); ++i) {
        const Triple& t = blocks[i];
        if (t.p[0] < 0 || t.p[2] >= v) {
            structural_defect("block " + std::to_string(i) + " " + t.to_string() +
                              " has a label outside [0," + std::to_string(v) + ")");
            ranges_ok = false;
            continue;
        }
        for (int x : t.p) repl[x]++;
        auto bump = [&](int a, int b) {
            uint8_t& c = cover[static_cast<size_t>(a) * v + b];
            if (c < 255) c++;
        };
        bump(t.p[0], t.p[1]);
        bump(t.p[0], t.p[2]);
        bump(t.p[1], t.p[2]);
    }

    for (int a = 0; a < v; ++a) {
        for (int b = a + 1; b < v; ++b) {
            uint8_t c = cover[static_cast<size_t>(a) * v + b];
            if (c == 1) continue;
            if (c == 0) {
                rep.total_uncovered++;
                rep.total_defects++;
                if (rep.uncovered.size() < ValidationReport::kItemCap)
                    rep.uncovered.push_back({a, b, 0});
            } else {
                rep.total_overcovered++;
                rep.total_defects++;
                if (rep.overcovered.size() < ValidationReport::kItemCap)
                    rep.overcovered.push_back({a, b, c});
            }
        }
    }

    if (ranges_ok) {
        long long want = (v - 1) / 2;
        for (int x = 0; x < v; ++x) {
            if (repl[x] != want) {
                rep.total_replication_off++;
                rep.total_defects++;
                if (rep.replication_off.size() < ValidationReport::kItemCap)
                    rep.replication_off.push_back({x, repl[x]});
            }
        }
    }

    return rep;
}

TripleSystem TripleSystem::make(int v, std::vector<Triple> blocks) {
    ValidationReport rep = validate_sts(v, blocks);
    if (!rep.clean()) {
        std::string msg = "not a valid STS(" + std::to_string(v) + ")";
        if (!rep.structural.empty()) {
            msg += ": " + rep.structural.front();
        } else if (!rep.overcovered.empty()) {
            const auto& d = rep.overcovered.front();
            msg += ": pair {" + std::to_string(d.p) + "," + std::to_string(d.q) +
                   "} covered " + std::to_string(d.count) + " times";
        } else if (!rep.uncovered.empty()) {
            const auto& d = rep.uncovered.front();
            msg += ": pair {" + std::to_string(d.p) + "," + std::to_string(d.q) + "} uncovered";
        }
        throw ValidationError(msg, std::move(rep));
    }

    std::vector<int32_t> idx(static_cast<size_t>(v) * v, -1);
    for (size_t i = 0; i < blocks.size(); ++i) {
        const Triple& t = blocks[i];
        auto set = [&](int a, int b) {
            idx[static_cast<size_t>(a) * v + b] = static_cast<int32_t>(i);
            idx[static_cast<size_t>(b) * v + a] = static_cast<int32_t>(i);
        };
        set(t.p[0], t.p[1]);
        set(t.p[0], t.p[2]);
        set(t.p[1], t.p[2]);
    }
    return TripleSystem(v, std::move(blocks), std::move(idx));
}

void TripleSystem::check_pair_labels(int p, int q) const {
    if (p < 0 || p >= v_ || q < 0 || q >= v_) {
        throw std::out_of_range("point label outside [0," + std::to_string(v_) + "): {" +
                                std::to_string(p) + "," + std::to_string(q) + "}");
    }
    if (p == q) {
        throw std::invalid_argument("block_of_pair requires two distinct points, got " +
                                    std::to_string(p) + " twice");
    }
}

const Triple& TripleSystem::block_of_pair(int p, int q) const {
    check_pair_labels(p, q);
    int32_t i = pair_to_block_[static_cast<size_t>(p) * v_ + q];
    if (i < 0) {
        // Cannot happen for a constructed STS; guards degenerate v == 1.
        throw std::out_of_range("pair {" + std::to_string(p) + "," + std::to_string(q) +
                                "} not covered");
    }
    return blocks_[i];
}

int TripleSystem::block_index_of_pair(int p, int q) const {
    check_pair_labels(p, q);
    return pair_to_block_[static_cast<size_t>(p) * v_ + q];
}

bool TripleSystem::has_block(const Triple& t) const { return index_of(t) >= 0; }

int TripleSystem::index_of(const Triple& t) const {
    if (t.p[0] < 0 || t.p[2] >= v_) return -1;
    int32_t i = pair_to_block_[static_cast<size_t>(t.p[0]) * v_ + t.p[1]];
    if (i >= 0 && blocks_[i] == t) return i;
    return -1;
}

}  // namespace ocycle
