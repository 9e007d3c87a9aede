#include "ocycle/builders.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace ocycle {

nlohmann::json Provenance::to_json() const {
    nlohmann::json j;
    j["construction"] = construction;
    j["params"] = nlohmann::json::object();
    for (const auto& [k, v] : params) j["params"][k] = v;
    j["children"] = nlohmann::json::array();
    for (const auto& c : children) j["children"].push_back(c->to_json());
    return j;
}

void OcycleCertificate::verify() const {
    ValidationReport vr = validate_sts(ts.order(), ts.blocks());
    if (!vr.clean())
        throw std::runtime_error("certificate system invalid (" + provenance.construction +
                                 "):\n" + vr.to_string());
    OcycleReport orep = validate_ocycle(ts, cycle);
    if (!orep.clean())
        throw std::runtime_error("certificate cycle invalid (" + provenance.construction +
                                 "):\n" + orep.to_string());
}

std::vector<OverlapCycle> difference_class_cycles(
    int modulus, int step, const std::function<OrientedBlock(int)>& block_for) {
    if (modulus < 1 || step < 1 || step >= modulus)
        throw std::invalid_argument("difference_class_cycles: step " + std::to_string(step) +
                                    " out of range for modulus " + std::to_string(modulus));
    int g = std::gcd(step, modulus);
    std::vector<OverlapCycle> out;
    out.reserve(g);
    for (int c = 0; c < g; ++c) {
        OverlapCycle cyc;
        cyc.blocks.reserve(modulus / g);
        int x = c;
        do {
            cyc.blocks.push_back(block_for(x));
            x = (x + step) % modulus;
        } while (x != c);
        out.push_back(std::move(cyc));
    }
    return out;
}

namespace {

int mod(long long x, int m) {
    int r = static_cast<int>(x % m);
    return r < 0 ? r + m : r;
}

// Merge and insist on a single cycle.  Every such merge is backed by a
// shared-overlap-point argument; a leftover component means a step went
// wrong, so fail with the step name.
OverlapCycle merge_to_single(std::vector<OverlapCycle> cycles, const std::string& step,
                             const std::vector<int>& forbidden = {}) {
    std::vector<OverlapCycle> merged = merge_all(std::move(cycles), forbidden);
    if (merged.size() != 1)
        throw std::runtime_error(step + ": merge left " + std::to_string(merged.size()) +
                                 " disconnected cycles");
    return std::move(merged.front());
}

// The step pieces must cover the system's block set exactly once.
void assert_exact_cover(const TripleSystem& ts, const std::vector<const OverlapCycle*>& pieces,
                        const std::string& step) {
    std::unordered_map<Triple, long long, TripleHash> count;
    long long total = 0;
    for (const OverlapCycle* c : pieces) {
        for (const auto& ob : c->blocks) {
            count[ob.triple()]++;
            total++;
        }
    }
    if (total != ts.block_count())
        throw std::runtime_error(step + ": step pieces hold " + std::to_string(total) +
                                 " blocks, system has " + std::to_string(ts.block_count()));
    for (const Triple& t : ts.blocks()) {
        auto it = count.find(t);
        if (it == count.end())
            throw std::runtime_error(step + ": block " + t.to_string() + " missed by all steps");
        if (it->second != 1)
            throw std::runtime_error(step + ": block " + t.to_string() + " produced " +
                                     std::to_string(it->second) + " times");
    }
}

std::vector<const OverlapCycle*> ptrs(const std::vector<OverlapCycle>& v) {
    std::vector<const OverlapCycle*> out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(&c);
    return out;
}

Provenance leaf_provenance(std::string name, std::map<std::string, long long> params) {
    return Provenance{std::move(name), std::move(params), {}};
}

}  // namespace

OcycleCertificate ocycle_base_case(int v) {
    const BaseCaseAsset& asset = base_case(v);
    OcycleCertificate cert{asset.sts, asset.cycle, leaf_provenance("base_case", {{"v", v}})};
    cert.verify();
    return cert;
}

// ---------------------------------------------------------------------------
// Bose route (n = 3 mod 6)
// ---------------------------------------------------------------------------

OcycleCertificate ocycle_bose(int m, BoseTrace* trace) {
    TripleSystem ts = bose(m);  // rejects even or small m
    auto P = [&](int a, long long i) { return a * m + mod(i, m); };
    int inv2 = (m + 1) / 2;
    int half = (m - 1) / 2;  // number of distance classes per a

    // Distance-d class for coordinate a: blocks {(a,x),(a,x+d),(a+1,x+d*inv2)}
    // chained from overlap (a,x) to (a,x+d).
    auto class_cycles = [&](int a, int d) {
        return difference_class_cycles(m, d, [&, a, d](int x) {
            return OrientedBlock{P(a, x), P((a + 1) % 3, x + static_cast<long long>(d) * inv2),
                                 P(a, x + d)};
        });
    };

    // Step 1: all a=1 classes merged through the distance-1 backbone.
    std::vector<OverlapCycle> a1;
    for (int d = 1; d <= half; ++d)
        for (auto& c : class_cycles(1, d)) a1.push_back(std::move(c));
    OverlapCycle a1_cycle = merge_to_single(std::move(a1), "bose step 1");

    // Step 2: a=2.  The cut will run between the blocks
    //   U = {(2,m-1),(0,0),(2,1)} and W = {(2,1),(0,2),(2,3)},
    // which sit adjacently at overlap (2,1) inside the distance-2 cycle for
    // m >= 5 and inside the distance-1 cycle for m = 3.  The distance-2
    // cycle is attached at (2,0) and no splice ever uses (2,1), so that
    // adjacency survives the merge.
    OverlapCycle a2_cycle;
    {
        std::vector<OverlapCycle> d1 = class_cycles(2, 1);
        OverlapCycle combined = std::move(d1.front());  // gcd(1,m) = 1
        std::vector<OverlapCycle> rest;
        if (half >= 2) {
            std::vector<OverlapCycle> d2 = class_cycles(2, 2);  // single cycle, m odd
            combined = splice_at(combined, d2.front(), P(2, 0));
            for (int d = 3; d <= half; ++d)
                for (auto& c : class_cycles(2, d)) rest.push_back(std::move(c));
        }
        rest.insert(rest.begin(), std::move(combined));
        a2_cycle = merge_to_single(std::move(rest), "bose step 2", {P(2, 1)});
    }

    Triple cut_u(P(2, m - 1), P(0, 0), P(2, 1));
    Triple cut_w(P(2, 1), P(0, 2), P(2, 3));
    size_t iu = find_block(a2_cycle, cut_u);
    size_t iw = find_block(a2_cycle, cut_w);
    if (iu == static_cast<size_t>(-1) || iw == static_cast<size_t>(-1))
        throw std::runtime_error("bose step 2: cut blocks missing from the a=2 cycle");
    size_t n2 = a2_cycle.size();
    if ((iw + 1) % n2 == iu) {
        // traversal runs W -> U; flip it so the cut starts at W
        a2_cycle = reversed(a2_cycle);
        iu = find_block(a2_cycle, cut_u);
    } else if ((iu + 1) % n2 != iw) {
        throw std::runtime_error("bose step 2: cut blocks not adjacent at (2,1)");
    }
    OverlapPath a2_string = reorient_end(cut_between(a2_cycle, iu), PathEnd::Last);
    if (a2_string.start_point() != P(2, 1) || a2_string.end_point() != P(0, 0))
        throw std::runtime_error("bose step 2: string endpoints wrong");

    // Step 3: a=0 classes except the one whose blocks {(0,i-1),(0,i+1),(1,i)}
    // pair with the type (2) blocks.  That class has distance 2 for m >= 5
    // and distance 1 for m = 3.
    int d_excl = std::min(2, m - 2);
    std::vector<OverlapCycle> a0;
    for (int d = 1; d <= half; ++d) {
        if (d == d_excl) continue;
        for (auto& c : class_cycles(0, d)) a0.push_back(std::move(c));
    }
    OverlapCycle pair_cycle;
    for (int k = 1; k <= m; ++k) {
        int i = mod(k, m);
        pair_cycle.blocks.push_back({P(0, i), P(2, i), P(1, i)});
        pair_cycle.blocks.push_back({P(1, i), P(0, i - 1), P(0, i + 1)});
    }

    // Step 4: combine step 1 and step 3 away from (1,1), then cut between
    // {(0,1),(2,1),(1,1)} and {(1,1),(0,0),(0,2)} and reorient both ends.
    std::vector<OverlapCycle> main_parts;
    main_parts.push_back(pair_cycle);
    main_parts.push_back(a1_cycle);
    for (auto& c : a0) main_parts.push_back(c);
    OverlapCycle main_cycle = merge_to_single(std::move(main_parts), "bose step 4", {P(1, 1)});

    Triple t1(P(0, 1), P(2, 1), P(1, 1));
    size_t it1 = find_block(main_cycle, t1);
    if (it1 == static_cast<size_t>(-1))
        throw std::runtime_error("bose step 4: block {(0,1),(2,1),(1,1)} missing");
    const OrientedBlock& next = main_cycle.blocks[(it1 + 1) % main_cycle.size()];
    if (next.triple() != Triple(P(1, 1), P(0, 0), P(0, 2)))
        throw std::runtime_error("bose step 4: pair adjacency at (1,1) was disturbed");
    OverlapPath main_string = reorient_end(
        reorient_end(cut_between(main_cycle, it1), PathEnd::First), PathEnd::Last);
    if (main_string.start_point() != P(0, 0) || main_string.end_point() != P(2, 1))
        throw std::runtime_error("bose step 4: string endpoints wrong");

    OverlapCycle full = join_paths(a2_string, main_string);
    assert_exact_cover(ts, {&full}, "bose final");

    if (trace) {
        trace->a1_cycle = a1_cycle;
        trace->a2_cycle = a2_cycle;
        trace->a2_string = a2_string;
        trace->a0_cycles = a0;
        trace->pair_cycle = pair_cycle;
        trace->main_string = main_string;
    }

    OcycleCertificate cert{std::move(ts), std::move(full),
                           leaf_provenance("bose", {{"m", m}, {"n", 3LL * m}})};
    cert.verify();
    return cert;
}

// ---------------------------------------------------------------------------
// Skolem route (n = 1 mod 6)
// ---------------------------------------------------------------------------

OcycleCertificate ocycle_skolem(int t, SkolemTrace* trace) {
    TripleSystem ts = skolem(t);
    int period = 2 * t;
    auto L = [&](long long x, int i) { return i * period + mod(x, period); };
    int inf = 6 * t;
    auto pi = [&](int z) { return z % 2 == 0 ? z / 2 : (z + period - 1) / 2; };

    // Step 1: distance-k classes of the B blocks for k < t, merged per
    // second coordinate into one cycle each.  Vacuous at t = 1.
    std::vector<OverlapCycle> step1;
    for (int i = 0; i < 3 && t >= 2; ++i) {
        std::vector<OverlapCycle> classes;
        for (int k = 1; k < t; ++k) {
            for (auto& c : difference_class_cycles(period, k, [&, i, k](int x) {
                     return OrientedBlock{L(x, i), L(pi(mod(2LL * x + k, period)), (i + 1) % 3),
                                          L(x + k, i)};
                 }))
                classes.push_back(std::move(c));
        }
        step1.push_back(merge_to_single(std::move(classes),
                                        "skolem step 1 (i=" + std::to_string(i) + ")"));
    }

    // Step 2: one 7-block cycle per x < t over A_x, C_{x,*} and the
    // distance-t B blocks, with y = x + t and w = x o y.
    std::vector<OverlapCycle> minis;
    for (int x = 0; x < t; ++x) {
        int y = x + t;
        int w = pi(mod(2LL * x + t, period));
        OverlapCycle mini;
        mini.blocks = {
            {L(x, 2), L(w, 0), L(y, 2)}, {L(y, 2), L(x, 0), inf},      {inf, L(x, 1), L(y, 0)},
            {L(y, 0), L(w, 1), L(x, 0)}, {L(x, 0), L(x, 2), L(x, 1)},  {L(x, 1), L(w, 2), L(y, 1)},
            {L(y, 1), inf, L(x, 2)},
        };
        minis.push_back(std::move(mini));
    }

    std::vector<const OverlapCycle*> pieces = ptrs(step1);
    for (const auto& c : minis) pieces.push_back(&c);
    assert_exact_cover(ts, pieces, "skolem steps");

    std::vector<OverlapCycle> all = step1;
    for (const auto& c : minis) all.push_back(c);
    OverlapCycle full = merge_to_single(std::move(all), "skolem final");

    if (trace) {
        trace->step1 = std::move(step1);
        trace->minis = std::move(minis);
    }

    OcycleCertificate cert{std::move(ts), std::move(full),
                           leaf_provenance("skolem", {{"t", t}, {"n", 6LL * t + 1}})};
    cert.verify();
    return cert;
}

// ---------------------------------------------------------------------------
// Direct product recursion
// ---------------------------------------------------------------------------

OcycleCertificate ocycle_product(const OcycleCertificate& a, const OcycleCertificate& b) {
    int u = a.ts.order();
    int w = b.ts.order();
    TripleSystem ts = direct_product(a.ts, b.ts);
    auto L = [&](int i, int x) { return i * w + x; };

    auto overlap_set = [](const OverlapCycle& c, int order) {
        std::vector<bool> is_overlap(order, false);
        for (const auto& ob : c.blocks) is_overlap[ob.head] = true;
        return is_overlap;
    };
    std::vector<bool> overlap_a = overlap_set(a.cycle, u);

    std::vector<OverlapCycle> cycles;
    // type (1): i + O(B) for each i
    for (int i = 0; i < u; ++i) {
        OverlapCycle c;
        c.blocks.reserve(b.cycle.size());
        for (const auto& ob : b.cycle.blocks)
            c.blocks.push_back({L(i, ob.head), L(i, ob.hidden), L(i, ob.tail)});
        cycles.push_back(std::move(c));
    }
    // type (2): O(A) + x for each x
    for (int x = 0; x < w; ++x) {
        OverlapCycle c;
        c.blocks.reserve(a.cycle.size());
        for (const auto& ob : a.cycle.blocks)
            c.blocks.push_back({L(ob.head, x), L(ob.hidden, x), L(ob.tail, x)});
        cycles.push_back(std::move(c));
    }
    // type (3): the six-block cycle per block pair.  The middle role never
    // appears as an overlap in the six-cycle, so a point of A that is hidden
    // everywhere in O(A) must not take it; each block holds at most one such
    // point because a block hides only one element.
    for (const Triple& A : a.ts.blocks()) {
        int i = A.p[0], j = A.p[1], k = A.p[2];
        int hidden_count = !overlap_a[i] + !overlap_a[j] + !overlap_a[k];
        if (hidden_count > 1)
            throw std::runtime_error("product: block " + A.to_string() +
                                     " holds two points never used as overlaps");
        // the middle role stays hidden through the whole six-cycle, so a
        // point of A that is never an overlap must sit at an end role
        if (!overlap_a[j]) std::swap(i, j);
        for (const Triple& B : b.ts.blocks()) {
            int x = B.p[0], y = B.p[1], z = B.p[2];
            OverlapCycle c;
            c.blocks = {
                {L(i, x), L(j, y), L(k, z)}, {L(k, z), L(j, x), L(i, y)},
                {L(i, y), L(j, z), L(k, x)}, {L(k, x), L(j, y), L(i, z)},
                {L(i, z), L(j, x), L(k, y)}, {L(k, y), L(j, z), L(i, x)},
            };
            cycles.push_back(std::move(c));
        }
    }

    assert_exact_cover(ts, ptrs(cycles), "product pieces");
    OverlapCycle full = merge_to_single(std::move(cycles), "product final");

    Provenance prov{"product",
                    {{"u", u}, {"w", w}, {"n", static_cast<long long>(u) * w}},
                    {std::make_shared<Provenance>(a.provenance),
                     std::make_shared<Provenance>(b.provenance)}};
    OcycleCertificate cert{std::move(ts), std::move(full), std::move(prov)};
    cert.verify();
    return cert;
}

// ---------------------------------------------------------------------------
// Doubling recursion 2v+1
// ---------------------------------------------------------------------------

OcycleCertificate ocycle_double_plus_one(const OcycleCertificate& base, DoubleOneTrace* trace) {
    int v = base.ts.order();
    if (v < 7) throw std::invalid_argument("ocycle_double_plus_one: base order must be >= 7");
    TripleSystem ts = double_plus_one(base.ts);
    auto L0 = [&](long long x) { return mod(x, v); };
    auto L1 = [&](long long x) { return v + mod(x, v); };
    int inf = 2 * v;
    int inv2 = (v + 1) / 2;

    // Step 1: {1} + O
    OverlapCycle step1;
    step1.blocks.reserve(base.cycle.size());
    for (const auto& ob : base.cycle.blocks)
        step1.blocks.push_back({L1(ob.head), L1(ob.hidden), L1(ob.tail)});

    // Step 2: difference classes d = 1 and d >= 3 of the type (2) blocks
    std::vector<OverlapCycle> step2;
    for (int d = 1; d <= (v - 1) / 2; ++d) {
        if (d == 2) continue;
        for (auto& c : difference_class_cycles(v, d, [&, d](int x) {
                 return OrientedBlock{L0(x), L1(x + static_cast<long long>(d) * inv2), L0(x + d)};
             }))
            step2.push_back(std::move(c));
    }
    OverlapCycle step2_merged = merge_to_single(step2, "2v+1 step 2");

    // Step 3: d = 2 blocks alternating with the infinity blocks
    OverlapCycle step3;
    step3.blocks.reserve(2 * v);
    for (int x = 0; x < v; ++x) {
        step3.blocks.push_back({L1(x + 1), L0(x), L0(x + 2)});
        step3.blocks.push_back({L0(x + 2), inf, L1(x + 2)});
    }

    assert_exact_cover(ts, {&step1, &step2_merged, &step3}, "2v+1 steps");
    OverlapCycle full = merge_to_single({step1, step2_merged, step3}, "2v+1 final");

    if (trace) {
        trace->step1 = std::move(step1);
        trace->step2 = std::move(step2);
        trace->step2_merged = std::move(step2_merged);
        trace->step3 = std::move(step3);
    }

    Provenance prov{"double_plus_one",
                    {{"v", v}, {"n", 2LL * v + 1}},
                    {std::make_shared<Provenance>(base.provenance)}};
    OcycleCertificate cert{std::move(ts), std::move(full), std::move(prov)};
    cert.verify();
    return cert;
}

// ---------------------------------------------------------------------------
// Doubling recursion 2v+7
// ---------------------------------------------------------------------------

OcycleCertificate ocycle_double_plus_seven(const OcycleCertificate& base,
                                           DoubleSevenTrace* trace) {
    int v = base.ts.order();
    if (v < 15)
        throw std::invalid_argument("ocycle_double_plus_seven: base order must be >= 15");
    Fano7Seed seed = fano7_standard();
    TripleSystem ts = double_plus_seven(base.ts, seed);
    auto L0 = [&](long long x) { return mod(x, v); };
    auto L1 = [&](long long x) { return v + mod(x, v); };
    auto INF = [&](int i) { return 2 * v + (i + 3); };

    // Step 1: {1} + O
    OverlapCycle step1;
    step1.blocks.reserve(base.cycle.size());
    for (const auto& ob : base.cycle.blocks)
        step1.blocks.push_back({L1(ob.head), L1(ob.hidden), L1(ob.tail)});

    // Step 2: type (3) blocks {(0,x),(0,x+2),(0,x+6)} chained by x -> x+2;
    // v odd, so one cycle through every x.
    OverlapCycle step2;
    step2.blocks.reserve(v);
    {
        int x = 0;
        for (int n = 0; n < v; ++n) {
            step2.blocks.push_back({L0(x), L0(x + 6), L0(x + 2)});
            x = mod(x + 2, v);
        }
    }

    // Step 3: type (4) with |y| > 4, one class per y, stepping by 2y.  When
    // gcd(y,v) > 1 the class needs gcd(y,v) cycles; every (0,x) still shows
    // up as an overlap across them.
    std::vector<OverlapCycle> step3;
    for (int y = 5; y <= (v - 1) / 2; ++y) {
        for (auto& c : difference_class_cycles(v, mod(2LL * y, v), [&, y](int x) {
                 return OrientedBlock{L0(x), L1(x + y), L0(x + 2LL * y)};
             }))
            step3.push_back(std::move(c));
    }

    // Step 4: |y| = 4 blocks paired with the inf_{-3} blocks.
    OverlapCycle step4;
    step4.blocks.reserve(2 * v);
    for (int x = 0; x < v; ++x) {
        step4.blocks.push_back({L0(x), L0(x + 8), L1(x + 4)});
        step4.blocks.push_back({L1(x + 4), INF(-3), L0(x + 1)});
    }

    // Step 5: cut step 4 twice.  The long piece re-closes after swapping the
    // final two points; the short piece becomes a cycle through inf_{-3} and
    // picks up the STS(7) cycle there.
    size_t cut1 = 2 * (v - 8);  // block {(0,v-8),(0,0),(1,v-4)}
    OverlapPath long_piece;
    for (size_t idx = 0; idx <= cut1; ++idx) long_piece.blocks.push_back(step4.blocks[idx]);
    OverlapCycle step5_a = close_path(reorient_end(std::move(long_piece), PathEnd::Last));

    OverlapPath short_piece;
    for (size_t idx = cut1 + 1; idx < step4.blocks.size(); ++idx)
        short_piece.blocks.push_back(step4.blocks[idx]);
    short_piece = reorient_end(std::move(short_piece), PathEnd::First);
    short_piece = reorient_end(std::move(short_piece), PathEnd::Last);
    OverlapCycle step5_b = close_path(short_piece);

    OverlapCycle sts7;
    for (const auto& ob : base_case(7).cycle.blocks)
        sts7.blocks.push_back({2 * v + ob.head, 2 * v + ob.hidden, 2 * v + ob.tail});
    step5_b = splice_at(step5_b, sts7, INF(-3));

    // Step 6: the three cycles for k in {-2, 0, 2} covering type (5), i != -3.
    std::vector<OverlapCycle> step6;
    for (int k : {-2, 0, 2}) {
        OverlapCycle c;
        c.blocks.reserve(2 * v);
        for (int x = 0; x < v; ++x) {
            c.blocks.push_back({L0(x), INF(-k), L1(x + k)});
            c.blocks.push_back({L1(x + k), INF(1 - k), L0(x + 1)});
        }
        step6.push_back(std::move(c));
    }

    std::vector<const OverlapCycle*> pieces = {&step1, &step2, &step5_a, &step5_b};
    for (const auto& c : step3) pieces.push_back(&c);
    for (const auto& c : step6) pieces.push_back(&c);
    assert_exact_cover(ts, pieces, "2v+7 steps");

    std::vector<OverlapCycle> all = {step1, step2, step5_a, step5_b};
    for (const auto& c : step3) all.push_back(c);
    for (const auto& c : step6) all.push_back(c);
    OverlapCycle full = merge_to_single(std::move(all), "2v+7 final");

    if (trace) {
        trace->step1 = std::move(step1);
        trace->step2 = std::move(step2);
        trace->step3 = std::move(step3);
        trace->step4 = std::move(step4);
        trace->step5_a = std::move(step5_a);
        trace->step5_b = std::move(step5_b);
        trace->step6 = std::move(step6);
    }

    Provenance prov{"double_plus_seven",
                    {{"v", v}, {"n", 2LL * v + 7}},
                    {std::make_shared<Provenance>(base.provenance)}};
    OcycleCertificate cert{std::move(ts), std::move(full), std::move(prov)};
    cert.verify();
    return cert;
}

// ---------------------------------------------------------------------------
// Dispatchers
// ---------------------------------------------------------------------------

namespace {

OcycleCertificate ocycle_af_impl(int n, std::map<int, OcycleCertificate>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;

    OcycleCertificate cert = [&]() {
        switch (n) {
            case 15:
            case 19:
            case 21:
            case 25:
            case 27:
            case 33:
                return ocycle_base_case(n);
            default:
                break;
        }
        switch (n % 12) {
            case 7:
            case 3: {
                int v = (n - 1) / 2;
                return ocycle_double_plus_one(ocycle_af_impl(v, memo));
            }
            case 1:
            case 9: {
                int v = (n - 7) / 2;
                return ocycle_double_plus_seven(ocycle_af_impl(v, memo));
            }
            default:
                throw std::logic_error("ocycle_af: unreachable residue");
        }
    }();
    memo.emplace(n, cert);
    return cert;
}

}  // namespace

OcycleCertificate ocycle_af(int n) {
    if (!admissible_order(n) || n < 15)
        throw std::invalid_argument("ocycle_af: order " + std::to_string(n) +
                                    " must be admissible (1 or 3 mod 6) and >= 15");
    std::map<int, OcycleCertificate> memo;
    return ocycle_af_impl(n, memo);
}

OcycleCertificate ocycle_any(int n) {
    if (!admissible_order(n) || n < 7)
        throw std::invalid_argument("ocycle_any: order " + std::to_string(n) +
                                    " must be admissible (1 or 3 mod 6) and >= 7");
    if (n % 6 == 3) return ocycle_bose(n / 3);
    return ocycle_skolem((n - 1) / 6);
}

}  // namespace ocycle
