#ifndef OCYCLE_BUILDERS_HPP
#define OCYCLE_BUILDERS_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "ocycle/base_cases.hpp"
#include "ocycle/constructions.hpp"
#include "ocycle/cycle.hpp"
#include "ocycle/design.hpp"

namespace ocycle {

// How a certificate was produced: construction tag, parameters, and the
// certificates it was built from.
struct Provenance {
    std::string construction;
    std::map<std::string, long long> params;
    std::vector<std::shared_ptr<const Provenance>> children;

    nlohmann::json to_json() const;
};

// A triple system paired with a verified 1-overlap cycle over it.
struct OcycleCertificate {
    TripleSystem ts;
    OverlapCycle cycle;
    Provenance provenance;

    // Re-runs both validators; throws std::runtime_error on any defect.
    void verify() const;
};

// The cycles covering one difference class: stepping x -> x + step around
// Z_modulus splits the class into gcd(step, modulus) cycles, with coset
// representatives taken in increasing order.  block_for(x) must produce the
// block chaining from overlap x to overlap x + step.
std::vector<OverlapCycle> difference_class_cycles(
    int modulus, int step, const std::function<OrientedBlock(int)>& block_for);

// --- step traces: the intermediate cycles of each constructive route, ------
// --- exposed so the per-step claims can be checked directly in tests. ------

struct DoubleOneTrace {
    OverlapCycle step1;                // the doubled base cycle
    std::vector<OverlapCycle> step2;   // difference-class cycles, d != 2
    OverlapCycle step2_merged;
    OverlapCycle step3;                // d = 2 paired with the infinity blocks
};

struct DoubleSevenTrace {
    OverlapCycle step1;
    OverlapCycle step2;                // {(0,x),(0,x+2),(0,x+6)} chain
    std::vector<OverlapCycle> step3;   // |y| > 4 classes
    OverlapCycle step4;                // |y| = 4 paired with inf_{-3} blocks
    OverlapCycle step5_a;              // re-closed long part of step 4
    OverlapCycle step5_b;              // short part joined with the STS(7) cycle
    std::vector<OverlapCycle> step6;   // k in {-2, 0, 2}
};

struct BoseTrace {
    OverlapCycle a1_cycle;             // all type (1) blocks with a = 1
    OverlapCycle a2_cycle;             // all type (1) blocks with a = 2, pre-cut
    OverlapPath a2_string;             // the cut of a2_cycle: (2,1) -> (0,0)
    std::vector<OverlapCycle> a0_cycles;  // a = 0 classes except the paired one
    OverlapCycle pair_cycle;           // type (2) blocks paired with the excluded class
    OverlapPath main_string;           // the cut of the combined cycle: (0,0) -> (2,1)
};

struct SkolemTrace {
    std::vector<OverlapCycle> step1;   // one merged cycle per i in Z_3 (t >= 2)
    std::vector<OverlapCycle> minis;   // one 7-block cycle per x in [0, t)
};

// --- the five constructive builders ----------------------------------------

// Result for n = 3 (mod 6): Bose system of order 3m with a single verified
// cycle.  Works for every odd m >= 3; the degenerate distance structure at
// m = 3 is handled by the same surgery on the blocks it names.
OcycleCertificate ocycle_bose(int m, BoseTrace* trace = nullptr);

// Result for n = 1 (mod 6): Skolem system of order 6t+1.  At t = 1 step 1 is
// vacuous and the single step-2 mini-cycle covers the whole system.
OcycleCertificate ocycle_skolem(int t, SkolemTrace* trace = nullptr);

// Direct-product recursion: both inputs carry verified cycles; the output
// covers STS(u*w) with a single cycle.
OcycleCertificate ocycle_product(const OcycleCertificate& a, const OcycleCertificate& b);

// Doubling recursion 2v+1; requires odd admissible v >= 7.
OcycleCertificate ocycle_double_plus_one(const OcycleCertificate& base,
                                         DoubleOneTrace* trace = nullptr);

// Doubling recursion 2v+7; requires admissible v >= 15.
OcycleCertificate ocycle_double_plus_seven(const OcycleCertificate& base,
                                           DoubleSevenTrace* trace = nullptr);

// Certificate from a shipped base-case listing.
OcycleCertificate ocycle_base_case(int v);

// AF route: base cases for n in {15,19,21,25,27,33}, otherwise dispatch on
// n mod 12 (1 -> 2v+7, 3 -> 2v+1, 7 -> 2v+1, 9 -> 2v+7) recursing on the
// admissible v.  Memoizes shared sub-orders within one call.
OcycleCertificate ocycle_af(int n);

// Any-STS route for every admissible n >= 7: Bose for n = 3 (mod 6), Skolem
// for n = 1 (mod 6).
OcycleCertificate ocycle_any(int n);

}  // namespace ocycle

#endif
