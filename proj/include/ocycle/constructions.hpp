#ifndef OCYCLE_CONSTRUCTIONS_HPP
#define OCYCLE_CONSTRUCTIONS_HPP

#include "ocycle/design.hpp"
#include "ocycle/labels.hpp"

namespace ocycle {

// Bose construction, order 3m for odd m >= 3.  Points Z_3 x Z_m labeled
// (a,i) -> a*m + i.  Type (1) blocks {(a,i),(a,j),(a+1,k)} with i+j = 2k in
// Z_m and i != j; type (2) blocks {(0,i),(1,i),(2,i)}.
TripleSystem bose(int m);

// Skolem construction, order 6t+1 for t >= 1.  Points (Z_2t x Z_3) + {inf}
// labeled (x,i) -> i*2t + x, inf -> 6t.  Blocks A_x, B_{x,y,i}, C_{x,i} with
// x o y = pi(x + y mod 2t), pi(z) = z/2 for even z and (z + 2t - 1)/2 for odd.
TripleSystem skolem(int t);

// Direct product: STS(u) x STS(w) -> STS(uw), points (i,a) -> i*w + a.
// Type (1): u copies of B's blocks; type (2): w copies of A's blocks;
// type (3): the six bijection blocks per (A-block, B-block) pair.
TripleSystem direct_product(const TripleSystem& a, const TripleSystem& b);

// Order 2v+1 from an STS(v).  Points (Z_2 x Z_v) + {inf} labeled
// (0,x) -> x, (1,x) -> v+x, inf -> 2v.  Type (2) midpoints use
// (x+y)/2 = (x+y)*(v+1)/2 mod v.  Works for every admissible v >= 3;
// the automorphism-freeness claim applies only to AF inputs with v >= 15.
TripleSystem double_plus_one(const TripleSystem& a);

// A fixed STS(7) used as the block set over the seven infinity points of the
// 2v+7 construction.  `sts` lives on labels 0..6; the construction reads its
// blocks through the relabeling 0..6 -> -3..3 (label - 3).
struct Fano7Seed {
    TripleSystem sts;
    int relabel(int label) const { return label - 3; }
};

// Order 2v+7 from an STS(v) with v >= 15.  Points (Z_2 x Z_v) + {inf_i} for
// |i| <= 3, labeled (0,x) -> x, (1,x) -> v+x, inf_i -> 2v + (i+3).  Type (4)
// blocks {(0,x),(1,x+y),(0,x+2y)} are generated once each with
// y in [4, (v-1)/2].  The result is validated before being returned; an
// invalid block set aborts with a diagnostic.
TripleSystem double_plus_seven(const TripleSystem& a, const Fano7Seed& seed);

}  // namespace ocycle

#endif
