#include "ocycle/constructions.hpp"

#include <stdexcept>

namespace ocycle {

namespace {
int mod(long long x, int m) {
    int r = static_cast<int>(x % m);
    return r < 0 ? r + m : r;
}
}  // namespace

TripleSystem bose(int m) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("bose: m must be odd and >= 3, got " + std::to_string(m));

    auto P = [&](int a, long long i) { return a * m + mod(i, m); };
    int inv2 = (m + 1) / 2;  // 2*inv2 = 1 (mod m)

    std::vector<Triple> blocks;
    blocks.reserve(sts_block_count(3LL * m));
    for (int a = 0; a < 3; ++a) {
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                int k = mod(static_cast<long long>(i + j) * inv2, m);
                blocks.emplace_back(P(a, i), P(a, j), P((a + 1) % 3, k));
            }
        }
    }
    for (int i = 0; i < m; ++i) blocks.emplace_back(P(0, i), P(1, i), P(2, i));
    return TripleSystem::make(3 * m, std::move(blocks));
}

TripleSystem skolem(int t) {
    if (t < 1) throw std::invalid_argument("skolem: t must be >= 1, got " + std::to_string(t));

    int n = 6 * t + 1;
    int period = 2 * t;
    auto L = [&](long long x, int i) { return i * period + mod(x, period); };
    int inf = 6 * t;
    auto pi = [&](int z) { return z % 2 == 0 ? z / 2 : (z + period - 1) / 2; };

    std::vector<Triple> blocks;
    blocks.reserve(sts_block_count(n));
    for (int x = 0; x < t; ++x) blocks.emplace_back(L(x, 0), L(x, 1), L(x, 2));
    for (int x = 0; x < period; ++x) {
        for (int y = x + 1; y < period; ++y) {
            int circ = pi(mod(x + y, period));
            for (int i = 0; i < 3; ++i)
                blocks.emplace_back(L(x, i), L(y, i), L(circ, (i + 1) % 3));
        }
    }
    for (int x = 0; x < t; ++x)
        for (int i = 0; i < 3; ++i) blocks.emplace_back(inf, L(x + t, i), L(x, (i + 1) % 3));
    return TripleSystem::make(n, std::move(blocks));
}

TripleSystem direct_product(const TripleSystem& a, const TripleSystem& b) {
    int u = a.order();
    int w = b.order();
    auto L = [&](int i, int x) { return i * w + x; };

    std::vector<Triple> blocks;
    blocks.reserve(sts_block_count(static_cast<long long>(u) * w));
    for (int i = 0; i < u; ++i)
        for (const Triple& B : b.blocks()) blocks.emplace_back(L(i, B.p[0]), L(i, B.p[1]), L(i, B.p[2]));
    for (int x = 0; x < w; ++x)
        for (const Triple& A : a.blocks()) blocks.emplace_back(L(A.p[0], x), L(A.p[1], x), L(A.p[2], x));
    for (const Triple& A : a.blocks()) {
        int i = A.p[0], j = A.p[1], k = A.p[2];
        for (const Triple& B : b.blocks()) {
            int x = B.p[0], y = B.p[1], z = B.p[2];
            blocks.emplace_back(L(i, x), L(j, y), L(k, z));
            blocks.emplace_back(L(k, z), L(j, x), L(i, y));
            blocks.emplace_back(L(i, y), L(j, z), L(k, x));
            blocks.emplace_back(L(k, x), L(j, y), L(i, z));
            blocks.emplace_back(L(i, z), L(j, x), L(k, y));
            blocks.emplace_back(L(k, y), L(j, z), L(i, x));
        }
    }
    return TripleSystem::make(u * w, std::move(blocks));
}

TripleSystem double_plus_one(const TripleSystem& a) {
    int v = a.order();
    if (v < 3 || !admissible_order(v))
        throw std::invalid_argument("double_plus_one: base order " + std::to_string(v) +
                                    " must be admissible and >= 3");

    int inf = 2 * v;
    int inv2 = (v + 1) / 2;
    auto L0 = [&](long long x) { return mod(x, v); };
    auto L1 = [&](long long x) { return v + mod(x, v); };

    std::vector<Triple> blocks;
    blocks.reserve(sts_block_count(2LL * v + 1));
    for (const Triple& A : a.blocks()) blocks.emplace_back(L1(A.p[0]), L1(A.p[1]), L1(A.p[2]));
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y)
            blocks.emplace_back(L0(x), L0(y), L1(static_cast<long long>(x + y) * inv2));
    for (int x = 0; x < v; ++x) blocks.emplace_back(L0(x), L1(x), inf);
    return TripleSystem::make(2 * v + 1, std::move(blocks));
}

TripleSystem double_plus_seven(const TripleSystem& a, const Fano7Seed& seed) {
    int v = a.order();
    if (v < 15 || !admissible_order(v))
        throw std::invalid_argument("double_plus_seven: base order " + std::to_string(v) +
                                    " must be admissible and >= 15");
    if (seed.sts.order() != 7)
        throw std::invalid_argument("double_plus_seven: seed must be an STS(7)");

    auto L0 = [&](long long x) { return mod(x, v); };
    auto L1 = [&](long long x) { return v + mod(x, v); };
    auto INF = [&](int i) { return 2 * v + (i + 3); };  // |i| <= 3

    std::vector<Triple> blocks;
    blocks.reserve(sts_block_count(2LL * v + 7));
    // (1) the doubled base
    for (const Triple& A : a.blocks()) blocks.emplace_back(L1(A.p[0]), L1(A.p[1]), L1(A.p[2]));
    // (2) the STS(7) on the infinity points
    for (const Triple& C : seed.sts.blocks())
        blocks.emplace_back(INF(seed.relabel(C.p[0])), INF(seed.relabel(C.p[1])),
                            INF(seed.relabel(C.p[2])));
    // (3) {(0,x),(0,x+2),(0,x+6)}
    for (int x = 0; x < v; ++x) blocks.emplace_back(L0(x), L0(x + 2), L0(x + 6));
    // (4) {(0,x),(1,x+y),(0,x+2y)} once per block: y in [4,(v-1)/2]
    for (int y = 4; y <= (v - 1) / 2; ++y)
        for (int x = 0; x < v; ++x) blocks.emplace_back(L0(x), L1(x + y), L0(x + 2LL * y));
    // (5) {inf_i,(1,j),(0,i+j)}
    for (int i = -3; i <= 3; ++i)
        for (int j = 0; j < v; ++j) blocks.emplace_back(INF(i), L1(j), L0(i + j));

    try {
        return TripleSystem::make(2 * v + 7, std::move(blocks));
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("double_plus_seven aborted: block set of order ") +
                                  std::to_string(2 * v + 7) + " failed validation: " + e.what(),
                              e.report());
    }
}

}  // namespace ocycle
