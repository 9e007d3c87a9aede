#include <doctest.h>

#include <algorithm>
#include <set>

#include "ocycle/base_cases.hpp"
#include "ocycle/constructions.hpp"
#include "ocycle/design.hpp"

using namespace ocycle;

TEST_CASE("bose") {
    SUBCASE("m=3 gives the 12-block STS(9)") {
        TripleSystem ts = bose(3);
        CHECK(ts.order() == 9);
        CHECK(ts.block_count() == 12);
        CHECK(validate_sts(9, ts.blocks()).clean());
        // type (2) blocks under (a,i) -> a*3+i
        CHECK(ts.has_block(Triple(0, 3, 6)));
        CHECK(ts.has_block(Triple(1, 4, 7)));
        CHECK(ts.has_block(Triple(2, 5, 8)));
    }
    SUBCASE("m=5 covers every pair once") {
        TripleSystem ts = bose(5);
        CHECK(ts.block_count() == 35);
        CHECK(validate_sts(15, ts.blocks()).clean());
    }
    SUBCASE("every odd m up to 33 validates") {
        for (int m = 3; m <= 33; m += 2) CHECK(validate_sts(3 * m, bose(m).blocks()).clean());
    }
    SUBCASE("bad m rejected") {
        CHECK_THROWS_AS(bose(4), std::invalid_argument);
        CHECK_THROWS_AS(bose(1), std::invalid_argument);
    }
}

TEST_CASE("skolem") {
    SUBCASE("pi table for 2t = 4") {
        // pi(z) = z/2 for even z, (z + 2t - 1)/2 for odd
        auto pi = [](int z, int period) { return z % 2 == 0 ? z / 2 : (z + period - 1) / 2; };
        CHECK(pi(0, 4) == 0);
        CHECK(pi(1, 4) == 2);
        CHECK(pi(2, 4) == 1);
        CHECK(pi(3, 4) == 3);
    }
    SUBCASE("t=1 gives an STS(7)") {
        TripleSystem ts = skolem(1);
        CHECK(ts.block_count() == 7);
        CHECK(validate_sts(7, ts.blocks()).clean());
    }
    SUBCASE("t=2 gives an STS(13)") {
        TripleSystem ts = skolem(2);
        CHECK(ts.block_count() == 26);
        CHECK(validate_sts(13, ts.blocks()).clean());
    }
    SUBCASE("every t up to 16 validates") {
        for (int t = 1; t <= 16; ++t)
            CHECK(validate_sts(6 * t + 1, skolem(t).blocks()).clean());
    }
    CHECK_THROWS_AS(skolem(0), std::invalid_argument);
}

TEST_CASE("direct_product") {
    TripleSystem t3 = TripleSystem::make(3, {Triple(0, 1, 2)});

    SUBCASE("STS(3) x STS(3) is an STS(9) with 3+3+6 blocks") {
        TripleSystem ts = direct_product(t3, t3);
        CHECK(ts.order() == 9);
        CHECK(ts.block_count() == 12);
        CHECK(validate_sts(9, ts.blocks()).clean());
    }
    SUBCASE("STS(7) x STS(9) has 651 blocks") {
        TripleSystem ts = direct_product(base_case(7).sts, base_case(9).sts);
        CHECK(ts.order() == 63);
        CHECK(ts.block_count() == 651);
        CHECK(validate_sts(63, ts.blocks()).clean());
    }
    SUBCASE("block-count identity u*bB + w*bA + 6*bA*bB") {
        struct Case { int u, w; };
        for (auto [u, w] : {Case{3, 7}, Case{7, 9}, Case{9, 7}, Case{3, 21}}) {
            TripleSystem A = u == 3 ? t3 : base_case(u).sts;
            TripleSystem B = w == 3 ? t3 : base_case(w).sts;
            long long ba = A.block_count(), bb = B.block_count();
            TripleSystem P = direct_product(A, B);
            CHECK(P.block_count() == u * bb + w * ba + 6 * ba * bb);
            CHECK(validate_sts(u * w, P.blocks()).clean());
        }
    }
    SUBCASE("the six type-3 blocks per pair are the six bijections") {
        const TripleSystem& A = base_case(7).sts;
        const TripleSystem& B = base_case(9).sts;
        TripleSystem P = direct_product(A, B);
        const Triple& ab = A.block(2);  // any A-block
        const Triple& bb = B.block(5);  // any B-block
        int i = ab.p[0], j = ab.p[1], k = ab.p[2];
        std::set<std::array<int, 3>> images;  // (image of i, of j, of k) as B-labels
        for (const Triple& t : P.blocks()) {
            // pick out type-3 blocks over this block pair
            int w = B.order();
            int rows[3] = {t.p[0] / w, t.p[1] / w, t.p[2] / w};
            int cols[3] = {t.p[0] % w, t.p[1] % w, t.p[2] % w};
            std::set<int> rowset(rows, rows + 3), colset(cols, cols + 3);
            if (rowset != std::set<int>{i, j, k}) continue;
            if (colset != std::set<int>{bb.p[0], bb.p[1], bb.p[2]}) continue;
            std::array<int, 3> img{};
            for (int s = 0; s < 3; ++s) {
                if (rows[s] == i) img[0] = cols[s];
                if (rows[s] == j) img[1] = cols[s];
                if (rows[s] == k) img[2] = cols[s];
            }
            images.insert(img);
        }
        CHECK(images.size() == 6);  // all six bijections, each exactly once
    }
}

TEST_CASE("direct products stack up to order 189") {
    TripleSystem t3 = TripleSystem::make(3, {Triple(0, 1, 2)});
    TripleSystem p63 = direct_product(base_case(7).sts, base_case(9).sts);
    TripleSystem p189 = direct_product(p63, t3);
    CHECK(p189.order() == 189);
    CHECK(validate_sts(189, p189.blocks()).clean());
}

TEST_CASE("double_plus_one") {
    SUBCASE("the degenerate order-3 system doubles to an STS(7)") {
        TripleSystem t3 = TripleSystem::make(3, {Triple(0, 1, 2)});
        TripleSystem ts = double_plus_one(t3);
        CHECK(ts.order() == 7);
        CHECK(validate_sts(7, ts.blocks()).clean());
    }
    SUBCASE("order 7 base gives an STS(15)") {
        TripleSystem ts = double_plus_one(base_case(7).sts);
        CHECK(ts.order() == 15);
        CHECK(ts.block_count() == 35);
        CHECK(validate_sts(15, ts.blocks()).clean());
        // type (2) midpoint for x=0, y=1: (0+1)*4 = 4 mod 7
        CHECK(ts.has_block(Triple(0, 1, 7 + 4)));
    }
    SUBCASE("type (1) blocks mapped back equal the base block set") {
        const TripleSystem& A = base_case(9).sts;
        TripleSystem ts = double_plus_one(A);
        std::set<Triple> mapped_back;
        for (const Triple& t : ts.blocks()) {
            if (t.p[0] >= 9 && t.p[2] < 18)  // all three points in the 1-coset
                mapped_back.insert(Triple(t.p[0] - 9, t.p[1] - 9, t.p[2] - 9));
        }
        std::set<Triple> base_set(A.blocks().begin(), A.blocks().end());
        CHECK(mapped_back == base_set);
    }
    SUBCASE("order 15 AF base gives an STS(31)") {
        TripleSystem ts = double_plus_one(base_case(15).sts);
        CHECK(ts.block_count() == 155);
        CHECK(validate_sts(31, ts.blocks()).clean());
    }
}

TEST_CASE("double_plus_seven") {
    Fano7Seed seed = fano7_standard();

    SUBCASE("order 15 base gives an STS(37)") {
        TripleSystem ts = double_plus_seven(base_case(15).sts, seed);
        CHECK(ts.order() == 37);
        CHECK(ts.block_count() == 222);
        CHECK(validate_sts(37, ts.blocks()).clean());
    }
    SUBCASE("type (3) blocks have the {x, x+2, x+6} shape") {
        int v = 15;
        TripleSystem ts = double_plus_seven(base_case(v).sts, seed);
        for (int x = 0; x < v; ++x)
            CHECK(ts.has_block(Triple(x, (x + 2) % v, (x + 6) % v)));
    }
    SUBCASE("order 19 base gives an STS(45)") {
        TripleSystem ts = double_plus_seven(base_case(19).sts, seed);
        CHECK(ts.block_count() == 330);
        CHECK(validate_sts(45, ts.blocks()).clean());
    }
    SUBCASE("small bases rejected") {
        CHECK_THROWS_AS(double_plus_seven(base_case(13).sts, seed), std::invalid_argument);
    }
}

TEST_CASE("doublings from every base case validate") {
    for (int v : base_case_orders()) {
        if (v >= 7) CHECK(validate_sts(2 * v + 1, double_plus_one(base_case(v).sts).blocks()).clean());
        if (v >= 15)
            CHECK(validate_sts(2 * v + 7,
                               double_plus_seven(base_case(v).sts, fano7_standard()).blocks())
                      .clean());
    }
}
