#include <doctest.h>

#include <vector>

#include "ocycle/labels.hpp"

using namespace ocycle;

namespace {

// every origin the scheme can produce round-trips through its label
void check_bijection(const LabelScheme& ls) {
    std::vector<bool> hit(ls.order(), false);
    for (int label = 0; label < ls.order(); ++label) {
        PointOrigin o = ls.origin(label);
        CHECK(ls.label(o) == label);
        CHECK_FALSE(hit[label]);
        hit[label] = true;
    }
}

}  // namespace

TEST_CASE("double_plus_one scheme is the declared bijection") {
    LabelScheme ls = LabelScheme::double_plus_one(7);
    CHECK(ls.label(PointOrigin::pair(0, 3)) == 3);
    CHECK(ls.label(PointOrigin::pair(1, 3)) == 10);
    CHECK(ls.label(PointOrigin::infinity()) == 14);
    check_bijection(ls);
    CHECK_THROWS_AS(ls.label(PointOrigin::pair(2, 0)), std::domain_error);
    CHECK_THROWS_AS(ls.origin(15), std::domain_error);
}

TEST_CASE("double_plus_seven scheme places the seven infinity points") {
    LabelScheme ls = LabelScheme::double_plus_seven(15);
    CHECK(ls.label(PointOrigin::pair(0, 14)) == 14);
    CHECK(ls.label(PointOrigin::pair(1, 0)) == 15);
    CHECK(ls.label(PointOrigin::infinity(-3)) == 30);
    CHECK(ls.label(PointOrigin::infinity(0)) == 33);
    CHECK(ls.label(PointOrigin::infinity(3)) == 36);
    check_bijection(ls);
    CHECK_THROWS_AS(ls.label(PointOrigin::infinity(4)), std::domain_error);
}

TEST_CASE("bose scheme") {
    LabelScheme ls = LabelScheme::bose(5);
    CHECK(ls.label(PointOrigin::pair(2, 4)) == 14);
    check_bijection(ls);
    CHECK_THROWS_AS(ls.label(PointOrigin::infinity()), std::domain_error);
}

TEST_CASE("skolem scheme") {
    LabelScheme ls = LabelScheme::skolem(2);
    CHECK(ls.label(PointOrigin::pair(0, 3)) == 3);   // (x=3, i=0)
    CHECK(ls.label(PointOrigin::pair(2, 1)) == 9);   // (x=1, i=2)
    CHECK(ls.label(PointOrigin::infinity()) == 12);
    check_bijection(ls);
}

TEST_CASE("product scheme") {
    LabelScheme ls = LabelScheme::product(7, 9);
    CHECK(ls.label(PointOrigin::pair(6, 8)) == 62);
    check_bijection(ls);
    CHECK_THROWS_AS(ls.label(PointOrigin::pair(7, 0)), std::domain_error);
}

TEST_CASE("appendix scheme infers residues from the infinity count") {
    LabelScheme ls21 = LabelScheme::appendix(21, 3);  // m = 9
    CHECK(ls21.label(PointOrigin::pair(1, 1)) == 10);
    CHECK(ls21.label(PointOrigin::infinity(2)) == 20);
    check_bijection(ls21);

    LabelScheme ls27 = LabelScheme::appendix(27, 1);  // m = 13
    CHECK(ls27.label(PointOrigin::pair(1, 10)) == 23);
    CHECK(ls27.label(PointOrigin::infinity(0)) == 26);
    check_bijection(ls27);
}
