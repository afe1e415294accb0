#include <doctest.h>

#include "gvs/gv.hpp"
#include "helpers.hpp"

using namespace gvs;
using tst::shp;
using tst::tup;

TEST_CASE("matrix entries and the failing raw determinant") {
    Shape s = shp({1, 1, 0});
    RTuple b = tup(s, "3,2;3");
    GVMatrix m = gv_matrix(s, b);
    REQUIRE(m.size() == 3);
    CHECK(m.entries[0][0].str() == "x1 + x2 + x3");  // h_1(1,3)
    CHECK(m.entries[0][1].str() == "1");             // u = 0
    CHECK(m.entries[1][2].str() == "0");             // u = -1
    CHECK(m.entries[2][0].str() == "x3^3");          // h_3(3,3)
    CHECK(m.entries[2][2].str() == "1");             // extended row, u = 0

    // the raw determinant disagrees with the tableau sum here
    CHECK(determinant(m.entries).str() == "x1*x2 - x3^2");
    CHECK(row_bound_sum(s, b).str() == "x1*x2");

    // substituting the core repairs it
    CHECK(determinant(gv_matrix(s, core(b)).entries).str() == "x1*x2");
}

TEST_CASE("second failing example") {
    Shape s = shp({2, 1, 0});
    RTuple b = tup(s, "3,2,3");
    MultiPoly tab = row_bound_sum(s, b);
    CHECK(tab.str() == "x1^2*x2 + x1*x2^2 + x1*x2*x3");
    CHECK(determinant(gv_matrix(s, b).entries) ==
          tab - MultiPoly::monomial(3, {0, 0, 3}));
}

TEST_CASE("determinant route agrees with tableaux on valid inputs") {
    Shape s = shp({2, 1, 0});
    for (const char* t : {"1,2,3", "1,3,3", "2,2,3", "2,3,3", "3,3,3"}) {
        RTuple b = tup(s, t);
        SchurResult r = schur_via_det(s, b);
        CHECK(r.method == SchurMethod::det);
        CHECK(r.poly == row_bound_sum(s, b));
    }
}

TEST_CASE("core fallback and refusals") {
    Shape s = shp({1, 1, 0});
    RTuple b = tup(s, "3,2;3");  // gapless core but above its platform
    SchurResult r = schur_via_det(s, b);
    CHECK(r.method == SchurMethod::det_core);
    CHECK(r.poly == row_bound_sum(s, b));
    CHECK_THROWS_AS(schur_via_det(s, b, /*strict=*/true), domain_error);

    // core is not gapless: determinant route refuses entirely
    Shape p = shp({2, 1, 0});
    CHECK_THROWS_AS(schur_via_det(p, tup(p, "3,2,3")), domain_error);

    // non-upper and mismatched contexts are rejected
    CHECK_THROWS_AS(gv_matrix(p, tup(p, "3,1,3")), domain_error);
    CHECK_THROWS_AS(gv_matrix(p, tup(3, {1}, "3;3,3")), domain_error);
}

TEST_CASE("efficiency counts are literal matrix term counts") {
    Shape s = shp({1, 1, 0});
    for (const char* t : {"1,2;3", "2,2;3", "1,3;3", "3,3;3"}) {
        RTuple b = tup(s, t);
        CHECK(efficiency_count(s, b) == gv_matrix(s, b).term_count());
    }
    CHECK(efficiency_count(s, tup(s, "1,2;3")) == 4);

    Shape w = shp({2, 1, 0});
    CHECK(efficiency_count(w, tup(w, "1,2,3")) == 4);
    CHECK(efficiency_count(w, tup(w, "3,3,3")) == 16);
}

TEST_CASE("minor reduction preserves the determinant") {
    Shape s = shp({1, 1, 0});  // zeta_1 = 2 nonempty rows
    RTuple b = tup(s, "2,2;3");
    GVMatrix m = gv_matrix(s, b);
    GVMatrix minor = reduce_to_minor(m);
    CHECK(minor.size() == 2);
    CHECK(determinant(minor.entries) == determinant(m.entries));

    Shape full = shp({2, 1, 1});  // every row nonempty: identity
    GVMatrix fm = gv_matrix(full, tup(full, "3,3,3"));
    CHECK(reduce_to_minor(fm).size() == 3);
}

TEST_CASE("factoring out the base column block") {
    Shape s = shp({3, 2, 1});
    auto [mono, rest] = factor_out_base(s);
    CHECK(mono.str() == "x1*x2*x3");
    CHECK(rest.parts == std::vector<int>{2, 1, 0});
    RTuple full = tup(s, "3,3,3");
    CHECK(row_bound_sum(s, full) ==
          mono * row_bound_sum(rest, tup(rest, "3,3,3")));

    Shape flat = shp({2, 1, 0});
    auto [one, same] = factor_out_base(flat);
    CHECK(one == MultiPoly::constant(3, 1));
    CHECK(same == flat);
}
