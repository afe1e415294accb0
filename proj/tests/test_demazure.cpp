#include <doctest.h>

#include <set>

#include "gvs/demazure.hpp"
#include "gvs/equivalence.hpp"
#include "gvs/gv.hpp"
#include "helpers.hpp"

using namespace gvs;
using tst::shp;
using tst::tup;

TEST_CASE("permutation basics") {
    Permutation pi({2, 3, 1});
    CHECK(pi.n() == 3);
    CHECK(pi.at(1) == 2);
    CHECK_FALSE(pi.is_identity());
    CHECK(Permutation({1, 2, 3}).is_identity());
    CHECK(pi.text() == "2,3,1");
    CHECK_THROWS_AS(Permutation({1, 1, 3}), domain_error);
    CHECK_THROWS_AS(Permutation({0, 1, 2}), domain_error);

    CHECK(Permutation({1, 2, 3}).reduced_word().empty());
    CHECK(Permutation({2, 1, 3}).reduced_word() == std::vector<int>{1});
    // the longest element of S_3 has length 3
    CHECK(Permutation({3, 2, 1}).reduced_word().size() == 3);
}

TEST_CASE("lambda-permutations increase within carrels") {
    Shape s = shp({1, 1, 0});  // carrels (1,2], (3]
    CHECK(Permutation({1, 2, 3}).is_lambda_permutation(s));
    CHECK(Permutation({1, 3, 2}).is_lambda_permutation(s));
    CHECK_FALSE(Permutation({2, 1, 3}).is_lambda_permutation(s));
    CHECK(Permutation({3, 4, 1, 2}).is_lambda_permutation(shp({1, 1, 0, 0})));
}

TEST_CASE("divided differences") {
    MultiPoly x = MultiPoly::variable(2, 1), y = MultiPoly::variable(2, 2);
    // pi_1 x1 = x1 + x2; pi_1 is idempotent; symmetric input is fixed
    MultiPoly px = divided_difference(1, x);
    CHECK(px == x + y);
    CHECK(divided_difference(1, px) == px);
    CHECK(divided_difference(1, x * y) == x * y);
    CHECK(divided_difference(1, MultiPoly::constant(2, 4)) ==
          MultiPoly::constant(2, 4));
    CHECK_THROWS_AS(divided_difference(2, x), domain_error);
    CHECK_THROWS_AS(divided_difference(0, x), domain_error);

    // braid relation: pi_1 pi_2 pi_1 = pi_2 pi_1 pi_2 on a generic monomial
    MultiPoly m = MultiPoly::monomial(3, {3, 1, 0});
    auto d = [](int i, const MultiPoly& f) { return divided_difference(i, f); };
    CHECK(d(1, d(2, d(1, m))) == d(2, d(1, d(2, m))));
    // commuting relation in four variables
    MultiPoly m4 = MultiPoly::monomial(4, {2, 1, 3, 0});
    CHECK(d(1, d(3, m4)) == d(3, d(1, m4)));
}

TEST_CASE("characters at the extremes") {
    Shape s = shp({2, 1, 0});
    CHECK(demazure_char(s, Permutation({1, 2, 3})) ==
          MultiPoly::monomial(3, {2, 1, 0}));
    // longest element: the symmetric Schur polynomial
    CHECK(demazure_char(s, Permutation({3, 2, 1})) ==
          row_bound_sum(s, tup(s, "3,3,3")));

    // non-lambda-permutations are refused
    Shape f = shp({1, 1, 0});
    CHECK_THROWS_AS(demazure_char(f, Permutation({2, 1, 3})), domain_error);
}

TEST_CASE("characters match gapless determinants one for one") {
    for (std::vector<int> parts : {std::vector<int>{2, 1, 0}, {1, 1, 0, 0}}) {
        Shape s = shp(std::move(parts));
        MatchReport rep = match_demazure_characters(s);
        CHECK(rep.all_matched());
        CHECK(rep.matched.size() == rep.catalan);
        CHECK(rep.catalan == parabolic_catalan(s));
        std::set<std::string> gammas;
        for (const auto& entry : rep.matched) {
            REQUIRE(!entry.matching_pis.empty());
            gammas.insert(entry.gamma.text());
            MultiPoly det_poly = schur_via_det(s, entry.gamma).poly;
            for (const Permutation& pi : entry.matching_pis) {
                CHECK(pi.is_lambda_permutation(s));
                CHECK(demazure_char(s, pi) == det_poly);
            }
        }
        CHECK(gammas.size() == rep.matched.size());
    }
}

TEST_CASE("matched pairs on the three-row staircase") {
    MatchReport rep = match_demazure_characters(shp({2, 1, 0}));
    REQUIRE(rep.matched.size() == 5);
    CHECK(rep.matched.front().gamma.text() == "1;2;3");
    CHECK(rep.matched.front().matching_pis ==
          std::vector<Permutation>{Permutation({1, 2, 3})});
    CHECK(rep.matched.back().gamma.text() == "3;3;3");
    CHECK(rep.matched.back().matching_pis ==
          std::vector<Permutation>{Permutation({3, 2, 1})});
}
