#include <doctest.h>

#include "gvs/json_io.hpp"
#include "helpers.hpp"

using namespace gvs;
using tst::shp;
using tst::tup;

TEST_CASE("tuple round trip") {
    RTuple b = tup(9, {3, 8}, "2,7,5;8,6,6,9,9;9");
    json j = to_json(b);
    CHECK(j["n"] == 9);
    CHECK(j["R"] == json::array({3, 8}));
    CHECK(rtuple_from_json(j) == b);
    CHECK(rtuple_from_json(json::parse(j.dump())) == b);
}

TEST_CASE("shape round trip") {
    Shape s = shp({2, 1, 0});
    json j = to_json(s);
    CHECK(j["parts"] == json::array({2, 1, 0}));
    CHECK(shape_from_json(j) == s);
}

TEST_CASE("polynomial round trip keeps canonical order") {
    Shape s = shp({2, 1, 0});
    MultiPoly p = row_bound_sum(s, tup(s, "3,3,3"));
    json j = to_json(p);
    CHECK(j["n_vars"] == 3);
    CHECK(j["terms"].size() == p.term_count());
    // descending lex: first term is x1^2*x2
    CHECK(j["terms"][0]["exps"] == json::array({2, 1, 0}));
    CHECK(poly_from_json(j) == p);

    MultiPoly zero(3);
    CHECK(poly_from_json(to_json(zero)) == zero);
    CHECK(to_json(zero)["terms"].empty());
}

TEST_CASE("oversized coefficients ride as decimal strings") {
    MultiPoly p(1);
    Int huge("170141183460469231731687303715884105727");
    p.add_term({2}, huge);
    p.add_term({1}, -3);
    json j = to_json(p);
    CHECK(j["terms"][0]["coeff"].is_string());
    CHECK(j["terms"][1]["coeff"] == -3);
    CHECK(poly_from_json(j) == p);
}

TEST_CASE("flags, critical lists, witnesses, classes, reports") {
    Shape s = shp({1, 1, 0});
    RTuple b = tup(s, "3,2;3");
    json jf = to_json(classify(b));
    CHECK(jf["is_upper"] == true);
    CHECK(jf["is_bounded_by_platform"] == false);

    json jc = to_json(critical_list(b));
    CHECK(jc.size() == 2);  // one array per carrel
    CHECK(jc[0][0]["index"] == 2);
    CHECK(jc[0][0]["entry"] == 2);

    json jw = to_json(construct_violation_witness(s, b));
    CHECK(jw["sink_permutation"] == json::array({2, 1, 3}));
    CHECK(jw["components"].size() == 3);

    json jcls = to_json(class_of(s, tup(s, "2,2;3")), s);
    CHECK(jcls["size_of_interval"] == 2);
    CHECK(jcls["efficiency_count_at_gamma"] == 4);
    CHECK(rtuple_from_json(jcls["gamma"]).text() == "1,2;3");

    json jrep = to_json(match_demazure_characters(s));
    CHECK(jrep["count"] == 3);
    CHECK(jrep["unmatched_gammas"].empty());
    CHECK(jrep["matched"][0]["pi_one_line"][0] == json::array({1, 2, 3}));
}
