#include <catch2/catch_amalgamated.hpp>

#include "qtop/enumerate.hpp"
#include "qtop/oracles.hpp"
#include "qtop/setcomp.hpp"

using namespace qtop;

namespace {
QPoset dsl(const std::string& s) { return parse_dsl(s); }
using SS = std::pair<SetComposition, SetComposition>;
} // namespace

TEST_CASE("set composition invariants") {
    CHECK_THROWS_AS(SetComposition({AtomSet{}}), InputError);
    CHECK_THROWS_AS(SetComposition({{0, 1}, {1}}), InputError);
    CHECK(SetComposition().length() == 0);
    CHECK(SetComposition({{0, 1}, {2}}).str() == "({0,1},{2})");
}

TEST_CASE("restriction of set compositions") {
    SetComposition c({{0}, {1, 2}});
    CHECK(sc_restrict(c, {}) == SetComposition());
    CHECK(sc_restrict(SetComposition({{0}, {1, 2}}), {1}) == SetComposition({{1}}));
    CHECK(sc_restrict(SetComposition({{0, 1}, {2}}), {0, 2}) == SetComposition({{0}, {2}}));
    CHECK_THROWS_AS(sc_restrict(c, {7}), InputError);
}

TEST_CASE("quasi-shuffle product of set compositions") {
    SetComposition A({{1, 2}}), B({{3}});
    LinComb<SetComposition> expected;
    expected.add_term(SetComposition({{1, 2}, {3}}), 1);
    expected.add_term(SetComposition({{3}, {1, 2}}), 1);
    expected.add_term(SetComposition({{1, 2, 3}}), 1);
    CHECK(sc_product(A, B) == expected);

    SetComposition AB({{1}, {2}}), C({{3}});
    LinComb<SetComposition> e2;
    e2.add_term(SetComposition({{1}, {2}, {3}}), 1);
    e2.add_term(SetComposition({{1}, {3}, {2}}), 1);
    e2.add_term(SetComposition({{3}, {1}, {2}}), 1);
    e2.add_term(SetComposition({{1}, {2, 3}}), 1);
    e2.add_term(SetComposition({{1, 3}, {2}}), 1);
    CHECK(sc_product(AB, C) == e2);

    CHECK(sc_product(SetComposition(), AB) == LinComb<SetComposition>(AB));
    CHECK(sc_product(AB, SetComposition()) == LinComb<SetComposition>(AB));
    CHECK_THROWS_AS(sc_product(AB, SetComposition({{2}})), InputError);

    // brute-force filter oracle on mixed sizes
    for (const auto& c1 : all_set_compositions({0, 1}))
        for (const auto& c2 : all_set_compositions({2, 3}))
            CHECK(sc_product(c1, c2) == oracle::brute_sc_product(c1, c2));
}

TEST_CASE("deconcatenation of set compositions") {
    CHECK(sc_delta(SetComposition()) ==
          LinComb<SS>(SS{SetComposition(), SetComposition()}));
    SetComposition A({{5}});
    LinComb<SS> two;
    two.add_term({SetComposition(), A}, 1);
    two.add_term({A, SetComposition()}, 1);
    CHECK(sc_delta(A) == two);
    CHECK(sc_delta(SetComposition({{0}, {1}})).term_count() == 3);
}

TEST_CASE("internal coproduct of set compositions") {
    SetComposition A({{1}});
    CHECK(sc_rho(A) == LinComb<SS>(SS{A, A}));

    SetComposition AB({{1}, {2}});
    LinComb<SS> expected;
    expected.add_term({AB, SetComposition({{1, 2}})}, 1);
    expected.add_term({AB, AB}, 1);
    expected.add_term({SetComposition({{2}, {1}}), AB}, 1);
    expected.add_term({SetComposition({{1, 2}}), AB}, 1);
    CHECK(sc_rho(AB) == expected);

    CHECK(sc_counit(SetComposition({{0, 1, 2}})) == Rational(1));
    CHECK(sc_counit(AB) == Rational(0));
    CHECK(sc_counit(SetComposition()) == Rational(1));
}

TEST_CASE("linear extensions") {
    // chain of two classes: unique extension
    auto exts = linear_extensions(dsl("0~1, 0<2"));
    REQUIRE(exts.size() == 1);
    CHECK(exts[0] == SetComposition({{0, 1}, {2}}));

    // two incomparable classes
    auto exts2 = linear_extensions(dsl("0~1, 2"));
    CHECK(exts2.size() == 3);

    // three-element chain
    auto exts3 = linear_extensions(dsl("0<1, 1<2"));
    REQUIRE(exts3.size() == 1);
    CHECK(exts3[0] == SetComposition({{0}, {1}, {2}}));

    // brute-force filter over all compositions, all topologies with 3 atoms
    for (const auto& t : labeled_topologies(3)) {
        auto fast = linear_extensions(t);
        auto slow = oracle::brute_linear_extensions(t);
        std::sort(slow.begin(), slow.end());
        CHECK(fast == slow);
    }
}

TEST_CASE("sum over linear extensions") {
    LinComb<SetComposition> corolla = L(dsl("0<1, 0<2"));
    LinComb<SetComposition> expected;
    expected.add_term(SetComposition({{0}, {1}, {2}}), 1);
    expected.add_term(SetComposition({{0}, {2}, {1}}), 1);
    expected.add_term(SetComposition({{0}, {1, 2}}), 1);
    CHECK(corolla == expected);

    CHECK(L(QPoset()) == LinComb<SetComposition>(SetComposition()));

    // a composition's own topology has that composition as unique extension
    for (const auto& c : all_set_compositions({0, 1, 2}))
        CHECK(L(composition_topology(c)) == LinComb<SetComposition>(c));
}

TEST_CASE("set composition counts are the Fubini numbers") {
    CHECK(all_set_compositions({}).size() == 1);
    CHECK(all_set_compositions({0}).size() == 1);
    CHECK(all_set_compositions({0, 1}).size() == 3);
    CHECK(all_set_compositions({0, 1, 2}).size() == 13);
}
