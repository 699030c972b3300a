#include <catch2/catch_amalgamated.hpp>

#include "qtop/enumerate.hpp"
#include "qtop/topalg.hpp"

using namespace qtop;

namespace {
QPoset dsl(const std::string& s) { return parse_dsl(s); }
using QQ = std::pair<QPoset, QPoset>;
} // namespace

TEST_CASE("internal coproduct on small shapes") {
    QPoset coarse = dsl("0~1");
    LinComb<QQ> expected(QQ{coarse, coarse});
    CHECK(gamma(coarse) == expected);

    // two-element chain of classes: exactly the two displayed terms
    QPoset chain = dsl("0<1");
    LinComb<QQ> two;
    two.add_term({chain, QPoset::coarse({0, 1})}, 1);
    two.add_term({QPoset::discrete({0, 1}), chain}, 1);
    CHECK(gamma(chain) == two);

    // three-element chain: four terms, among them (0)(1<2) (x) (0 < 1~2)
    QPoset chain3 = dsl("0<1, 1<2");
    auto g = gamma(chain3);
    CHECK(g.term_count() == 4);
    CHECK(g.coeff({dsl("0, 1<2"), dsl("0<1, 1~2")}) == Rational(1));
    CHECK(g.coeff({chain3, QPoset::coarse({0, 1, 2})}) == Rational(1));

    // group-like inputs are themselves group-like elements
    QPoset disc = QPoset::discrete({0, 1});
    CHECK(gamma(disc) == LinComb<QQ>(QQ{disc, disc}));
    CHECK(gamma(QPoset()) == LinComb<QQ>(QQ{QPoset(), QPoset()}));
}

TEST_CASE("external coproduct") {
    QPoset pt = dsl("0");
    LinComb<QQ> d_pt;
    d_pt.add_term({QPoset(), pt}, 1);
    d_pt.add_term({pt, QPoset()}, 1);
    CHECK(delta(pt) == d_pt);

    QPoset chain = dsl("0<1");
    LinComb<QQ> d_chain;
    d_chain.add_term({chain, QPoset()}, 1);
    d_chain.add_term({dsl("0"), dsl("1")}, 1);
    d_chain.add_term({QPoset(), chain}, 1);
    CHECK(delta(chain) == d_chain);

    QPoset coarse = dsl("0~1");
    LinComb<QQ> d_coarse;
    d_coarse.add_term({coarse, QPoset()}, 1);
    d_coarse.add_term({QPoset(), coarse}, 1);
    CHECK(delta(coarse) == d_coarse);
}

TEST_CASE("counit of the internal coproduct") {
    CHECK(counit_gamma(dsl("0~1")) == Rational(1));
    CHECK(counit_gamma(dsl("0<1")) == Rational(0));
    CHECK(counit_gamma(QPoset::discrete({0, 1, 2})) == Rational(1));
}

TEST_CASE("forgetting labels") {
    LinComb<QPoset> x;
    x.add_term(dsl("0<1"), Rational(1));
    x.add_term(dsl("1<0"), Rational(1));
    LinComb<IsoClass> merged = to_iso(x);
    REQUIRE(merged.term_count() == 1);
    CHECK(merged.terms().begin()->second == Rational(2));

    CHECK(to_iso(LinComb<QPoset>(dsl("0<1, 2"))).term_count() == 1);

    // multiplicative with respect to the species product
    for (const auto& t1 : labeled_topologies(2)) {
        std::map<int, int> shift{{1, 3}, {2, 4}};
        for (const auto& t2raw : labeled_topologies(2)) {
            QPoset t2 = t2raw.relabel(shift);
            CHECK(iso_of(product(t1, t2)) == h_product(iso_of(t1), iso_of(t2)));
        }
    }
}

TEST_CASE("antipode") {
    IsoClass unit;
    CHECK(antipode_h(unit) == LinComb<IsoClass>(unit));

    IsoClass pt = iso_of(dsl("0"));
    CHECK(antipode_h(pt) == LinComb<IsoClass>(pt, Rational(-1)));

    IsoClass chain = iso_of(dsl("0<1"));
    IsoClass two_points = iso_of(QPoset::discrete({0, 1}));
    LinComb<IsoClass> expected(chain, Rational(-1));
    expected.add_term(two_points, Rational(1));
    CHECK(antipode_h(chain) == expected);

    // convolution identity m (S (x) id) delta = unit counit, classes up to 3 points
    for (int n = 0; n <= 3; ++n)
        for (const auto& c : all_iso_classes(n)) {
            LinComb<IsoClass> conv;
            for (const auto& [lr, k] : h_delta(c).terms())
                conv += h_product(antipode_h(lr.first), LinComb<IsoClass>(lr.second)) * k;
            if (n == 0)
                CHECK(conv == LinComb<IsoClass>(IsoClass()));
            else
                CHECK(conv.is_zero());
        }
}

TEST_CASE("labeled topologies validate their atoms") {
    CHECK_THROWS_AS(LabeledTop(dsl("0<1")), InputError);
    CHECK_NOTHROW(LabeledTop(dsl("1<2")));
    CHECK(LabeledTop().n() == 0);
    CHECK(std_of(dsl("3<7")).top() == dsl("1<2"));
}

TEST_CASE("shifted product") {
    LabeledTop a{dsl("1")}, unit;
    CHECK(ht_product(unit, a) == a);
    CHECK(ht_product(a, unit) == a);
    CHECK(ht_product(a, a) == LabeledTop{QPoset::discrete({1, 2})});

    LabeledTop chain{dsl("1<2")}, anti{dsl("2<1")};
    LabeledTop ab = ht_product(chain, anti);
    CHECK(ab.top() == dsl("1<2, 4<3"));
    // not commutative on labels, but homeomorphic either way
    CHECK(ht_product(anti, chain) != ab);
    CHECK(iso_of(ht_product(anti, chain).top()) == iso_of(ab.top()));
}

TEST_CASE("joint product is the ordinal sum") {
    LabeledTop a{dsl("1")}, unit;
    CHECK(ht_join(a, unit) == a);
    CHECK(ht_join(unit, a) == a);
    CHECK(ht_join(a, a) == LabeledTop{dsl("1<2")});

    // open sets: opens of the top part, plus opens of the bottom with the
    // whole top attached
    LabeledTop j = ht_join(LabeledTop{dsl("1, 2")}, LabeledTop{dsl("1")});
    std::set<AtomSet> opens;
    for (const auto& y : j.top().open_sets()) opens.insert(y);
    std::set<AtomSet> expected{{}, {3}, {1, 3}, {2, 3}, {1, 2, 3}};
    CHECK(opens == expected);
}

TEST_CASE("standardized coproduct") {
    LabeledTop pt{dsl("1")}, unit;
    using LL = std::pair<LabeledTop, LabeledTop>;
    LinComb<LL> expected;
    expected.add_term({unit, pt}, 1);
    expected.add_term({pt, unit}, 1);
    CHECK(ht_delta(pt) == expected);
    CHECK(ht_counit(pt) == Rational(0));
    CHECK(ht_counit(unit) == Rational(1));

    // chain 2 < 1: the open set {1} splits into Std({2}) (x) Std({1})
    LabeledTop anti{dsl("2<1")};
    CHECK(ht_delta(anti).coeff({pt, pt}) == Rational(1));
}

TEST_CASE("involution on labeled topologies") {
    LabeledTop chain{dsl("1<2")};
    CHECK(involution_ht(chain) == LabeledTop{dsl("2<1")});
    for (const auto& t : labeled_topologies(3)) {
        LabeledTop a{t};
        CHECK(involution_ht(involution_ht(a)) == a);
    }
}

TEST_CASE("internal coproduct keeps labels") {
    LabeledTop chain{dsl("1<2")};
    auto g = gamma_ht(chain);
    CHECK(g.term_count() == 2);
    CHECK(g.coeff({LabeledTop{QPoset::discrete({1, 2})}, chain}) == Rational(1));
    // grading is additive termwise
    for (const auto& t : labeled_topologies(3))
        for (const auto& [lr, k] : gamma_ht(LabeledTop{t}).terms())
            CHECK(lr.first.top().degree() + lr.second.top().degree() == t.degree());
}
