#include <catch2/catch_amalgamated.hpp>

#include "qtop/enumerate.hpp"
#include "qtop/wordalg.hpp"

using namespace qtop;

namespace {
QPoset dsl(const std::string& s) { return parse_dsl(s); }
Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }
PackedWord word(std::vector<int> letters) { return PackedWord(std::move(letters)); }
using CC = std::pair<Composition, Composition>;
using PP = std::pair<PackedWord, PackedWord>;
} // namespace

TEST_CASE("quasi-shuffle surjections") {
    CHECK(qsh_surjections({1, 1}).size() == 3);
    CHECK(qsh_surjections({1, 2}).size() == 5);
    CHECK(qsh_surjections({3, 0}) == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(qsh_surjections({}).size() == 1);
    CHECK(qsh_surjections({1, 1, 1}).size() == 13);
    CHECK_THROWS_AS(qsh_surjections({-1}), InputError);
}

TEST_CASE("quasi-shuffle product in the monomial basis") {
    LinComb<Composition> expected;
    expected.add_term(comp({1, 2}), 1);
    expected.add_term(comp({2, 1}), 1);
    expected.add_term(comp({3}), 1);
    CHECK(qsym_product(comp({1}), comp({2})) == expected);

    // equal parts collide with multiplicity
    LinComb<Composition> squares;
    squares.add_term(comp({1, 1}), 2);
    squares.add_term(comp({2}), 1);
    CHECK(qsym_product(comp({1}), comp({1})) == squares);

    CHECK(qsym_product(Composition(), comp({4})) == LinComb<Composition>(comp({4})));
    CHECK(qsym_product(comp({2, 5}), comp({1})) == qsym_product(comp({1}), comp({2, 5})));
}

TEST_CASE("deconcatenation in the monomial basis") {
    CHECK(qsym_delta(Composition()) ==
          LinComb<CC>(CC{Composition(), Composition()}));
    CHECK(qsym_delta(comp({3})).term_count() == 2);
    CHECK(qsym_delta(comp({1, 2})).coeff({comp({1}), comp({2})}) == Rational(1));
}

TEST_CASE("internal coproduct in the monomial basis") {
    CHECK(qsym_rho(comp({3})) == LinComb<CC>(CC{comp({3}), comp({3})}));

    LinComb<CC> expected;
    expected.add_term({comp({1, 2}), comp({3})}, 1);
    expected.add_term({comp({1, 2}), comp({1, 2})}, 1);
    expected.add_term({comp({2, 1}), comp({1, 2})}, 1);
    expected.add_term({comp({3}), comp({1, 2})}, 1);
    CHECK(qsym_rho(comp({1, 2})) == expected);

    // agrees with the type projection of the set-composition coproduct
    for (const auto& c : all_set_compositions({1, 2, 3})) {
        LinComb<CC> projected;
        for (const auto& [lr, k] : sc_rho(c).terms())
            projected.add_term({type_of(lr.first), type_of(lr.second)}, k);
        CHECK(projected == qsym_rho(type_of(c)));
    }
    CHECK(qsym_rho_counit(comp({5})) == Rational(1));
    CHECK(qsym_rho_counit(comp({1, 4})) == Rational(0));
}

TEST_CASE("packing") {
    CHECK(pack({5, 3, 5}) == word({2, 1, 2}));
    CHECK(pack({1, 2, 1}) == word({1, 2, 1}));
    CHECK(pack({}) == PackedWord());
    // relative comparisons survive packing
    std::vector<int> w{9, 2, 7, 2};
    auto p = pack(w).letters();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) {
            CHECK((w[i] < w[j]) == (p[i] < p[j]));
            CHECK((w[i] == w[j]) == (p[i] == p[j]));
        }
    CHECK_THROWS_AS(word({1, 3}), InputError); // 2 missing
}

TEST_CASE("word product") {
    LinComb<PackedWord> expected;
    expected.add_term(word({1, 2}), 1);
    expected.add_term(word({2, 1}), 1);
    expected.add_term(word({1, 1}), 1);
    CHECK(wqsym_product(word({1}), word({1})) == expected);

    CHECK(wqsym_product(PackedWord(), word({1, 1})) == LinComb<PackedWord>(word({1, 1})));

    // number of terms equals the number of quasi-shuffle surjections
    for (const auto& u : all_packed_words(2))
        for (const auto& v : all_packed_words(2))
            CHECK(wqsym_product(u, v).term_count() ==
                  qsh_surjections({u.max_letter(), v.max_letter()}).size());
}

TEST_CASE("word coproducts") {
    CHECK(wqsym_delta(word({1})).term_count() == 2);
    CHECK(wqsym_delta(word({1, 2})).coeff({word({1}), word({1})}) == Rational(1));

    CHECK(wqsym_rho(word({1, 1})) == LinComb<PP>(PP{word({1, 1}), word({1, 1})}));
    LinComb<PP> expected;
    expected.add_term({word({1, 2}), word({1, 1})}, 1);
    expected.add_term({word({1, 2}), word({1, 2})}, 1);
    expected.add_term({word({2, 1}), word({1, 2})}, 1);
    expected.add_term({word({1, 1}), word({1, 2})}, 1);
    CHECK(wqsym_rho(word({1, 2})) == expected);
    CHECK(wqsym_rho_counit(word({1, 1, 1})) == Rational(1));
    CHECK(wqsym_rho_counit(word({2, 1})) == Rational(0));
}

TEST_CASE("set compositions as packed words") {
    CHECK(sc_to_packed(SetComposition({{1, 2}, {3}})) == word({1, 1, 2}));
    CHECK(type_of(SetComposition({{1, 2}, {3}})) == comp({2, 1}));
    CHECK_THROWS_AS(sc_to_packed(SetComposition({{0}, {2}})), InputError);
    for (int n = 0; n <= 4; ++n)
        for (const auto& c : all_set_compositions(standard_atoms(n)))
            CHECK(packed_to_sc(sc_to_packed(c)) == c);
    CHECK(all_packed_words(3).size() == 13);
}

TEST_CASE("images of small topologies in QSym") {
    CHECK(lambda_map(iso_of(dsl("0~1"))) == LinComb<Composition>(comp({2})));
    CHECK(lambda_map(iso_of(dsl("0<1, 1~2"))) == LinComb<Composition>(comp({1, 2})));

    LinComb<Composition> pair_classes;
    pair_classes.add_term(comp({1, 2}), 1);
    pair_classes.add_term(comp({2, 1}), 1);
    pair_classes.add_term(comp({3}), 1);
    CHECK(lambda_map(iso_of(dsl("0, 1~2"))) == pair_classes);
}

TEST_CASE("images of small topologies in WQSym") {
    CHECK(Lambda_map(LabeledTop{dsl("1<2")}) == LinComb<PackedWord>(word({1, 2})));
    CHECK(Lambda_map(LabeledTop{dsl("2<1")}) == LinComb<PackedWord>(word({2, 1})));
    LinComb<PackedWord> disc;
    disc.add_term(word({1, 2}), 1);
    disc.add_term(word({2, 1}), 1);
    disc.add_term(word({1, 1}), 1);
    CHECK(Lambda_map(LabeledTop{dsl("1, 2")}) == disc);
    CHECK(Lambda_map(LabeledTop{dsl("1, 2, 3")}).term_count() == 13);
}

TEST_CASE("rendering of words and compositions") {
    CHECK(comp({1, 2}).str() == "(1,2)");
    CHECK(Composition().str() == "()");
    CHECK(word({1, 1, 2}).str() == "(112)");
    CHECK(PackedWord(std::vector<int>{10, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}).str() ==
          "(10,1,2,3,4,5,6,7,8,9,10)");
    CHECK(PackedWord().str() == "()");
}
