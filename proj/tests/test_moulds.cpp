#include <catch2/catch_amalgamated.hpp>

#include "qtop/checks.hpp"
#include "qtop/moulds.hpp"

using namespace qtop;

namespace {
Seq seq(std::vector<int> e) { return Seq(std::move(e)); }
} // namespace

TEST_CASE("sequences") {
    CHECK(seq({1, 2, 3}).norm() == 6);
    CHECK(Seq().norm() == 0);
    CHECK(seq({2, 1}).prefix(1) == seq({2}));
    CHECK(seq({2, 1}).suffix(1) == seq({1}));
    CHECK_THROWS_AS(seq({0}), InputError);
    CHECK(seq({1, 2}).str() == "(1,2)");
}

TEST_CASE("product unit and splitting") {
    Mould m = checks::seeded_mould(42, Rational(1, 2));
    Mould one = mould_one();
    for (const auto& w : detail::seqs_up_to(3, 6)) {
        CHECK(mould_product(m, one)(w) == m(w));
        CHECK(mould_product(one, m)(w) == m(w));
    }
    Mould n = checks::seeded_mould(7, Rational(2));
    CHECK(mould_product(m, n)(Seq()) == m(Seq()) * n(Seq()));
    // length-one values add
    CHECK(mould_product(m, n)(seq({3})) == m(Seq()) * n(seq({3})) + m(seq({3})) * n(Seq()));
}

TEST_CASE("composition identities") {
    Mould m = checks::seeded_mould(3, Rational(5));
    Mould ident = mould_identity();
    for (const auto& w : detail::seqs_up_to(4, 7)) {
        CHECK(mould_compose(m, ident)(w) == m(w));
        if (!w.empty()) CHECK(mould_compose(ident, m)(w) == m(w));
    }
    CHECK(mould_compose(ident, m)(Seq()) == Rational(0));
    // hand expansion at length 2: blocks (a)(b) and (a+b)
    Mould n = checks::seeded_mould(11, Rational(-1));
    Rational got = mould_compose(m, n)(seq({1, 2}));
    Rational want = m(seq({1, 2})) * n(seq({1})) * n(seq({2})) + m(seq({3})) * n(seq({1, 2}));
    CHECK(got == want);
}

TEST_CASE("shuffles and quasi-shuffles") {
    CHECK(shuffles(seq({1}), seq({2})).size() == 2);
    CHECK(quasi_shuffles(seq({1}), seq({2})).size() == 3);
    CHECK(shuffles(seq({1, 2}), seq({3})).size() == 3);
    // multiplicities are kept
    auto sh = shuffles(seq({1}), seq({1}));
    CHECK(sh.size() == 2);
    CHECK(sh[0] == sh[1]);
    // contraction shows up in the quasi-shuffle
    auto qsh = quasi_shuffles(seq({1}), seq({2}));
    CHECK(std::count(qsh.begin(), qsh.end(), seq({3})) == 1);
}

TEST_CASE("symmetry predicates on constructed families") {
    SymCaps caps{3, 7};
    // (1/r!) prod f(w_i) is symmetral
    Mould factorial_family([](const Seq& w) {
        Rational prod(1);
        for (int e : w.entries()) prod *= Rational(1, e);
        return prod / factorial(static_cast<int>(w.length()));
    });
    CHECK(is_symmetral(factorial_family, caps));
    CHECK(!is_alternal(factorial_family, caps));

    // any length-one supported mould is alternal
    Mould l1 = length_one_mould([](int k) { return Rational(k * k); });
    CHECK(is_alternal(l1, caps));
    CHECK(!is_symmetral(l1, caps));

    // the monomial character of a finite alphabet is symmetrel
    Mould e2 = monomial_character({Rational(1, 2), Rational(3)});
    CHECK(is_symmetrel(e2, caps));
    CHECK(!is_symmetral(e2, caps));
}

TEST_CASE("exponential and logarithm") {
    CHECK_THROWS_AS(exp_mould(mould_one()), DomainError);
    CHECK_THROWS_AS(log_mould(mould_zero()), DomainError);
    Mould zero = mould_zero();
    CHECK(exp_mould(zero)(Seq()) == Rational(1));
    CHECK(exp_mould(zero)(seq({2})) == Rational(0));

    Mould a = length_one_mould([](int k) { return Rational(1, k); });
    Mould s = exp_mould(a);
    // exp of a length-one mould is the (1/r!) product family
    CHECK(s(seq({2})) == Rational(1, 2));
    CHECK(s(seq({2, 3})) == Rational(1, 2) * Rational(1, 3) / Rational(2));
    CHECK(s(seq({1, 1, 2})) == Rational(1, 2) / Rational(6));
    for (const auto& w : detail::seqs_up_to(4, 6)) CHECK(log_mould(s)(w) == a(w));
}

TEST_CASE("monomial character values") {
    CHECK(monomial_character({})(Seq()) == Rational(1));
    CHECK(monomial_character({})(seq({1})) == Rational(0));
    Mould m1 = monomial_character({Rational(1, 2)});
    CHECK(m1(seq({3})) == Rational(1, 8));
    CHECK(m1(seq({1, 1})) == Rational(0)); // no increasing pair in one letter
    Mould m2 = monomial_character({Rational(2), Rational(3)});
    CHECK(m2(seq({1})) == Rational(5));
    CHECK(m2(seq({1, 1})) == Rational(6));
    CHECK(m2(seq({2, 1})) == Rational(12)); // 4*3
    CHECK_THROWS_AS(monomial_character({Rational(2), Rational(1)}), InputError);
    CHECK_THROWS_AS(monomial_character({Rational(1), Rational(1)}), InputError);
}

TEST_CASE("the mixed product rule fails as literally stated") {
    // symmetrel times symmetral is not symmetral: with the unit mould as the
    // symmetral factor the product is the symmetrel factor itself, and the
    // quasi-shuffle contraction term survives the plain-shuffle test
    SymCaps caps{3, 7};
    Mould e1 = monomial_character({Rational(1, 2)});
    Mould one = mould_one();
    CHECK(is_symmetrel(e1, caps));
    CHECK(is_symmetral(one, caps));
    Mould prod = mould_product(e1, one);
    for (const auto& w : detail::seqs_up_to(3, 7)) CHECK(prod(w) == e1(w));
    CHECK(!is_symmetral(prod, caps));
}

TEST_CASE("characters store generator values and extend multiplicatively") {
    const int cap = 3;
    Character m = random_character(AlgebraKind::H, cap, 5);
    // value on a disjoint union is the product of the component values
    QPoset chain = parse_dsl("0<1"), pt = parse_dsl("2");
    CHECK(m.eval(product(chain, pt)) == m.eval(chain) * m.eval(pt));
    CHECK(m.eval(QPoset()) == Rational(1));
    CHECK_THROWS_AS(m.eval(QPoset::coarse({0, 1, 2, 3})), ResourceError);

    Character u = unit_character(AlgebraKind::H, cap);
    CHECK(u.eval(QPoset()) == Rational(1));
    CHECK(u.eval(pt) == Rational(0));

    Character ht = random_character(AlgebraKind::HT, cap, 5);
    CHECK_THROWS_AS(char_product(m, ht), InputError);
    CHECK_THROWS_AS(ht(iso_of(chain)), InputError);
}

TEST_CASE("convolution and composition of characters") {
    const int cap = 3;
    Character m = random_character(AlgebraKind::H, cap, 1);
    Character n = random_character(AlgebraKind::H, cap, 2);
    Character e = unit_character(AlgebraKind::H, cap);
    QPoset pt = parse_dsl("0");
    // (M.N)(point) = M(point) + N(point)
    CHECK(char_product(m, n).eval(pt) == m.eval(pt) + n.eval(pt));
    CHECK(char_product(m, e).eval(pt) == m.eval(pt));
    // associativity of the convolution on all topologies with 3 atoms
    Character p = random_character(AlgebraKind::H, cap, 3);
    Character left = char_product(char_product(m, n), p);
    Character right = char_product(m, char_product(n, p));
    for (const auto& t : labeled_topologies(3)) CHECK(left.eval(t) == right.eval(t));

    Character j = j_character(AlgebraKind::H, cap);
    for (const auto& t : labeled_topologies(3)) {
        CHECK(char_compose(m, j).eval(t) == m.eval(t));
        CHECK(char_compose(j, n).eval(t) == n.eval(t));
    }
}

TEST_CASE("distributivity fails for labeled characters") {
    // composition distributes over convolution on classes, but the labeled
    // algebra loses it together with the standardized compatibility diagram
    const int cap = 3;
    Character m1 = random_character(AlgebraKind::HT, cap, 4);
    Character m2 = random_character(AlgebraKind::HT, cap, 6);
    Character n = random_character(AlgebraKind::HT, cap, 8);
    Character lhs = char_compose(char_product(m1, m2), n);
    Character rhs = char_product(char_compose(m1, n), char_compose(m2, n));
    bool differs = false;
    for (const auto& t : labeled_topologies(3))
        if (lhs(LabeledTop{t}) != rhs(LabeledTop{t})) differs = true;
    CHECK(differs);
}

TEST_CASE("pullback along the linear-extension morphism") {
    const int cap = 3;
    // the counit of QSym pulls back to the indicator of group-likes... on the
    // nose: phi(M_c) = [c empty] gives the character vanishing on every
    // positive-size class
    QSymFunctional eps([](const Composition& c) { return Rational(c.length() == 0 ? 1 : 0); });
    Character q_eps = quasi_posetization(eps, cap);
    CHECK(q_eps.eval(QPoset()) == Rational(1));
    CHECK(q_eps.eval(parse_dsl("0")) == Rational(0));

    // one-letter monomial alphabet: value t^a on a single class of size a
    Rational t(1, 2);
    QSymFunctional phi = functional_of_mould(monomial_character({t}));
    Character q_phi = quasi_posetization(phi, cap);
    CHECK(q_phi.eval(parse_dsl("0~1")) == t * t);
    CHECK(q_phi.eval(parse_dsl("0~1, 1~2")) == t * t * t);

    // a non-multiplicative functional is rejected
    QSymFunctional bad([](const Composition& c) { return Rational(static_cast<long>(c.length())); });
    CHECK_THROWS_AS(quasi_posetization(bad, cap), ValidationError);
}
