// Acceptance suite: one pass/fail line per criterion. Exit code 0 iff all pass.
//
// Everything is exact rational arithmetic; "tolerance" is equality throughout.

#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qtop/checks.hpp"

using namespace qtop;

namespace {

int failures_total = 0;

QPoset dsl(const std::string& s) { return parse_dsl(s); }
Composition comp(std::vector<int> p) { return Composition(std::move(p)); }
PackedWord word(std::vector<int> l) { return PackedWord(std::move(l)); }

struct Tally {
    int checks = 0;
    std::vector<std::string> errors;

    template <typename T>
    void eq(const std::string& what, const T& got, const T& want) {
        ++checks;
        if (!(got == want))
            errors.push_back(what + "\n      got:  " + got.str() + "\n      want: " + want.str());
    }
};

void report(int id, const std::string& label, const Tally& tally, double seconds) {
    bool ok = tally.errors.empty();
    if (!ok) ++failures_total;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << label << " ("
              << tally.checks << " checks, " << std::fixed << std::setprecision(2) << seconds
              << "s)\n";
    for (const auto& e : tally.errors) std::cout << "    " << e << "\n";
}

void run_suites(int id, const std::string& label, const std::vector<std::string>& names,
                const CheckOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    Tally tally;
    for (const auto& name : names) {
        CheckReport rep = run_check(name, opts);
        tally.checks += static_cast<int>(rep.instances);
        for (std::size_t i = 0; i < rep.failures.size(); ++i) {
            if (i == 5) {
                tally.errors.push_back(name + ": ... " + std::to_string(rep.failures.size() - 5) +
                                       " further failures");
                break;
            }
            tally.errors.push_back(name + " at " + rep.failures[i].instance +
                                   "\n      lhs: " + rep.failures[i].lhs +
                                   "\n      rhs: " + rep.failures[i].rhs);
        }
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(id, label, tally, sec);
}

using QQ = std::pair<QPoset, QPoset>;
using SS = std::pair<SetComposition, SetComposition>;

LinComb<QQ> tens(std::vector<std::pair<QPoset, QPoset>> terms) {
    LinComb<QQ> out;
    for (auto& t : terms) out.add_term(t, 1);
    return out;
}

void criterion1() {
    auto start = std::chrono::steady_clock::now();
    Tally t;

    // ---- the eight internal-coproduct expansions -------------------------------------
    {
        QPoset coarse2 = dsl("0~1");
        t.eq("gamma of a coarse pair", gamma(coarse2), tens({{coarse2, coarse2}}));

        QPoset ef = dsl("0~1, 0<2"); // class {0,1} below class {2}
        t.eq("gamma of a chain of two classes", gamma(ef),
             tens({{ef, dsl("0~1, 1~2")}, {dsl("0~1, 2"), ef}}));

        QPoset two_classes = dsl("0~1, 2");
        t.eq("gamma of two free classes", gamma(two_classes), tens({{two_classes, two_classes}}));

        QPoset corolla = dsl("0<1, 0<2");
        t.eq("gamma of the corolla", gamma(corolla),
             tens({{corolla, dsl("0~1, 1~2")},
                   {dsl("0<1, 2"), dsl("0~1, 0<2")},
                   {dsl("0<2, 1"), dsl("0~2, 0<1")},
                   {dsl("0, 1, 2"), corolla}}));

        QPoset chain3 = dsl("0<1, 1<2");
        t.eq("gamma of the three-chain", gamma(chain3),
             tens({{chain3, dsl("0~1, 1~2")},
                   {dsl("0<1, 2"), dsl("0~1, 0<2")},
                   {dsl("1<2, 0"), dsl("0<1, 1~2")},
                   {dsl("0, 1, 2"), chain3}}));

        QPoset anticorolla = dsl("1<0, 2<0");
        t.eq("gamma of the anticorolla", gamma(anticorolla),
             tens({{anticorolla, dsl("0~1, 1~2")},
                   {dsl("1<0, 2"), dsl("2<0, 0~1")},
                   {dsl("2<0, 1"), dsl("1<0, 0~2")},
                   {dsl("0, 1, 2"), anticorolla}}));

        QPoset chain_pt = dsl("0<1, 2");
        t.eq("gamma of a chain with a free point", gamma(chain_pt),
             tens({{chain_pt, dsl("0~1, 2")}, {dsl("0, 1, 2"), chain_pt}}));

        QPoset disc3 = dsl("0, 1, 2");
        t.eq("gamma of three free points", gamma(disc3), tens({{disc3, disc3}}));
    }

    // ---- the eight linear-extension expansions ---------------------------------------
    {
        auto lc = [](std::vector<SetComposition> cs) {
            LinComb<SetComposition> out;
            for (auto& c : cs) out.add_term(c, 1);
            return out;
        };
        t.eq("L of one class", L(dsl("0~1, 1~2")), lc({SetComposition({{0, 1, 2}})}));
        t.eq("L of a chain of two classes", L(dsl("0~1, 0<2")),
             lc({SetComposition({{0, 1}, {2}})}));
        t.eq("L of two free classes", L(dsl("0~1, 2")),
             lc({SetComposition({{0, 1}, {2}}), SetComposition({{2}, {0, 1}}),
                 SetComposition({{0, 1, 2}})}));
        t.eq("L of the corolla", L(dsl("0<1, 0<2")),
             lc({SetComposition({{0}, {1}, {2}}), SetComposition({{0}, {2}, {1}}),
                 SetComposition({{0}, {1, 2}})}));
        t.eq("L of the three-chain", L(dsl("0<1, 1<2")), lc({SetComposition({{0}, {1}, {2}})}));
        t.eq("L of the anticorolla", L(dsl("1<0, 2<0")),
             lc({SetComposition({{1}, {2}, {0}}), SetComposition({{2}, {1}, {0}}),
                 SetComposition({{1, 2}, {0}})}));
        t.eq("L of a chain with a free point", L(dsl("0<1, 2")),
             lc({SetComposition({{0}, {1}, {2}}), SetComposition({{0}, {2}, {1}}),
                 SetComposition({{2}, {0}, {1}}), SetComposition({{0, 2}, {1}}),
                 SetComposition({{0}, {1, 2}})}));
        t.eq("L of three free points", L(dsl("0, 1, 2")),
             lc({SetComposition({{0}, {1}, {2}}), SetComposition({{0}, {2}, {1}}),
                 SetComposition({{1}, {0}, {2}}), SetComposition({{1}, {2}, {0}}),
                 SetComposition({{2}, {0}, {1}}), SetComposition({{2}, {1}, {0}}),
                 SetComposition({{0, 1}, {2}}), SetComposition({{0, 2}, {1}}),
                 SetComposition({{1, 2}, {0}}), SetComposition({{0}, {1, 2}}),
                 SetComposition({{1}, {0, 2}}), SetComposition({{2}, {0, 1}}),
                 SetComposition({{0, 1, 2}})}));
    }

    // ---- the eight QSym images, class sizes (a, b, c) = (1, 2, 3) ---------------------
    {
        auto lc = [](std::vector<std::pair<Composition, int>> cs) {
            LinComb<Composition> out;
            for (auto& [c, k] : cs) out.add_term(c, k);
            return out;
        };
        // class shapes: a = {0}, b = {1,2}, c = {3,4,5}
        const std::string b_cls = "1~2", c_cls = "3~4, 4~5";
        t.eq("lambda of one class", lambda_map(iso_of(dsl("0~1"))), lc({{comp({2}), 1}}));
        t.eq("lambda of a chain of two classes",
             lambda_map(iso_of(dsl("0<1, " + b_cls))), lc({{comp({1, 2}), 1}}));
        t.eq("lambda of two free classes", lambda_map(iso_of(dsl("0, " + b_cls))),
             lc({{comp({1, 2}), 1}, {comp({2, 1}), 1}, {comp({3}), 1}}));
        t.eq("lambda of the corolla",
             lambda_map(iso_of(dsl("0<1, 0<3, " + b_cls + ", " + c_cls))),
             lc({{comp({1, 2, 3}), 1}, {comp({1, 3, 2}), 1}, {comp({1, 5}), 1}}));
        t.eq("lambda of the three-chain",
             lambda_map(iso_of(dsl("0<1, 1<3, " + b_cls + ", " + c_cls))),
             lc({{comp({1, 2, 3}), 1}}));
        t.eq("lambda of the anticorolla",
             lambda_map(iso_of(dsl("1<0, 3<0, " + b_cls + ", " + c_cls))),
             lc({{comp({2, 3, 1}), 1}, {comp({3, 2, 1}), 1}, {comp({5, 1}), 1}}));
        t.eq("lambda of a chain with a free class",
             lambda_map(iso_of(dsl("0<1, " + b_cls + ", " + c_cls))),
             lc({{comp({1, 2, 3}), 1},
                 {comp({1, 3, 2}), 1},
                 {comp({3, 1, 2}), 1},
                 {comp({4, 2}), 1},
                 {comp({1, 5}), 1}}));
        t.eq("lambda of three free classes",
             lambda_map(iso_of(dsl("0, " + b_cls + ", " + c_cls))),
             lc({{comp({1, 2, 3}), 1},
                 {comp({1, 3, 2}), 1},
                 {comp({2, 1, 3}), 1},
                 {comp({2, 3, 1}), 1},
                 {comp({3, 1, 2}), 1},
                 {comp({3, 2, 1}), 1},
                 {comp({3, 3}), 2}, // the two merges of sizes 1+2 and 3 collide
                 {comp({4, 2}), 1},
                 {comp({5, 1}), 1},
                 {comp({1, 5}), 1},
                 {comp({2, 4}), 1},
                 {comp({6}), 1}}));
    }

    // ---- the fifteen WQSym images -----------------------------------------------------
    {
        auto lc = [](std::vector<PackedWord> ws) {
            LinComb<PackedWord> out;
            for (auto& w : ws) out.add_term(w, 1);
            return out;
        };
        auto lam = [](const std::string& s) { return Lambda_map(LabeledTop{parse_dsl(s)}); };
        t.eq("Lambda of the point", lam("1"), lc({word({1})}));
        t.eq("Lambda of 1<2", lam("1<2"), lc({word({1, 2})}));
        t.eq("Lambda of 2<1", lam("2<1"), lc({word({2, 1})}));
        t.eq("Lambda of two points", lam("1, 2"),
             lc({word({1, 2}), word({2, 1}), word({1, 1})}));
        t.eq("Lambda of the corolla below 1", lam("1<2, 1<3"),
             lc({word({1, 2, 3}), word({1, 3, 2}), word({1, 2, 2})}));
        t.eq("Lambda of the corolla below 2", lam("2<1, 2<3"),
             lc({word({2, 1, 3}), word({3, 1, 2}), word({2, 1, 2})}));
        t.eq("Lambda of the corolla below 3", lam("3<1, 3<2"),
             lc({word({2, 3, 1}), word({3, 2, 1}), word({2, 2, 1})}));
        t.eq("Lambda of the chain 1<2<3", lam("1<2, 2<3"), lc({word({1, 2, 3})}));
        t.eq("Lambda of the chain 2<3<1", lam("2<3, 3<1"), lc({word({3, 1, 2})}));
        t.eq("Lambda of the chain 3<1<2", lam("3<1, 1<2"), lc({word({2, 3, 1})}));
        t.eq("Lambda of the anticorolla above 1", lam("2<1, 3<1"),
             lc({word({3, 1, 2}), word({3, 2, 1}), word({2, 1, 1})}));
        t.eq("Lambda of the anticorolla above 2", lam("1<2, 3<2"),
             lc({word({1, 3, 2}), word({2, 3, 1}), word({1, 2, 1})}));
        t.eq("Lambda of the anticorolla above 3", lam("1<3, 2<3"),
             lc({word({1, 2, 3}), word({2, 1, 3}), word({1, 1, 2})}));
        t.eq("Lambda of 1<2 with a free point", lam("1<2, 3"),
             lc({word({1, 2, 3}), word({1, 3, 2}), word({2, 3, 1}), word({1, 2, 1}),
                 word({1, 2, 2})}));
        t.eq("Lambda of three points", lam("1, 2, 3"),
             lc({word({1, 2, 3}), word({1, 3, 2}), word({2, 1, 3}), word({2, 3, 1}),
                 word({3, 1, 2}), word({3, 2, 1}), word({1, 1, 2}), word({1, 2, 1}),
                 word({2, 1, 1}), word({1, 2, 2}), word({2, 1, 2}), word({2, 2, 1}),
                 word({1, 1, 1})}));
    }

    // ---- set-composition products and internal coproducts -----------------------------
    {
        auto lc = [](std::vector<SetComposition> cs) {
            LinComb<SetComposition> out;
            for (auto& c : cs) out.add_term(c, 1);
            return out;
        };
        SetComposition A({{1}}), B({{2}}), C({{3}});
        SetComposition AB({{1}, {2}}), BC({{2}, {3}});
        t.eq("(A)(B)", sc_product(A, B),
             lc({SetComposition({{1}, {2}}), SetComposition({{2}, {1}}),
                 SetComposition({{1, 2}})}));
        t.eq("(A,B)(C)", sc_product(AB, C),
             lc({SetComposition({{1}, {2}, {3}}), SetComposition({{1}, {3}, {2}}),
                 SetComposition({{3}, {1}, {2}}), SetComposition({{1}, {2, 3}}),
                 SetComposition({{1, 3}, {2}})}));
        t.eq("(A)(B,C)", sc_product(A, BC),
             lc({SetComposition({{1}, {2}, {3}}), SetComposition({{2}, {1}, {3}}),
                 SetComposition({{2}, {3}, {1}}), SetComposition({{1, 2}, {3}}),
                 SetComposition({{2}, {1, 3}})}));

        auto pair_lc = [](std::vector<SS> ps) {
            LinComb<SS> out;
            for (auto& p : ps) out.add_term(p, 1);
            return out;
        };
        t.eq("rho((A))", sc_rho(A), pair_lc({{A, A}}));
        t.eq("rho((A,B))", sc_rho(AB),
             pair_lc({{AB, SetComposition({{1, 2}})},
                      {AB, AB},
                      {SetComposition({{2}, {1}}), AB},
                      {SetComposition({{1, 2}}), AB}}));
        SetComposition ABC({{1}, {2}, {3}});
        LinComb<SS> rho_abc;
        // (A,B,C) (x) (A u B u C)
        rho_abc.add_term({ABC, SetComposition({{1, 2, 3}})}, 1);
        // [(A,B)(C) expansion] (x) (A u B, C)
        for (const auto& left :
             {SetComposition({{1}, {2}, {3}}), SetComposition({{1}, {3}, {2}}),
              SetComposition({{3}, {1}, {2}}), SetComposition({{1, 3}, {2}}),
              SetComposition({{1}, {2, 3}})})
            rho_abc.add_term({left, SetComposition({{1, 2}, {3}})}, 1);
        // [(A)(B,C) expansion] (x) (A, B u C)
        for (const auto& left :
             {SetComposition({{1}, {2}, {3}}), SetComposition({{2}, {1}, {3}}),
              SetComposition({{2}, {3}, {1}}), SetComposition({{1, 2}, {3}}),
              SetComposition({{2}, {1, 3}})})
            rho_abc.add_term({left, SetComposition({{1}, {2, 3}})}, 1);
        // [all thirteen set compositions] (x) (A, B, C)
        for (const auto& left : all_set_compositions({1, 2, 3})) rho_abc.add_term({left, ABC}, 1);
        t.eq("rho((A,B,C))", sc_rho(ABC), rho_abc);
    }

    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(1, "golden coproduct, extension, QSym/WQSym and set-composition expansions", t, sec);
}

} // namespace

int main(int argc, char** argv) {
    CheckOptions opts;
    opts.n = 4;
    opts.seed = 1;
    opts.mould_len = 4;
    opts.mould_norm = 8;
    if (argc > 1) opts.n = std::atoi(argv[1]);

    criterion1();
    run_suites(2, "set-composition and topology counts from two enumerators",
               {"fubini-counts", "topology-counts"}, opts);
    run_suites(3, "exhaustive theorem suite on labeled topologies",
               {"gamma-coassoc", "gamma-counit", "gamma-product", "delta-coassoc", "delta-mult",
                "internal-external", "quotient-duality", "restrict-quotient", "lemma-shrink",
                "lemma-classes", "lemma-components", "transit-bijection",
                "admissible-transitivity", "admissible-structure", "gamma-grading",
                "gamma-duality", "admissible-duality"},
               opts);
    run_suites(4, "linear-extension morphism identities and surjectivity",
               {"theoextension-product", "theoextension-delta", "theoextension-rho",
                "L-surjectivity", "L-restriction"},
               opts);
    run_suites(5, "QSym and WQSym morphisms with internal coproducts",
               {"lambda-morphism", "lambda-coproducts", "wlambda-morphism",
                "wlambda-coproducts", "qsym-wqsym-axioms", "sc-bialgebra"},
               opts);
    run_suites(6, "labeled five-term compatibility counterexample",
               {"ht-compat-counterexample"}, opts);
    run_suites(7, "antipode convolution identity", {"antipode"}, opts);
    run_suites(8, "mould laws and the ten stability rules", {"mould-laws", "mould-stability"},
               opts);
    run_suites(9, "character convolution, composition, identities and quasi-posetization",
               {"char-property", "char-identities", "qp-morphism"}, opts);

    if (failures_total == 0) {
        std::cout << "all 9 acceptance criteria pass\n";
        return 0;
    }
    std::cout << failures_total << " acceptance criteria FAILED\n";
    return 1;
}
