#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "qtop/enumerate.hpp"
#include "qtop/lincomb.hpp"
#include "qtop/moulds.hpp"
#include "qtop/oracles.hpp"
#include "qtop/qposet.hpp"
#include "qtop/setcomp.hpp"
#include "qtop/topalg.hpp"
#include "qtop/wordalg.hpp"

namespace qtop {

struct CheckOptions {
    int n = 4;                 // size cap for exhaustive sweeps
    std::uint64_t seed = 1;    // seed for randomized characters/moulds
    int mould_len = 4;         // caps for mould symmetry checks
    int mould_norm = 8;
    unsigned jobs = 0;         // 0: hardware concurrency
};

struct CheckFailure {
    std::string instance;
    std::string lhs;
    std::string rhs;
};

/// Outcome of one suite: failures empty iff the verdict is pass.
struct CheckReport {
    std::string suite;
    std::size_t instances = 0;
    std::vector<std::pair<int, std::size_t>> per_size;
    std::vector<CheckFailure> failures;
    double seconds = 0.0;

    bool pass() const { return failures.empty(); }
};

namespace checks {

// -------------------------------------------------------------------------------------
// harness
// -------------------------------------------------------------------------------------

class SuiteRun {
public:
    explicit SuiteRun(std::string name) : start_(std::chrono::steady_clock::now()) {
        rep_.suite = std::move(name);
    }

    void add_instances(std::size_t k) { rep_.instances += k; }
    void size_layer(int n, std::size_t k) {
        rep_.per_size.emplace_back(n, k);
        rep_.instances += k;
    }
    void fail(std::string instance, std::string lhs, std::string rhs) {
        rep_.failures.push_back({std::move(instance), std::move(lhs), std::move(rhs)});
    }
    void merge_failures(std::vector<CheckFailure> fs) {
        for (auto& f : fs) rep_.failures.push_back(std::move(f));
    }
    template <typename T>
    void expect_eq(const std::string& instance, const T& lhs, const T& rhs) {
        if (!(lhs == rhs)) rep_.failures.push_back({instance, lhs.str(), rhs.str()});
    }
    void expect(const std::string& instance, bool ok, const std::string& lhs = "false",
                const std::string& rhs = "true") {
        if (!ok) rep_.failures.push_back({instance, lhs, rhs});
    }

    CheckReport finish() {
        rep_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return std::move(rep_);
    }

private:
    CheckReport rep_;
    std::chrono::steady_clock::time_point start_;
};

/// Runs body(i, out) for i in [0, count) on a worker pool; failures are merged
/// in index order, so the report does not depend on scheduling.
template <typename F>
inline std::vector<CheckFailure> parallel_failures(std::size_t count, unsigned jobs, F&& body) {
    unsigned hw = jobs ? jobs : std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    hw = std::min<unsigned>(hw, 8);
    if (count < 2 * hw) hw = 1;
    std::vector<std::vector<CheckFailure>> buckets(count);
    if (hw == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i, buckets[i]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < hw; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < count; i += hw) body(i, buckets[i]);
            });
        for (auto& th : pool) th.join();
    }
    std::vector<CheckFailure> out;
    for (auto& b : buckets)
        for (auto& f : b) out.push_back(std::move(f));
    return out;
}

/// Sweeps all labeled topologies of sizes 0..cap through body; one instance
/// per topology.
template <typename F>
inline void over_topologies(SuiteRun& run, const CheckOptions& opts, int cap, F&& body) {
    for (int n = 0; n <= cap; ++n) {
        const auto& tops = labeled_topologies(n);
        run.size_layer(n, tops.size());
        run.merge_failures(parallel_failures(
            tops.size(), opts.jobs,
            [&](std::size_t i, std::vector<CheckFailure>& out) { body(tops[i], out); }));
    }
}

template <typename T>
inline void check_eq(std::vector<CheckFailure>& out, const std::string& instance, const T& lhs,
                     const T& rhs) {
    if (!(lhs == rhs)) out.push_back({instance, lhs.str(), rhs.str()});
}

inline void check_true(std::vector<CheckFailure>& out, const std::string& instance, bool ok,
                       const std::string& lhs = "false", const std::string& rhs = "true") {
    if (!ok) out.push_back({instance, lhs, rhs});
}

// common aliases
using QQ = std::pair<QPoset, QPoset>;
using QQQ = std::tuple<QPoset, QPoset, QPoset>;

/// finer_of[i] = indices of the topologies finer than tops[i].
inline std::vector<std::vector<std::size_t>> finer_table(const std::vector<QPoset>& tops) {
    std::vector<std::vector<std::size_t>> out(tops.size());
    for (std::size_t i = 0; i < tops.size(); ++i)
        for (std::size_t j = 0; j < tops.size(); ++j)
            if (is_finer(tops[j], tops[i])) out[i].push_back(j);
    return out;
}

template <typename B, typename F>
auto bilinear(const LinComb<B>& x, const LinComb<B>& y, F&& f) {
    using C = typename std::invoke_result_t<F, const B&, const B&>::basis_type;
    LinComb<C> out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) out += f(a, b) * (ca * cb);
    return out;
}

/// Legwise product of two tensor combinations: (a1 (x) a2)(b1 (x) b2) =
/// a1 b1 (x) a2 b2 with the species product on each leg.
inline LinComb<QQ> legwise_product(const LinComb<QQ>& x, const LinComb<QQ>& y) {
    LinComb<QQ> out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms())
            out.add_term({product(a.first, b.first), product(a.second, b.second)}, ca * cb);
    return out;
}

// -------------------------------------------------------------------------------------
// qposet suites
// -------------------------------------------------------------------------------------

inline CheckReport suite_closure_soundness(const CheckOptions& opts) {
    SuiteRun run("closure-soundness");
    over_topologies(run, opts, opts.n, [&](const QPoset& t, std::vector<CheckFailure>& out) {
        // rebuilding from the strict pairs must reproduce the topology
        std::vector<std::pair<int, int>> pairs;
        for (int a : t.atoms())
            for (int b : t.atoms())
                if (a != b && t.leq(a, b)) pairs.emplace_back(a, b);
        check_eq(out, t.str(), QPoset::from_relations(t.atom_set(), pairs), t);
    });
    // random arc sets against the naive matrix-power closure
    const int trials = 200;
    run.add_instances(trials);
    for (int trial = 0; trial < trials; ++trial) {
        std::uint64_t h = detail::fnv1a({std::uint8_t(trial & 0xff), std::uint8_t(trial >> 8)}, opts.seed);
        const int n = 1 + static_cast<int>(h % 5);
        std::vector<std::pair<int, int>> arcs;
        for (int k = 0; k < 6; ++k) {
            h = h * 6364136223846793005ull + 1442695040888963407ull;
            int a = static_cast<int>((h >> 8) % n), b = static_cast<int>((h >> 24) % n);
            if (a != b) arcs.emplace_back(a, b);
        }
        QPoset t = QPoset::from_relations(standard_atoms(n, 0), arcs);
        auto m = oracle::naive_closure(n, arcs);
        bool same = true;
        for (int i = 0; i < n && same; ++i)
            for (int j = 0; j < n; ++j)
                if (m[i][j] != t.leq(i, j)) {
                    same = false;
                    break;
                }
        run.expect("random closure trial " + std::to_string(trial), same, t.str(), "naive closure");
    }
    return run.finish();
}

inline CheckReport suite_quotient_duality(const CheckOptions& opts) {
    SuiteRun run("quotient-duality");
    for (int n = 0; n <= opts.n; ++n) {
        const auto& tops = labeled_topologies(n);
        auto finer = finer_table(tops);
        std::size_t pairs = 0;
        for (const auto& f : finer) pairs += f.size();
        auto fails = parallel_failures(tops.size(), opts.jobs, [&](std::size_t i, std::vector<CheckFailure>& out) {
            const QPoset& t = tops[i];
            for (std::size_t j : finer[i]) {
                const QPoset& tp = tops[j];
                check_eq(out, t.str() + " / " + tp.str(), quotient(t, tp).dual(),
                         quotient(t.dual(), tp.dual()));
            }
        });
        run.size_layer(n, pairs);
        run.merge_failures(std::move(fails));
    }
    return run.finish();
}

inline CheckReport suite_lemma_shrink(const CheckOptions& opts) {
    SuiteRun run("lemma-shrink");
    for (int n = 0; n <= opts.n; ++n) {
        const auto& tops = labeled_topologies(n);
        auto finer = finer_table(tops);
        auto fails = parallel_failures(tops.size(), opts.jobs, [&](std::size_t i, std::vector<CheckFailure>& out) {
            const QPoset& t = tops[i];
            for (std::size_t j : finer[i]) {
                const QPoset& tp = tops[j];
                QPoset q_t_tp = quotient(t, tp);
                for (std::size_t k : finer[j]) {
                    const QPoset& tpp = tops[k];
                    QPoset q_t = quotient(t, tpp), q_tp = quotient(tp, tpp);
                    std::string inst = t.str() + " > " + tp.str() + " > " + tpp.str();
                    bool ok = is_finer(q_tp, q_t);
                    check_true(out, inst + " (finer)", ok);
                    if (ok) check_eq(out, inst, q_t_tp, quotient(q_t, q_tp));
                }
            }
        });
        run.size_layer(n, tops.size());
        run.merge_failures(std::move(fails));
    }
    return run.finish();
}

inline CheckReport suite_lemma_classes(const CheckOptions& opts) {
    SuiteRun run("lemma-classes");
    over_topologies(run, opts, opts.n, [&](const QPoset& t, std::vector<CheckFailure>& out) {
        for (const QPoset& tp : admissible_refinements(t))
            check_eq(out, t.str() + " adm " + tp.str(), tp.equiv_classes(), t.equiv_classes());
    });
    return run.finish();
}

inline CheckReport suite_lemma_components(const CheckOptions& opts) {
    SuiteRun run("lemma-components");
    for (int n = 0; n <= opts.n; ++n) {
        const auto& tops = labeled_topologies(n);
        auto finer = finer_table(tops);
        auto fails = parallel_failures(tops.size(), opts.jobs, [&](std::size_t i, std::vector<CheckFailure>& out) {
            const QPoset& t = tops[i];
            for (std::size_t j : finer[i])
                check_eq(out, t.str() + " / " + tops[j].str(),
                         quotient(t, tops[j]).connected_components(), t.connected_components());
        });
        run.size_layer(n, tops.size());
        run.merge_failures(std::move(fails));
    }
    return run.finish();
}

inline CheckReport suite_admissible_transitivity(const CheckOptions& opts) {
    SuiteRun run("admissible-transitivity");
    over_topologies(run, opts, opts.n, [&](const QPoset& t, std::vector<CheckFailure>& out) {
        for (const QPoset& tp : admissible_refinements(t))
            for (const QPoset& tpp : admissible_refinements(tp))
                check_true(out, tpp.str() + " adm " + tp.str() + " adm " + t.str(),
                           is_admissible(tpp, t));
    });
    return run.finish();
}

inline CheckReport suite_transit_bijection(const CheckOptions& opts) {
    SuiteRun run("transit-bijection");
    over_topologies(run, opts, opts.n, [&](const QPoset& t, std::vector<CheckFailure>& out) {
        auto adm_t = admissible_refinements(t);
        for (const QPoset& tpp : adm_t) {
            QPoset q = quotient(t, tpp);
            // middle topologies between tpp and t
            std::vector<QPoset> middle;
            for (const QPoset& tp : adm_t)
                if (is_admissible(tpp, tp)) middle.push_back(tp);
            std::set<QPoset> image;
            bool injective = true;
            for (const QPoset& tp : middle) {
                QPoset u = quotient(tp, tpp);
                if (!image.insert(u).second) injective = false;
            }
            std::set<QPoset> target;
            for (const QPoset& u : admissible_refinements(q)) target.insert(u);
            std::string inst = t.str() + " adm " + tpp.str();
            check_true(out, inst + " (injective)", injective);
            check_true(out, inst + " (image)", image == target,
                       std::to_string(image.size()) + " images",
                       std::to_string(target.size()) + " admissible refinements of the quotient");
        }
    });
    return run.finish();
}

inline CheckReport suite_admissible_duality(const CheckOptions& opts) {
    SuiteRun run("admissible-duality");
    for (int n = 0; n <= opts.n; ++n) {
        const auto& tops = labeled_topologies(n);
        auto finer = finer_table(tops);
        auto fails = parallel_failures(tops.size(), opts.jobs, [&](std::size_t i, std::vector<CheckFailure>& out) {
            const QPoset& t = tops[i];
            for (std::size_t j : finer[i])
                check_true(out, t.str() + " vs " + tops[j].str(),
                           is_admissible(tops[j], t) == is_admissible(tops[j].dual(), t.dual()));
        });
        run.size_layer(n, tops.size());
        run.merge_failures(std::move(fails));
    }
    return run.finish();
}

inline CheckReport suite_admissible_structure(const CheckOptions& opts) {
    SuiteRun run("admissible-structure");
    const int cap = std::min(opts.n, 4); // definitional filter enumerates all topologies per instance
    over_topologies(run, opts, cap, [&](const QPoset& t, std::vector<CheckFailure>& out) {
        auto fast = admissible_refinements(t);
        auto slow = oracle::definitional_admissible_refinements(t);
        std::set<QPoset> a(fast.begin(), fast.end()), b(slow.begin(), slow.end());
        check_true(out, t.str(), a == b, std::to_string(a.size()) + " refinements",
                   std::to_string(b.size()) + " definitional refinements");
        check_true(out, t.str() + " (self)", a.count(t) == 1);
        // each refinement is the product of the restrictions to its components
        for (const QPoset& tp : fast) {
            QPoset rebuilt;
            for (const auto& blk : tp.connected_components().blocks)
                rebuilt = product(rebuilt, t.restrict_to(blk));
            check_eq(out, t.str() + " adm " + tp.str(), tp, rebuilt);
        }
    });
    return run.finish();
}

inline CheckReport suite_dsl_roundtrip(const CheckOptions& opts) {
    SuiteRun run("dsl-roundtrip");
    over_topologies(run, opts, opts.n, [&](const QPoset& t, std::vector<CheckFailure>& out) {
        check_eq(out, "dsl " + t.str(), parse_dsl(print_dsl(t)), t);
    });
    return run.finish();
}

// -------------------------------------------------------------------------------------
// lincomb suite
// -------------------------------------------------------------------------------------

inline CheckReport suite_lincomb_axioms(const CheckOptions& opts) {
    SuiteRun run("lincomb-axioms");
    auto rat = [&](std::uint64_t i) {
        return detail::hashed_rational(detail::fnv1a({std::uint8_t(i & 0xff), std::uint8_t(i >> 8)}, opts.seed));
    };
    const int trials = 200;
    run.add_instances(trials);
    for (int k = 0; k < trials; ++k) {
        Rational a = rat(3 * k), b = rat(3 * k + 1), c = rat(3 * k + 2);
        run.expect("rational assoc " + std::to_string(k), (a + b) + c == a + (b + c));
        run.expect("rational distr " + std::to_string(k), a * (b + c) == a * b + a * c);
        run.expect("rational mul assoc " + std::to_string(k), (a * b) * c == a * (b * c));
        if (!c.is_zero())
            run.expect("rational div " + std::to_string(k), (a / c) * c == a);
    }
    // small random combinations over compositions
    auto comp = [&](std::uint64_t i) {
        std::vector<int> parts;
        std::uint64_t h = detail::fnv1a({std::uint8_t(i)}, opts.seed ^ 0xabcd);
        int len = static_cast<int>(h % 3);
        for (int j = 0; j < len; ++j) parts.push_back(1 + static_cast<int>((h >> (8 * j + 8)) % 3));
        return Composition(parts);
    };
    const int combo_trials = 50;
    run.add_instances(combo_trials);
    for (int k = 0; k < combo_trials; ++k) {
        LinComb<Composition> x(comp(4 * k), rat(5 * k)), y(comp(4 * k + 1), rat(5 * k + 1)),
            z(comp(4 * k + 2), rat(5 * k + 2));
        x += LinComb<Composition>(comp(4 * k + 3), rat(5 * k + 3));
        run.expect_eq("add comm " + std::to_string(k), x + y, y + x);
        run.expect_eq("add assoc " + std::to_string(k), (x + y) + z, x + (y + z));
        run.expect_eq("scale zero " + std::to_string(k), x * Rational(0), LinComb<Composition>());
        run.expect_eq("tensor distr " + std::to_string(k), tensor(x + y, z),
                      tensor(x, z) + tensor(y, z));
        auto f = [](const Composition& c2) {
            return LinComb<Composition>(c2, Rational(2));
        };
        run.expect_eq("linearity " + std::to_string(k), apply_linear(x + y, f),
                      apply_linear(x, f) + apply_linear(y, f));
    }
    return run.finish();
}

// -------------------------------------------------------------------------------------
// topalg suites
// -------------------------------------------------------------------------------------

inline CheckReport suite_gamma_coassoc(const CheckOptions& opts) {
    SuiteRun run("gamma-coassoc");
    over_topologies(run, opts, opts.n, [&](const QPoset& t, std::vector<CheckFailure>& out) {
        LinComb<QQQ> lhs, rhs;
        for (const auto& [lr, c] : gamma(t).terms()) {
            for (const auto& [ab, d] : gamma(lr.first).terms())
                lhs.add_term({ab.first, ab.second, lr.second}, c * d);
            for (const auto& [ab, d] : gamma(lr.second).terms())
                rhs.add_term({lr.first, ab.first, ab.second}, c * d);
        }
        check_eq(out, t.str(), lhs, rhs);
    });
    return run.finish();
}

inline CheckReport suite_gamma_counit(const CheckOptions& opts) {
    SuiteRun run("gamma-counit");
    over_topologies(run, opts, opts.n, [&](const QPoset& t, std::vector<CheckFailure>& out) {
        LinComb<QPoset> left, right, id(t);
        for (const auto& [lr, c] : gamma(t).terms()) {
            left.add_term(lr.second, c * counit_gamma(lr.first));
            right.add_term(lr.first, c * counit_gamma(lr.second));
        }
        check_eq(out, t.str() + " (eps (x) id)", left, id);
        check_eq(out, t.str() + " (id (x) eps)", right, id);
    });
    return run.finish();
}

inline CheckReport suite_gamma_product(const CheckOptions& opts) {
    SuiteRun run("gamma-product");
    std::size_t count = 0;
    for (int n1 = 0; n1 <= opts.n; ++n1)
        for (int n2 = 0; n1 + n2 <= opts.n; ++n2) {
            const auto tops1 = all_topologies(standard_atoms(n1, 0));
            const auto tops2 = all_topologies(standard_atoms(n2, n1));
            count += tops1.size() * tops2.size();
            for (const QPoset& t1 : tops1)
                for (const QPoset& t2 : tops2)
                    run.expect_eq("(" + t1.str() + ")(" + t2.str() + ")", gamma(product(t1, t2)),
                                  legwise_product(gamma(t1), gamma(t2)));
        }
    run.add_instances(count);
    return run.finish();
}

inline CheckReport suite_delta_coassoc(const CheckOptions& opts) {
    SuiteRun run("delta-coassoc");
    over_topologies(run, opts, opts.n, [&](const QPoset& t, std::vector<CheckFailure>& out) {
        LinComb<QQQ> lhs, rhs;
        for (const auto& [lr, c] : delta(t).terms()) {
            for (const auto& [ab, d] : delta(lr.first).terms())
                lhs.add_term({ab.first, ab.second, lr.second}, c * d);
            for (const auto& [ab, d] : delta(lr.second).terms())
                rhs.add_term({lr.first, ab.first, ab.second}, c * d);
        }
        check_eq(out, t.str(), lhs, rhs);
    });
    return run.finish();
}

inline CheckReport suite_delta_mult(const CheckOptions& opts) {
    SuiteRun run("delta-mult");
    std::size_t count = 0;
    for (int n1 = 0; n1 <= opts.n; ++n1)
        for (int n2 = 0; n1 + n2 <= opts.n; ++n2) {
            const auto tops1 = all_topologies(standard_atoms(n1, 0));
            const auto tops2 = all_topologies(standard_atoms(n2, n1));
            count += tops1.size() * tops2.size();
            for (const QPoset& t1 : tops1)
                for (const QPoset& t2 : tops2)
                    run.expect_eq("(" + t1.str() + ")(" + t2.str() + ")", delta(product(t1, t2)),
                                  legwise_product(delta(t1), delta(t2)));
        }
    run.add_instances(count);
    return run.finish();
}

inline CheckReport suite_internal_external(const CheckOptions& opts) {
    SuiteRun run("internal-external");
    over_topologies(run, opts, opts.n, [&](const QPoset& t, std::vector<CheckFailure>& out) {
        LinComb<QQQ> lhs, rhs;
        for (const auto& [lq, c] : gamma(t).terms())
            for (const auto& [ab, d] : delta(lq.second).terms())
                lhs.add_term({lq.first, ab.first, ab.second}, c * d);
        for (const auto& [ab, c] : delta(t).terms())
            for (const auto& [u1, d] : gamma(ab.first).terms())
                for (const auto& [u2, e] : gamma(ab.second).terms())
                    rhs.add_term({product(u1.first, u2.first), u1.second, u2.second}, c * d * e);
        check_eq(out, t.str(), lhs, rhs);
    });
    return run.finish();
}

// Restriction of an admissible refinement stays admissible on every subset;
// restriction commutes with the quotient on the open sets of the quotient and
// their complements (the identity does not extend to arbitrary subsets: for
// the three-point fan 1<2, 1<3 with T' = T, the quotient is coarse but the
// restriction of T to {2, 3} is discrete).
inline CheckReport suite_restrict_quotient(const CheckOptions& opts) {
    SuiteRun run("restrict-quotient");
    over_topologies(run, opts, opts.n, [&](const QPoset& t, std::vector<CheckFailure>& out) {
        const QPoset::Mask full = t.full_mask();
        for (const QPoset& tp : admissible_refinements(t)) {
            QPoset q = quotient(t, tp);
            for (QPoset::Mask y = 0;; ++y) {
                std::string inst = t.str() + " adm " + tp.str() + " on mask " + std::to_string(y);
                check_true(out, inst + " (adm)",
                           is_admissible(tp.restrict_mask(y), t.restrict_mask(y)));
                if (y == full) break;
            }
            for (QPoset::Mask open : q.open_masks())
                for (QPoset::Mask y : {open, QPoset::Mask(full & ~open)}) {
                    QPoset rt = t.restrict_mask(y), rtp = tp.restrict_mask(y);
                    std::string inst = t.str() + " adm " + tp.str() + " on mask " + std::to_string(y);
                    check_eq(out, inst, q.restrict_mask(y), quotient(rt, rtp));
                }
        }
    });
    return run.finish();
}

inline CheckReport suite_gamma_grading(const CheckOptions& opts) {
    SuiteRun run("gamma-grading");
    over_topologies(run, opts, opts.n, [&](const QPoset& t, std::vector<CheckFailure>& out) {
        for (const auto& [lr, c] : gamma(t).terms())
            check_true(out, t.str() + " term " + lr.first.str(),
                       lr.first.degree() + lr.second.degree() == t.degree(),
                       std::to_string(lr.first.degree()) + "+" + std::to_string(lr.second.degree()),
                       std::to_string(t.degree()));
    });
    return run.finish();
}

inline CheckReport suite_gamma_duality(const CheckOptions& opts) {
    SuiteRun run("gamma-duality");
    over_topologies(run, opts, opts.n, [&](const QPoset& t, std::vector<CheckFailure>& out) {
        LinComb<QQ> lhs;
        for (const auto& [lr, c] : gamma(t).terms())
            lhs.add_term({lr.first.dual(), lr.second.dual()}, c);
        check_eq(out, t.str(), lhs, gamma(t.dual()));
    });
    return run.finish();
}

inline CheckReport suite_h_hopf(const CheckOptions& opts) {
    SuiteRun run("h-hopf");
    for (int n = 0; n <= opts.n; ++n) {
        auto classes = all_iso_classes(n);
        run.size_layer(n, classes.size());
        for (const auto& c : classes) {
            using III = std::tuple<IsoClass, IsoClass, IsoClass>;
            LinComb<III> dl, dr, gl, gr;
            for (const auto& [lr, k] : h_delta(c).terms()) {
                for (const auto& [ab, d] : h_delta(lr.first).terms())
                    dl.add_term({ab.first, ab.second, lr.second}, k * d);
                for (const auto& [ab, d] : h_delta(lr.second).terms())
                    dr.add_term({lr.first, ab.first, ab.second}, k * d);
            }
            run.expect_eq(c.str() + " delta coassoc", dl, dr);
            for (const auto& [lr, k] : h_gamma(c).terms()) {
                for (const auto& [ab, d] : h_gamma(lr.first).terms())
                    gl.add_term({ab.first, ab.second, lr.second}, k * d);
                for (const auto& [ab, d] : h_gamma(lr.second).terms())
                    gr.add_term({lr.first, ab.first, ab.second}, k * d);
            }
            run.expect_eq(c.str() + " gamma coassoc", gl, gr);
            // counit laws for the external coproduct on classes
            LinComb<IsoClass> left, right, id(c);
            for (const auto& [lr, k] : h_delta(c).terms()) {
                if (lr.first.n() == 0) left.add_term(lr.second, k);
                if (lr.second.n() == 0) right.add_term(lr.first, k);
            }
            run.expect_eq(c.str() + " delta counit L", left, id);
            run.expect_eq(c.str() + " delta counit R", right, id);
        }
    }
    // product: commutative, multiplicative under forgetting labels
    std::size_t pairs = 0;
    for (int n1 = 0; n1 <= opts.n; ++n1)
        for (int n2 = 0; n1 + n2 <= opts.n; ++n2) {
            const auto tops1 = all_topologies(standard_atoms(n1, 0));
            const auto tops2 = all_topologies(standard_atoms(n2, n1));
            pairs += tops1.size() * tops2.size();
            for (const QPoset& t1 : tops1)
                for (const QPoset& t2 : tops2) {
                    IsoClass left = iso_of(product(t1, t2));
                    run.expect_eq("iso mult " + t1.str() + " " + t2.str(), left,
                                  h_product(iso_of(t1), iso_of(t2)));
                    run.expect_eq("iso comm " + t1.str() + " " + t2.str(), left,
                                  h_product(iso_of(t2), iso_of(t1)));
                }
        }
    run.add_instances(pairs);
    return run.finish();
}

inline CheckReport suite_antipode(const CheckOptions& opts) {
    SuiteRun run("antipode");
    for (int n = 0; n <= opts.n; ++n) {
        auto classes = all_iso_classes(n);
        run.size_layer(n, classes.size());
        for (const auto& c : classes) {
            LinComb<IsoClass> conv;
            for (const auto& [lr, k] : h_delta(c).terms())
                conv += h_product(antipode_h(lr.first), LinComb<IsoClass>(lr.second)) * k;
            LinComb<IsoClass> expect =
                c.n() == 0 ? LinComb<IsoClass>(IsoClass()) : LinComb<IsoClass>();
            run.expect_eq(c.str(), conv, expect);
        }
    }
    return run.finish();
}

inline CheckReport suite_ht_algebra(const CheckOptions& opts) {
    SuiteRun run("ht-algebra");
    const int cap = std::min(opts.n, 3);
    std::size_t count = 0;
    // units
    for (int n = 0; n <= cap; ++n)
        for (const auto& t : labeled_topologies(n)) {
            LabeledTop a{t}, unit;
            ++count;
            run.expect_eq("unit . " + a.str(), ht_product(unit, a), a);
            run.expect_eq(a.str() + " . unit", ht_product(a, unit), a);
            run.expect_eq("unit join " + a.str(), ht_join(unit, a), a);
            run.expect_eq(a.str() + " join unit", ht_join(a, unit), a);
            run.expect_eq("involution^2 " + a.str(), involution_ht(involution_ht(a)), a);
            // delta coassociativity
            using LLL = std::tuple<LabeledTop, LabeledTop, LabeledTop>;
            LinComb<LLL> dl, dr;
            for (const auto& [lr, k] : ht_delta(a).terms()) {
                for (const auto& [ab, d] : ht_delta(lr.first).terms())
                    dl.add_term({ab.first, ab.second, lr.second}, k * d);
                for (const auto& [ab, d] : ht_delta(lr.second).terms())
                    dr.add_term({lr.first, ab.first, ab.second}, k * d);
            }
            run.expect_eq(a.str() + " delta coassoc", dl, dr);
        }
    // pairs: product morphisms, involution (anti)morphisms, delta multiplicativity
    for (int n1 = 0; n1 <= cap; ++n1)
        for (int n2 = 0; n1 + n2 <= cap; ++n2)
            for (const auto& t1 : labeled_topologies(n1))
                for (const auto& t2 : labeled_topologies(n2)) {
                    LabeledTop a{t1}, b{t2};
                    ++count;
                    LabeledTop ab = ht_product(a, b);
                    run.expect_eq("iso(ab)=iso(ba) " + a.str() + " " + b.str(),
                                  iso_of(ab.top()), iso_of(ht_product(b, a).top()));
                    run.expect_eq("involution product " + a.str() + " " + b.str(),
                                  involution_ht(ab), ht_product(involution_ht(a), involution_ht(b)));
                    // delta is multiplicative for the shifted product
                    using LL = std::pair<LabeledTop, LabeledTop>;
                    LinComb<LL> lhs = ht_delta(ab), rhs;
                    for (const auto& [x, cx] : ht_delta(a).terms())
                        for (const auto& [y, cy] : ht_delta(b).terms())
                            rhs.add_term({ht_product(x.first, y.first), ht_product(x.second, y.second)},
                                         cx * cy);
                    run.expect_eq("delta mult " + a.str() + " " + b.str(), lhs, rhs);
                }
    // involution is an antimorphism for delta
    for (int n = 0; n <= cap; ++n)
        for (const auto& t : labeled_topologies(n)) {
            LabeledTop a{t};
            using LL = std::pair<LabeledTop, LabeledTop>;
            LinComb<LL> lhs, rhs;
            for (const auto& [lr, k] : ht_delta(involution_ht(a)).terms()) lhs.add_term(lr, k);
            for (const auto& [lr, k] : ht_delta(a).terms())
                rhs.add_term({involution_ht(lr.second), involution_ht(lr.first)}, k);
            run.expect_eq("involution antimorphism " + a.str(), lhs, rhs);
        }
    // join associativity on triples of size <= 2
    for (int n1 = 0; n1 <= 2; ++n1)
        for (int n2 = 0; n2 <= 2; ++n2)
            for (int n3 = 0; n3 <= 2; ++n3)
                for (const auto& t1 : labeled_topologies(n1))
                    for (const auto& t2 : labeled_topologies(n2))
                        for (const auto& t3 : labeled_topologies(n3)) {
                            LabeledTop a{t1}, b{t2}, c{t3};
                            ++count;
                            run.expect_eq("join assoc", ht_join(ht_join(a, b), c),
                                          ht_join(a, ht_join(b, c)));
                            run.expect_eq("product assoc", ht_product(ht_product(a, b), c),
                                          ht_product(a, ht_product(b, c)));
                        }
    run.add_instances(count);
    return run.finish();
}

/// The fixed five-term computation showing that the compatibility of the two
/// coproducts does not survive standardization in H_T: both sides share four
/// terms and differ in exactly one, whose legs agree except for the leftmost.
inline CheckReport suite_ht_compat_counterexample(const CheckOptions&) {
    SuiteRun run("ht-compat-counterexample");
    run.add_instances(1);
    using LLL = std::tuple<LabeledTop, LabeledTop, LabeledTop>;
    LabeledTop t{parse_dsl("3<1, 1~2")}; // 3 below the class {1,2}

    LinComb<LLL> lhs; // m^{1,3} (Gamma (x) Gamma) Delta
    for (const auto& [ab, c] : ht_delta(t).terms())
        for (const auto& [u1, d] : gamma_ht(ab.first).terms())
            for (const auto& [u2, e] : gamma_ht(ab.second).terms())
                lhs.add_term({ht_product(u1.first, u2.first), u1.second, u2.second}, c * d * e);

    LinComb<LLL> rhs; // (Id (x) Delta) Gamma
    for (const auto& [lq, c] : gamma_ht(t).terms())
        for (const auto& [ab, d] : ht_delta(lq.second).terms())
            rhs.add_term({lq.first, ab.first, ab.second}, c * d);

    LabeledTop unit;
    LabeledTop coarse3{parse_dsl("1~2, 2~3")};
    LabeledTop classes12_3{parse_dsl("1~2, 3")};
    LabeledTop classes1_23{parse_dsl("1, 2~3")};
    LabeledTop point{parse_dsl("1")};
    LabeledTop coarse2{parse_dsl("1~2")};

    LinComb<LLL> shared;
    shared.add_term({t, coarse3, unit}, 1);
    shared.add_term({classes12_3, t, unit}, 1);
    shared.add_term({t, unit, coarse3}, 1);
    shared.add_term({classes12_3, unit, t}, 1);

    LinComb<LLL> lhs_expected = shared, rhs_expected = shared;
    lhs_expected.add_term({classes1_23, point, coarse2}, 1);
    rhs_expected.add_term({classes12_3, point, coarse2}, 1);

    run.expect_eq("five-term side m13(Gamma,Gamma)Delta", lhs, lhs_expected);
    run.expect_eq("five-term side (Id,Delta)Gamma", rhs, rhs_expected);
    run.expect("sides differ", lhs != rhs, "lhs == rhs", "exactly one differing term");
    LinComb<LLL> diff = lhs - rhs;
    run.expect("difference has two terms", diff.term_count() == 2,
               std::to_string(diff.term_count()) + " terms", "2 terms");
    // the differing terms agree outside the leftmost leg
    LinComb<LLL> expected_diff;
    expected_diff.add_term({classes1_23, point, coarse2}, 1);
    expected_diff.add_term({classes12_3, point, coarse2}, -1);
    run.expect_eq("difference", diff, expected_diff);
    return run.finish();
}

// -------------------------------------------------------------------------------------
// counting suites
// -------------------------------------------------------------------------------------

inline CheckReport suite_fubini_counts(const CheckOptions&) {
    SuiteRun run("fubini-counts");
    const std::size_t expected[] = {1, 1, 3, 13, 75, 541};
    for (int n = 0; n <= 5; ++n) {
        run.add_instances(1);
        auto got = all_set_compositions(standard_atoms(n)).size();
        run.expect("set compositions of [" + std::to_string(n) + "]", got == expected[n],
                   std::to_string(got), std::to_string(expected[n]));
    }
    return run.finish();
}

inline CheckReport suite_topology_counts(const CheckOptions& opts) {
    SuiteRun run("topology-counts");
    // derived constants, frozen after the two enumerators agreed
    const std::uint64_t expected[] = {1, 1, 4, 29, 355, 6942};
    const int cap = std::min(opts.n, 5);
    for (int n = 0; n <= cap; ++n) {
        run.add_instances(1);
        std::uint64_t matrix_count = labeled_topologies(n).size();
        run.expect("matrix enumerator n=" + std::to_string(n), matrix_count == expected[n],
                   std::to_string(matrix_count), std::to_string(expected[n]));
        if (n <= 4) {
            std::uint64_t family_count = count_topologies_by_families(n);
            run.expect("family enumerator n=" + std::to_string(n), family_count == matrix_count,
                       std::to_string(family_count), std::to_string(matrix_count));
        }
    }
    return run.finish();
}

// -------------------------------------------------------------------------------------
// setcomp suites
// -------------------------------------------------------------------------------------

inline CheckReport suite_sc_bialgebra(const CheckOptions& opts) {
    SuiteRun run("sc-bialgebra");
    using SS = std::pair<SetComposition, SetComposition>;
    using SSS = std::tuple<SetComposition, SetComposition, SetComposition>;
    for (int n = 0; n <= opts.n; ++n) {
        auto comps = all_set_compositions(standard_atoms(n));
        run.size_layer(n, comps.size());
        auto fails = parallel_failures(comps.size(), opts.jobs, [&](std::size_t i, std::vector<CheckFailure>& out) {
            const SetComposition& c = comps[i];
            // rho coassociativity
            LinComb<SSS> rl, rr;
            for (const auto& [lr, k] : sc_rho(c).terms()) {
                for (const auto& [ab, d] : sc_rho(lr.first).terms())
                    rl.add_term({ab.first, ab.second, lr.second}, k * d);
                for (const auto& [ab, d] : sc_rho(lr.second).terms())
                    rr.add_term({lr.first, ab.first, ab.second}, k * d);
            }
            check_eq(out, c.str() + " rho coassoc", rl, rr);
            // rho counit laws
            LinComb<SetComposition> left, right, id(c);
            for (const auto& [lr, k] : sc_rho(c).terms()) {
                left.add_term(lr.second, k * sc_counit(lr.first));
                right.add_term(lr.first, k * sc_counit(lr.second));
            }
            check_eq(out, c.str() + " rho counit L", left, id);
            check_eq(out, c.str() + " rho counit R", right, id);
            // delta coassociativity
            LinComb<SSS> dl, dr;
            for (const auto& [lr, k] : sc_delta(c).terms()) {
                for (const auto& [ab, d] : sc_delta(lr.first).terms())
                    dl.add_term({ab.first, ab.second, lr.second}, k * d);
                for (const auto& [ab, d] : sc_delta(lr.second).terms())
                    dr.add_term({lr.first, ab.first, ab.second}, k * d);
            }
            check_eq(out, c.str() + " delta coassoc", dl, dr);
            // internal-external compatibility
            LinComb<SSS> lhs, rhs;
            for (const auto& [lq, k] : sc_rho(c).terms())
                for (const auto& [ab, d] : sc_delta(lq.second).terms())
                    lhs.add_term({lq.first, ab.first, ab.second}, k * d);
            for (const auto& [ab, k] : sc_delta(c).terms())
                for (const auto& [u1, d] : sc_rho(ab.first).terms())
                    for (const auto& [u2, e] : sc_rho(ab.second).terms())
                        for (const auto& [p, f] : sc_product(u1.first, u2.first).terms())
                            rhs.add_term({p, u1.second, u2.second}, k * d * e * f);
            check_eq(out, c.str() + " rho-delta compat", lhs, rhs);
        });
        run.merge_failures(std::move(fails));
    }
    // multiplicativity of rho and delta for the set-composition product
    std::size_t pairs = 0;
    for (int n1 = 0; n1 <= opts.n; ++n1)
        for (int n2 = 0; n1 + n2 <= std::min(opts.n, 3); ++n2) {
            auto cs1 = all_set_compositions(standard_atoms(n1, 0));
            auto cs2 = all_set_compositions(standard_atoms(n2, n1));
            pairs += cs1.size() * cs2.size();
            for (const auto& c1 : cs1)
                for (const auto& c2 : cs2) {
                    LinComb<SetComposition> prod = sc_product(c1, c2);
                    LinComb<SS> rho_prod, rho_legwise, delta_prod, delta_legwise;
                    for (const auto& [c, k] : prod.terms()) {
                        rho_prod += sc_rho(c) * k;
                        delta_prod += sc_delta(c) * k;
                    }
                    for (const auto& [x, cx] : sc_rho(c1).terms())
                        for (const auto& [y, cy] : sc_rho(c2).terms())
                            rho_legwise += tensor(sc_product(x.first, y.first),
                                                  sc_product(x.second, y.second)) *
                                           (cx * cy);
                    for (const auto& [x, cx] : sc_delta(c1).terms())
                        for (const auto& [y, cy] : sc_delta(c2).terms())
                            delta_legwise += tensor(sc_product(x.first, y.first),
                                                    sc_product(x.second, y.second)) *
                                             (cx * cy);
                    run.expect_eq("rho mult " + c1.str() + c2.str(), rho_prod, rho_legwise);
                    run.expect_eq("delta mult " + c1.str() + c2.str(), delta_prod, delta_legwise);
                    run.expect_eq("product oracle " + c1.str() + c2.str(), prod,
                                  oracle::brute_sc_product(c1, c2));
                }
        }
    run.add_instances(pairs);
    return run.finish();
}

inline CheckReport suite_theoextension_product(const CheckOptions& opts) {
    SuiteRun run("theoextension-product");
    std::size_t count = 0;
    for (int n1 = 0; n1 <= opts.n; ++n1)
        for (int n2 = 0; n1 + n2 <= opts.n; ++n2) {
            const auto tops1 = all_topologies(standard_atoms(n1, 0));
            const auto tops2 = all_topologies(standard_atoms(n2, n1));
            count += tops1.size() * tops2.size();
            for (const QPoset& t1 : tops1)
                for (const QPoset& t2 : tops2) {
                    LinComb<SetComposition> rhs =
                        bilinear(L(t1), L(t2), [](const SetComposition& a, const SetComposition& b) {
                            return sc_product(a, b);
                        });
                    run.expect_eq("L(" + t1.str() + " " + t2.str() + ")", L(product(t1, t2)), rhs);
                }
        }
    run.add_instances(count);
    return run.finish();
}

inline CheckReport suite_theoextension_delta(const CheckOptions& opts) {
    SuiteRun run("theoextension-delta");
    using SS = std::pair<SetComposition, SetComposition>;
    over_topologies(run, opts, opts.n, [&](const QPoset& t, std::vector<CheckFailure>& out) {
        LinComb<SS> lhs, rhs;
        for (const auto& [c, k] : L(t).terms()) lhs += sc_delta(c) * k;
        for (const auto& [ab, k] : delta(t).terms())
            rhs += tensor(L(ab.first), L(ab.second)) * k;
        check_eq(out, t.str(), lhs, rhs);
    });
    return run.finish();
}

inline CheckReport suite_theoextension_rho(const CheckOptions& opts) {
    SuiteRun run("theoextension-rho");
    using SS = std::pair<SetComposition, SetComposition>;
    over_topologies(run, opts, opts.n, [&](const QPoset& t, std::vector<CheckFailure>& out) {
        LinComb<SS> lhs, rhs;
        for (const auto& [c, k] : L(t).terms()) lhs += sc_rho(c) * k;
        for (const auto& [ab, k] : gamma(t).terms())
            rhs += tensor(L(ab.first), L(ab.second)) * k;
        check_eq(out, t.str(), lhs, rhs);
    });
    return run.finish();
}

inline CheckReport suite_l_surjectivity(const CheckOptions& opts) {
    SuiteRun run("L-surjectivity");
    for (int n = 0; n <= opts.n; ++n) {
        auto comps = all_set_compositions(standard_atoms(n));
        run.size_layer(n, comps.size());
        for (const auto& c : comps)
            run.expect_eq(c.str(), L(composition_topology(c)), LinComb<SetComposition>(c));
    }
    return run.finish();
}

inline CheckReport suite_l_restriction(const CheckOptions& opts) {
    SuiteRun run("L-restriction");
    over_topologies(run, opts, opts.n, [&](const QPoset& t, std::vector<CheckFailure>& out) {
        auto exts = linear_extensions(t);
        const QPoset::Mask full = t.full_mask();
        for (QPoset::Mask y = 0;; ++y) {
            AtomSet ys = t.mask_to_atoms(y);
            auto sub_exts = linear_extensions(t.restrict_mask(y));
            std::set<SetComposition> allowed(sub_exts.begin(), sub_exts.end());
            for (const auto& c : exts)
                check_true(out, t.str() + " ext " + c.str() + " mask " + std::to_string(y),
                           allowed.count(sc_restrict(c, ys)) == 1);
            if (y == full) break;
        }
    });
    // brute-force cross-check of the enumerator itself
    const int cap = std::min(opts.n, 3);
    std::size_t count = 0;
    for (int n = 0; n <= cap; ++n)
        for (const auto& t : labeled_topologies(n)) {
            ++count;
            auto fast = linear_extensions(t);
            auto slow = oracle::brute_linear_extensions(t);
            std::sort(slow.begin(), slow.end());
            run.expect("extension oracle " + t.str(), fast == slow,
                       std::to_string(fast.size()) + " extensions",
                       std::to_string(slow.size()) + " brute-force extensions");
        }
    run.add_instances(count);
    return run.finish();
}

// -------------------------------------------------------------------------------------
// wordalg suites
// -------------------------------------------------------------------------------------

inline CheckReport suite_qsym_wqsym_axioms(const CheckOptions& opts) {
    SuiteRun run("qsym-wqsym-axioms");
    // QSh counts against known values
    run.add_instances(3);
    run.expect("|QSh(1,1)|", qsh_surjections({1, 1}).size() == 3);
    run.expect("|QSh(1,2)|", qsh_surjections({1, 2}).size() == 5);
    run.expect("|QSh(3,0)|", qsh_surjections({3, 0}).size() == 1);

    auto comps = detail::compositions_up_to_weight(std::min(opts.n, 4));
    run.add_instances(comps.size());
    using CCC = std::tuple<Composition, Composition, Composition>;
    for (const auto& c : comps) {
        LinComb<CCC> dl, dr, rl, rr;
        for (const auto& [lr, k] : qsym_delta(c).terms()) {
            for (const auto& [ab, d] : qsym_delta(lr.first).terms())
                dl.add_term({ab.first, ab.second, lr.second}, k * d);
            for (const auto& [ab, d] : qsym_delta(lr.second).terms())
                dr.add_term({lr.first, ab.first, ab.second}, k * d);
        }
        run.expect_eq(c.str() + " delta coassoc", dl, dr);
        for (const auto& [lr, k] : qsym_rho(c).terms()) {
            for (const auto& [ab, d] : qsym_rho(lr.first).terms())
                rl.add_term({ab.first, ab.second, lr.second}, k * d);
            for (const auto& [ab, d] : qsym_rho(lr.second).terms())
                rr.add_term({lr.first, ab.first, ab.second}, k * d);
        }
        run.expect_eq(c.str() + " rho coassoc", rl, rr);
        LinComb<Composition> left, right, id(c);
        for (const auto& [lr, k] : qsym_rho(c).terms()) {
            left.add_term(lr.second, k * qsym_rho_counit(lr.first));
            right.add_term(lr.first, k * qsym_rho_counit(lr.second));
        }
        run.expect_eq(c.str() + " rho counit L", left, id);
        run.expect_eq(c.str() + " rho counit R", right, id);
        for (const auto& d : comps) {
            if (c.weight() + d.weight() > 4) continue;
            run.expect_eq("comm " + c.str() + d.str(), qsym_product(c, d), qsym_product(d, c));
        }
    }
    // QSym assoc on small triples
    auto small = detail::compositions_up_to_weight(2);
    for (const auto& a : small)
        for (const auto& b : small)
            for (const auto& c : small) {
                LinComb<Composition> lhs, rhs;
                for (const auto& [x, k] : qsym_product(a, b).terms()) lhs += qsym_product(x, c) * k;
                for (const auto& [x, k] : qsym_product(b, c).terms()) rhs += qsym_product(a, x) * k;
                run.expect_eq("assoc " + a.str() + b.str() + c.str(), lhs, rhs);
            }
    run.add_instances(small.size() * small.size() * small.size());

    // WQSym via the projections from set compositions
    std::size_t proj = 0;
    for (int n1 = 0; n1 <= 2; ++n1)
        for (int n2 = 0; n2 <= 2; ++n2) {
            auto cs1 = all_set_compositions(standard_atoms(n1, 0));
            auto cs2 = all_set_compositions(standard_atoms(n2, n1));
            proj += cs1.size() * cs2.size();
            for (const auto& c1 : cs1)
                for (const auto& c2 : cs2) {
                    LinComb<Composition> typed;
                    for (const auto& [c, k] : sc_product(c1, c2).terms())
                        typed.add_term(type_of(c), k);
                    run.expect_eq("type of product " + c1.str() + c2.str(), typed,
                                  qsym_product(type_of(c1), type_of(c2)));
                }
        }
    run.add_instances(proj);
    for (int n = 0; n <= std::min(opts.n, 4); ++n) {
        auto cs = all_set_compositions(standard_atoms(n));
        run.add_instances(cs.size());
        for (const auto& c : cs) {
            PackedWord w = sc_to_packed(c);
            run.expect_eq("packed roundtrip " + c.str(), packed_to_sc(w), c);
            using PP = std::pair<PackedWord, PackedWord>;
            LinComb<PP> projected;
            for (const auto& [lr, k] : sc_rho(c).terms())
                projected.add_term({sc_to_packed(lr.first), sc_to_packed(lr.second)}, k);
            run.expect_eq("rho projection " + c.str(), projected, wqsym_rho(w));
        }
    }
    // WQSym product: term mass equals |QSh|, and associativity on short words
    std::vector<PackedWord> words1 = all_packed_words(1), words2 = all_packed_words(2);
    std::size_t wcount = 0;
    for (const auto& u : words2)
        for (const auto& v : words2) {
            ++wcount;
            Rational mass(0);
            for (const auto& [w, k] : wqsym_product(u, v).terms()) mass += k;
            run.expect("mass " + u.str() + v.str(),
                       mass == Rational(static_cast<long>(
                                   qsh_surjections({u.max_letter(), v.max_letter()}).size())));
        }
    for (const auto& a : words1)
        for (const auto& b : words1)
            for (const auto& c : words2) {
                ++wcount;
                LinComb<PackedWord> lhs, rhs;
                for (const auto& [x, k] : wqsym_product(a, b).terms()) lhs += wqsym_product(x, c) * k;
                for (const auto& [x, k] : wqsym_product(b, c).terms()) rhs += wqsym_product(a, x) * k;
                run.expect_eq("wq assoc " + a.str() + b.str() + c.str(), lhs, rhs);
            }
    // wqsym delta coassociativity on words of length <= 4
    for (int n = 0; n <= std::min(opts.n, 4); ++n)
        for (const auto& w : all_packed_words(n)) {
            ++wcount;
            using PPP = std::tuple<PackedWord, PackedWord, PackedWord>;
            LinComb<PPP> dl, dr;
            for (const auto& [lr, k] : wqsym_delta(w).terms()) {
                for (const auto& [ab, d] : wqsym_delta(lr.first).terms())
                    dl.add_term({ab.first, ab.second, lr.second}, k * d);
                for (const auto& [ab, d] : wqsym_delta(lr.second).terms())
                    dr.add_term({lr.first, ab.first, ab.second}, k * d);
            }
            run.expect_eq("wq delta coassoc " + w.str(), dl, dr);
        }
    run.add_instances(wcount);
    return run.finish();
}

inline CheckReport suite_lambda_morphism(const CheckOptions& opts) {
    SuiteRun run("lambda-morphism");
    std::size_t count = 0;
    for (int n1 = 0; n1 <= opts.n; ++n1)
        for (int n2 = 0; n1 + n2 <= opts.n; ++n2) {
            const auto tops1 = all_topologies(standard_atoms(n1, 0));
            const auto tops2 = all_topologies(standard_atoms(n2, n1));
            count += tops1.size() * tops2.size();
            for (const QPoset& t1 : tops1)
                for (const QPoset& t2 : tops2) {
                    LinComb<Composition> rhs =
                        bilinear(lambda_of(t1), lambda_of(t2),
                                 [](const Composition& a, const Composition& b) {
                                     return qsym_product(a, b);
                                 });
                    run.expect_eq("lambda(" + t1.str() + " " + t2.str() + ")",
                                  lambda_map(iso_of(product(t1, t2))), rhs);
                }
        }
    run.add_instances(count);
    return run.finish();
}

inline CheckReport suite_lambda_coproducts(const CheckOptions& opts) {
    SuiteRun run("lambda-coproducts");
    using CC = std::pair<Composition, Composition>;
    over_topologies(run, opts, opts.n, [&](const QPoset& t, std::vector<CheckFailure>& out) {
        LinComb<CC> lhs_delta, rhs_delta, lhs_rho, rhs_rho;
        for (const auto& [ab, k] : delta(t).terms())
            lhs_delta += tensor(lambda_of(ab.first), lambda_of(ab.second)) * k;
        for (const auto& [c, k] : lambda_of(t).terms()) rhs_delta += qsym_delta(c) * k;
        check_eq(out, t.str() + " delta", lhs_delta, rhs_delta);
        for (const auto& [ab, k] : gamma(t).terms())
            lhs_rho += tensor(lambda_of(ab.first), lambda_of(ab.second)) * k;
        for (const auto& [c, k] : lambda_of(t).terms()) rhs_rho += qsym_rho(c) * k;
        check_eq(out, t.str() + " rho", lhs_rho, rhs_rho);
    });
    return run.finish();
}

inline CheckReport suite_wlambda_morphism(const CheckOptions& opts) {
    SuiteRun run("wlambda-morphism");
    std::size_t count = 0;
    for (int n1 = 0; n1 <= opts.n; ++n1)
        for (int n2 = 0; n1 + n2 <= opts.n; ++n2)
            for (const auto& t1 : labeled_topologies(n1))
                for (const auto& t2 : labeled_topologies(n2)) {
                    ++count;
                    LabeledTop a{t1}, b{t2};
                    LinComb<PackedWord> rhs =
                        bilinear(Lambda_map(a), Lambda_map(b),
                                 [](const PackedWord& u, const PackedWord& v) {
                                     return wqsym_product(u, v);
                                 });
                    run.expect_eq("Lambda(" + a.str() + " . " + b.str() + ")",
                                  Lambda_map(ht_product(a, b)), rhs);
                }
    run.add_instances(count);
    return run.finish();
}

inline CheckReport suite_wlambda_coproducts(const CheckOptions& opts) {
    SuiteRun run("wlambda-coproducts");
    using PP = std::pair<PackedWord, PackedWord>;
    over_topologies(run, opts, opts.n, [&](const QPoset& t, std::vector<CheckFailure>& out) {
        LabeledTop a{t};
        LinComb<PP> lhs_delta, rhs_delta, lhs_rho, rhs_rho;
        for (const auto& [ab, k] : ht_delta(a).terms())
            lhs_delta += tensor(Lambda_map(ab.first), Lambda_map(ab.second)) * k;
        for (const auto& [w, k] : Lambda_map(a).terms()) rhs_delta += wqsym_delta(w) * k;
        check_eq(out, a.str() + " delta", lhs_delta, rhs_delta);
        for (const auto& [ab, k] : gamma_ht(a).terms())
            lhs_rho += tensor(Lambda_map(ab.first), Lambda_map(ab.second)) * k;
        for (const auto& [w, k] : Lambda_map(a).terms()) rhs_rho += wqsym_rho(w) * k;
        check_eq(out, a.str() + " rho", lhs_rho, rhs_rho);
    });
    return run.finish();
}

// -------------------------------------------------------------------------------------
// mould suites
// -------------------------------------------------------------------------------------

inline Mould seeded_mould(std::uint64_t seed, Rational empty_value) {
    return Mould([seed, empty_value](const Seq& w) {
        if (w.empty()) return empty_value;
        std::vector<std::uint8_t> bytes;
        for (int e : w.entries()) bytes.push_back(static_cast<std::uint8_t>(e));
        return detail::hashed_rational(detail::fnv1a(bytes, seed));
    });
}

inline CheckReport suite_mould_laws(const CheckOptions& opts) {
    SuiteRun run("mould-laws");
    auto seqs = detail::seqs_up_to(opts.mould_len, opts.mould_norm);
    Mould m = seeded_mould(opts.seed, Rational(1, 2));
    Mould n = seeded_mould(opts.seed + 1, Rational(3));
    Mould p = seeded_mould(opts.seed + 2, Rational(-2, 5));
    Mould one = mould_one(), ident = mould_identity();

    auto expect_equal_moulds = [&](const std::string& what, const Mould& a, const Mould& b,
                                   bool skip_empty = false) {
        for (const auto& w : seqs) {
            if (skip_empty && w.empty()) continue;
            if (a(w) != b(w)) {
                run.fail(what + " at " + w.str(), a(w).str(), b(w).str());
                return;
            }
        }
    };
    run.add_instances(12);
    expect_equal_moulds("M x 1 = M", mould_product(m, one), m);
    expect_equal_moulds("1 x M = M", mould_product(one, m), m);
    expect_equal_moulds("(M x N) x P = M x (N x P)", mould_product(mould_product(m, n), p),
                        mould_product(m, mould_product(n, p)));
    expect_equal_moulds("M o I = M", mould_compose(m, ident), m);
    expect_equal_moulds("I o N = N (nonempty)", mould_compose(ident, n), n, true);
    expect_equal_moulds("(M o N) o P = M o (N o P)",
                        mould_compose(mould_compose(m, n), p),
                        mould_compose(m, mould_compose(n, p)));
    expect_equal_moulds("(M + N) x P", mould_product(mould_add(m, n), p),
                        mould_add(mould_product(m, p), mould_product(n, p)));
    expect_equal_moulds("P x (M + N)", mould_product(p, mould_add(m, n)),
                        mould_add(mould_product(p, m), mould_product(p, n)));
    expect_equal_moulds("(M + N) o P", mould_compose(mould_add(m, n), p),
                        mould_add(mould_compose(m, p), mould_compose(n, p)));
    expect_equal_moulds("(M x N) o P", mould_compose(mould_product(m, n), p),
                        mould_product(mould_compose(m, p), mould_compose(n, p)));
    {
        Mould alt = length_one_mould([](int k) { return Rational(1, k); });
        expect_equal_moulds("log(exp(A)) = A", log_mould(exp_mould(alt)), alt);
        Mould m1 = seeded_mould(opts.seed + 3, Rational(1));
        expect_equal_moulds("exp(log(M)) = M", exp_mould(log_mould(m1)), m1);
    }
    // (M x N)^empty = M^empty N^empty
    run.add_instances(1);
    run.expect("(M x N)^() ", mould_product(m, n)(Seq()) == m(Seq()) * n(Seq()));
    // shuffle counts
    run.add_instances(3);
    run.expect("|Sh((a),(b))|", shuffles(Seq({1}), Seq({2})).size() == 2);
    run.expect("|QSh((a),(b))|", quasi_shuffles(Seq({1}), Seq({2})).size() == 3);
    run.expect("|Sh| lengths (2,1)", shuffles(Seq({1, 2}), Seq({3})).size() == 3);
    return run.finish();
}

inline CheckReport suite_mould_stability(const CheckOptions& opts) {
    SuiteRun run("mould-stability");
    SymCaps caps{opts.mould_len, opts.mould_norm};

    // constructed families
    Mould a1 = length_one_mould([](int k) { return Rational(1, k); });
    Mould a2 = length_one_mould([](int k) { return Rational(k); });
    Mould bracket = mould_sub(mould_product(a1, a2), mould_product(a2, a1));
    Mould s1 = exp_mould(a1);
    Mould s2 = exp_mould(mould_add(a2, bracket));
    Mould e1 = monomial_character({Rational(1, 2)});
    Mould e2 = monomial_character({Rational(1, 3), Rational(2)});
    Mould l1 = log_mould(e1);
    Mould l2 = log_mould(e2);

    run.add_instances(8);
    run.expect("alternal family A1", is_alternal(a1, caps));
    run.expect("alternal family bracket", is_alternal(bracket, caps));
    run.expect("symmetral family exp(A1)", is_symmetral(s1, caps));
    run.expect("symmetral family exp(A2+bracket)", is_symmetral(s2, caps));
    run.expect("symmetrel family monomial(1 letter)", is_symmetrel(e1, caps));
    run.expect("symmetrel family monomial(2 letters)", is_symmetrel(e2, caps));
    run.expect("alternel family log(E1)", is_alternel(l1, caps));
    run.expect("alternel family log(E2)", is_alternel(l2, caps));

    run.add_instances(10);
    run.expect("1. symmetral x symmetral = symmetral", is_symmetral(mould_product(s1, s2), caps));
    run.expect("2. symmetrel x symmetrel = symmetrel", is_symmetrel(mould_product(e1, e2), caps));
    run.expect("3. alternal o alternal = alternal", is_alternal(mould_compose(a1, a2), caps));
    run.expect("4. symmetral o alternal = symmetral", is_symmetral(mould_compose(s1, a2), caps));
    run.expect("5. symmetrel o symmetral = symmetral", is_symmetral(mould_compose(e1, s1), caps));
    run.expect("6. alternel o symmetral = alternal", is_alternal(mould_compose(l1, s1), caps));
    run.expect("7. alternal o alternel = alternel", is_alternel(mould_compose(a1, l1), caps));
    run.expect("8. symmetral o alternel = symmetrel", is_symmetrel(mould_compose(s1, l2), caps));
    run.expect("9. symmetrel o symmetrel = symmetrel", is_symmetrel(mould_compose(e1, e2), caps));
    run.expect("10. alternel o symmetrel = alternel", is_alternel(mould_compose(l1, e2), caps));
    return run.finish();
}

inline CheckReport suite_char_property(const CheckOptions& opts) {
    SuiteRun run("char-property");
    const int cap = std::min(opts.n, 4);
    for (AlgebraKind kind : {AlgebraKind::H, AlgebraKind::HT}) {
        Character m = random_character(kind, cap, opts.seed);
        Character n = random_character(kind, cap, opts.seed + 17);
        Character prod = char_product(m, n);
        Character comp = char_compose(m, n);
        const char* tag = kind == AlgebraKind::H ? "H" : "HT";
        // direct convolution formula, evaluated without the generator factoring
        auto direct_prod = [&](const QPoset& t) {
            Rational acc(0);
            const QPoset::Mask full = t.full_mask();
            for (QPoset::Mask y : t.open_masks()) {
                QPoset left = t.restrict_mask(full & ~y), right = t.restrict_mask(y);
                if (kind == AlgebraKind::H)
                    acc += m.eval(left) * n.eval(right);
                else
                    acc += m(std_of(left)) * n(std_of(right));
            }
            return acc;
        };
        auto direct_comp = [&](const QPoset& t) {
            Rational acc(0);
            for (const QPoset& tp : admissible_refinements(t))
                acc += n.eval(tp) * m.eval(quotient(t, tp));
            return acc;
        };
        std::size_t count = 0;
        for (int n1 = 0; n1 <= cap; ++n1)
            for (int n2 = 0; n1 + n2 <= cap; ++n2)
                for (const auto& t1 : labeled_topologies(n1))
                    for (const auto& t2 : labeled_topologies(n2)) {
                        ++count;
                        std::map<int, int> shift;
                        for (int i = 1; i <= n2; ++i) shift[i] = n1 + i;
                        QPoset ab = product(t1, t2.relabel(shift));
                        std::string inst = std::string(tag) + " " + t1.str() + " . " + t2.str();
                        run.expect(inst + " (product char)",
                                   direct_prod(ab) == direct_prod(t1) * direct_prod(t2),
                                   direct_prod(ab).str(),
                                   (direct_prod(t1) * direct_prod(t2)).str());
                        run.expect(inst + " (compose char)",
                                   direct_comp(ab) == direct_comp(t1) * direct_comp(t2),
                                   direct_comp(ab).str(),
                                   (direct_comp(t1) * direct_comp(t2)).str());
                    }
        // construction agrees with the direct formula on all elements
        for (int k = 0; k <= cap; ++k)
            for (const auto& t : labeled_topologies(k)) {
                ++count;
                Rational via_char =
                    kind == AlgebraKind::H ? prod.eval(t) : prod(LabeledTop(t));
                run.expect(std::string(tag) + " factoring (product) " + t.str(),
                           via_char == direct_prod(t), via_char.str(), direct_prod(t).str());
                Rational via_comp =
                    kind == AlgebraKind::H ? comp.eval(t) : comp(LabeledTop(t));
                run.expect(std::string(tag) + " factoring (compose) " + t.str(),
                           via_comp == direct_comp(t), via_comp.str(), direct_comp(t).str());
            }
        run.add_instances(count);
    }
    return run.finish();
}

inline CheckReport suite_char_identities(const CheckOptions& opts) {
    SuiteRun run("char-identities");
    const int cap = std::min(opts.n, 4);
    for (AlgebraKind kind : {AlgebraKind::H, AlgebraKind::HT}) {
        const char* tag = kind == AlgebraKind::H ? "H" : "HT";
        Character m = random_character(kind, cap, opts.seed + 3);
        Character m2 = random_character(kind, cap, opts.seed + 5);
        Character n = random_character(kind, cap, opts.seed + 7);
        Character e = unit_character(kind, cap);
        Character j = j_character(kind, cap);
        Character me = char_product(m, e), em = char_product(e, m);
        Character mj = char_compose(m, j), jn = char_compose(j, n);
        Character lhs12 = char_compose(char_product(m, m2), n);
        Character rhs12 = char_product(char_compose(m, n), char_compose(m2, n));
        std::size_t count = 0;
        for (int k = 0; k <= cap; ++k)
            for (const auto& t : labeled_topologies(k)) {
                ++count;
                auto value = [&](const Character& chi) {
                    return kind == AlgebraKind::H ? chi.eval(t) : chi(LabeledTop(t));
                };
                std::string inst = std::string(tag) + " " + t.str();
                run.expect(inst + " M.e = M", value(me) == value(m), value(me).str(), value(m).str());
                run.expect(inst + " e.M = M", value(em) == value(m), value(em).str(), value(m).str());
                run.expect(inst + " M o J = M", value(mj) == value(m), value(mj).str(), value(m).str());
                run.expect(inst + " J o N = N", value(jn) == value(n), value(jn).str(), value(n).str());
                // distributivity of composition over convolution belongs to the
                // commutative algebra; on labeled topologies it fails together
                // with the standardized compatibility diagram
                if (kind == AlgebraKind::H)
                    run.expect(inst + " (M1 M2) o N = (M1 o N)(M2 o N)", value(lhs12) == value(rhs12),
                               value(lhs12).str(), value(rhs12).str());
            }
        run.add_instances(count);
    }
    return run.finish();
}

inline CheckReport suite_qp_morphism(const CheckOptions& opts) {
    SuiteRun run("qp-morphism");
    const int cap = std::min(opts.n, 4);
    QSymFunctional phi = functional_of_mould(monomial_character({Rational(1, 2)}));
    QSymFunctional psi = functional_of_mould(monomial_character({Rational(1, 3), Rational(2)}));
    Character q_phi = quasi_posetization(phi, cap);
    Character q_psi = quasi_posetization(psi, cap);
    Character q_conv = quasi_posetization(qsym_convolution(phi, psi), cap);
    Character q_comp = quasi_posetization(qsym_composition(phi, psi), cap);
    Character conv_q = char_product(q_phi, q_psi);
    Character comp_q = char_compose(q_phi, q_psi);
    for (int n = 0; n <= cap; ++n) {
        auto classes = all_iso_classes(n);
        run.size_layer(n, classes.size());
        for (const auto& c : classes) {
            run.expect("Q(phi.psi) = Q(phi).Q(psi) at " + c.str(), q_conv(c) == conv_q(c),
                       q_conv(c).str(), conv_q(c).str());
            run.expect("Q(phi o psi) = Q(phi) o Q(psi) at " + c.str(), q_comp(c) == comp_q(c),
                       q_comp(c).str(), comp_q(c).str());
            // the defining pullback
            run.expect("Q(phi) = phi o lambda at " + c.str(),
                       q_phi(c) == phi.eval_lin(lambda_map(c)), q_phi(c).str(),
                       phi.eval_lin(lambda_map(c)).str());
        }
    }
    return run.finish();
}

// -------------------------------------------------------------------------------------
// registry
// -------------------------------------------------------------------------------------

inline const std::vector<std::pair<std::string, std::function<CheckReport(const CheckOptions&)>>>&
check_registry() {
    static const std::vector<std::pair<std::string, std::function<CheckReport(const CheckOptions&)>>>
        reg = {
            {"closure-soundness", suite_closure_soundness},
            {"quotient-duality", suite_quotient_duality},
            {"lemma-shrink", suite_lemma_shrink},
            {"lemma-classes", suite_lemma_classes},
            {"lemma-components", suite_lemma_components},
            {"admissible-transitivity", suite_admissible_transitivity},
            {"transit-bijection", suite_transit_bijection},
            {"admissible-duality", suite_admissible_duality},
            {"admissible-structure", suite_admissible_structure},
            {"dsl-roundtrip", suite_dsl_roundtrip},
            {"lincomb-axioms", suite_lincomb_axioms},
            {"gamma-coassoc", suite_gamma_coassoc},
            {"gamma-counit", suite_gamma_counit},
            {"gamma-product", suite_gamma_product},
            {"delta-coassoc", suite_delta_coassoc},
            {"delta-mult", suite_delta_mult},
            {"internal-external", suite_internal_external},
            {"restrict-quotient", suite_restrict_quotient},
            {"gamma-grading", suite_gamma_grading},
            {"gamma-duality", suite_gamma_duality},
            {"h-hopf", suite_h_hopf},
            {"antipode", suite_antipode},
            {"ht-algebra", suite_ht_algebra},
            {"ht-compat-counterexample", suite_ht_compat_counterexample},
            {"fubini-counts", suite_fubini_counts},
            {"topology-counts", suite_topology_counts},
            {"sc-bialgebra", suite_sc_bialgebra},
            {"theoextension-product", suite_theoextension_product},
            {"theoextension-delta", suite_theoextension_delta},
            {"theoextension-rho", suite_theoextension_rho},
            {"L-surjectivity", suite_l_surjectivity},
            {"L-restriction", suite_l_restriction},
            {"qsym-wqsym-axioms", suite_qsym_wqsym_axioms},
            {"lambda-morphism", suite_lambda_morphism},
            {"lambda-coproducts", suite_lambda_coproducts},
            {"wlambda-morphism", suite_wlambda_morphism},
            {"wlambda-coproducts", suite_wlambda_coproducts},
            {"mould-laws", suite_mould_laws},
            {"mould-stability", suite_mould_stability},
            {"char-property", suite_char_property},
            {"char-identities", suite_char_identities},
            {"qp-morphism", suite_qp_morphism},
        };
    return reg;
}

inline std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : check_registry()) names.push_back(name);
    return names;
}

inline CheckReport run_check(const std::string& name, const CheckOptions& opts) {
    for (const auto& [n, fn] : check_registry())
        if (n == name) return fn(opts);
    throw InputError("unknown suite '" + name + "'");
}

inline std::vector<CheckReport> run_all(const CheckOptions& opts) {
    std::vector<CheckReport> out;
    for (const auto& [name, fn] : check_registry()) out.push_back(fn(opts));
    return out;
}

} // namespace checks

using checks::check_names;
using checks::check_registry;
using checks::run_all;
using checks::run_check;

} // namespace qtop
