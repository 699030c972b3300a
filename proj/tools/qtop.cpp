// Command-line front end: enumeration, structure computation, the axiom-check
// harness and mould evaluation. All default output is byte-deterministic for a
// fixed invocation and seed; timings are opt-in.

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtop/checks.hpp"
#include "qtop/json_io.hpp"
#include "qtop/moulds.hpp"
#include "qtop/oracles.hpp"

namespace {

using namespace qtop;

QPoset topology_from_arg(const std::string& arg) {
    auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && arg[first] == '{')
        return qposet_from_json(json::parse(arg));
    return parse_dsl(arg);
}

template <typename B1, typename B2>
void print_tensor(const LinComb<std::pair<B1, B2>>& x, bool as_json) {
    if (as_json) {
        std::cout << tensor_to_json(x).dump(2) << "\n";
        return;
    }
    json ordered = tensor_to_json(x); // reuse the canonical ordering
    if (ordered.empty()) {
        std::cout << "0\n";
        return;
    }
    // text rendering walks the same order as the JSON form
    using Term = std::pair<std::pair<B1, B2>, Rational>;
    std::vector<Term> terms(x.terms().begin(), x.terms().end());
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        auto ka = std::make_pair(qtop::detail::tensor_sort_key(a.first.first),
                                 qtop::detail::tensor_sort_key(a.first.second));
        auto kb = std::make_pair(qtop::detail::tensor_sort_key(b.first.first),
                                 qtop::detail::tensor_sort_key(b.first.second));
        if (ka != kb) return ka < kb;
        return a.first < b.first;
    });
    for (const auto& [legs, coeff] : terms)
        std::cout << coeff.str() << " * " << basis_str(legs.first) << " (x) "
                  << basis_str(legs.second) << "\n";
}

template <typename B>
void print_lincomb(const LinComb<B>& x, bool as_json) {
    if (as_json)
        std::cout << lincomb_to_json(x).dump(2) << "\n";
    else
        std::cout << x.str() << "\n";
}

// --- mould expressions -------------------------------------------------------------------

// expr := atom (('*'|'@') atom)*     (left associative, equal precedence)
// atom := 'one' | 'I' | 'exp(f=r1,r2,...)' | 'monomial(x=r1,r2,...)' | '(' expr ')'
class MouldParser {
public:
    explicit MouldParser(std::string text) : text_(std::move(text)) {}

    Mould parse() {
        Mould m = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return m;
    }

private:
    std::string text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw InputError("mould expression error at position " + std::to_string(pos_ + 1) + ": " + msg);
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Mould expr() {
        Mould acc = atom();
        while (true) {
            skip_ws();
            if (eat('*'))
                acc = mould_product(acc, atom());
            else if (eat('@'))
                acc = mould_compose(acc, atom());
            else
                return acc;
        }
    }

    std::vector<Rational> rational_list() {
        std::vector<Rational> out;
        while (true) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '-' || text_[pos_] == '/'))
                ++pos_;
            if (start == pos_) fail("expected rational");
            out.push_back(Rational::parse(text_.substr(start, pos_ - start)));
            if (!eat(',')) break;
        }
        return out;
    }

    Mould atom() {
        skip_ws();
        if (eat('(')) {
            Mould m = expr();
            if (!eat(')')) fail("expected ')'");
            return m;
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name == "one") return mould_one();
        if (name == "I") return mould_identity();
        if (name == "zero") return mould_zero();
        if (name == "exp") {
            if (!eat('(')) fail("expected '(' after exp");
            skip_ws();
            if (text_.compare(pos_, 2, "f=") != 0) fail("expected f=");
            pos_ += 2;
            auto values = rational_list();
            if (!eat(')')) fail("expected ')'");
            return exp_mould(length_one_mould([values](int k) {
                return k >= 1 && k <= static_cast<int>(values.size()) ? values[k - 1] : Rational(0);
            }));
        }
        if (name == "monomial") {
            if (!eat('(')) fail("expected '(' after monomial");
            skip_ws();
            if (text_.compare(pos_, 2, "x=") != 0) fail("expected x=");
            pos_ += 2;
            auto values = rational_list();
            if (!eat(')')) fail("expected ')'");
            return monomial_character(values);
        }
        fail("unknown mould '" + name + "'");
    }
};

std::pair<int, int> parse_caps(const std::string& caps) {
    auto comma = caps.find(',');
    if (comma == std::string::npos) throw InputError("--caps expects len,norm");
    return {std::stoi(caps.substr(0, comma)), std::stoi(caps.substr(comma + 1))};
}

void print_report(const CheckReport& rep, bool timings, std::size_t max_failures = 10) {
    std::cout << (rep.pass() ? "[PASS] " : "[FAIL] ") << rep.suite << ": " << rep.instances
              << " instances";
    if (!rep.per_size.empty()) {
        std::cout << " (";
        for (std::size_t i = 0; i < rep.per_size.size(); ++i) {
            if (i) std::cout << " ";
            std::cout << "n" << rep.per_size[i].first << ":" << rep.per_size[i].second;
        }
        std::cout << ")";
    }
    if (!rep.failures.empty()) std::cout << ", " << rep.failures.size() << " failures";
    if (timings) std::cout << " [" << std::fixed << std::setprecision(2) << rep.seconds << "s]";
    std::cout << "\n";
    for (std::size_t i = 0; i < rep.failures.size() && i < max_failures; ++i) {
        const auto& f = rep.failures[i];
        std::cout << "  at " << f.instance << "\n    lhs: " << f.lhs << "\n    rhs: " << f.rhs << "\n";
    }
    if (rep.failures.size() > max_failures)
        std::cout << "  ... and " << (rep.failures.size() - max_failures) << " more\n";
}

json report_to_json(const CheckReport& rep, bool timings) {
    json j{{"suite", rep.suite},
           {"instances", rep.instances},
           {"pass", rep.pass()},
           {"failures", json::array()}};
    for (const auto& [n, k] : rep.per_size) j["per_size"][std::to_string(n)] = k;
    for (const auto& f : rep.failures)
        j["failures"].push_back(json{{"instance", f.instance}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    if (timings) j["seconds"] = rep.seconds;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for finite topologies: coproducts, linear extensions, moulds"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "count (and list) small structures");
    int enum_n = 3;
    std::string enum_kind = "topologies";
    bool enum_list = false;
    cmd_enum->add_option("--n", enum_n, "ground-set size")->check(CLI::Range(0, 5));
    cmd_enum->add_option("--kind", enum_kind, "topologies | set-compositions | iso-classes")
        ->check(CLI::IsMember({"topologies", "set-compositions", "iso-classes"}));
    cmd_enum->add_flag("--list", enum_list, "list the structures, not just the count");

    // structure commands
    std::string gamma_in, delta_in, l_in, lambda_in, wlambda_in;
    auto* cmd_gamma = app.add_subcommand("gamma", "internal coproduct of a topology");
    cmd_gamma->add_option("input", gamma_in, "topology (DSL or JSON)")->required();
    auto* cmd_delta = app.add_subcommand("delta", "external coproduct of a topology");
    cmd_delta->add_option("input", delta_in, "topology (DSL or JSON)")->required();
    auto* cmd_l = app.add_subcommand("L", "sum of the linear extensions");
    cmd_l->add_option("input", l_in, "topology (DSL or JSON)")->required();
    auto* cmd_lambda = app.add_subcommand("lambda", "image in QSym (monomial basis)");
    cmd_lambda->add_option("input", lambda_in, "topology (DSL or JSON)")->required();
    auto* cmd_wlambda = app.add_subcommand("wlambda", "image in WQSym (labels must be 1..n)");
    cmd_wlambda->add_option("input", wlambda_in, "topology (DSL or JSON)")->required();

    // mould
    auto* cmd_mould = app.add_subcommand("mould", "evaluate a mould expression over all small sequences");
    std::string mould_expr;
    std::string mould_caps = "4,8";
    cmd_mould->add_option("expr", mould_expr,
                          "built-ins one, I, exp(f=...), monomial(x=...); combine with * and @")
        ->required();
    cmd_mould->add_option("--caps", mould_caps, "len,norm bounds for the value table");

    // check
    auto* cmd_check = app.add_subcommand("check", "run verification suites");
    std::string suite = "all";
    CheckOptions opts;
    std::string check_caps;
    bool timings = false, list_suites = false;
    cmd_check->add_option("suite", suite, "suite name, or 'all'");
    cmd_check->add_option("--n", opts.n, "size cap for exhaustive sweeps")->check(CLI::Range(0, 5));
    cmd_check->add_option("--seed", opts.seed, "seed for randomized instances");
    cmd_check->add_option("--caps", check_caps, "len,norm caps for mould suites");
    cmd_check->add_option("--jobs", opts.jobs, "worker threads (0 = hardware)");
    cmd_check->add_flag("--timings", timings, "print per-suite wall time (breaks byte determinism)");
    cmd_check->add_flag("--list", list_suites, "list available suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_enum) {
            json out;
            std::size_t count = 0;
            std::vector<std::string> listing;
            if (enum_kind == "topologies") {
                const auto& tops = labeled_topologies(enum_n);
                count = tops.size();
                if (enum_list || as_json)
                    for (const auto& t : tops) listing.push_back(print_dsl(t));
            } else if (enum_kind == "set-compositions") {
                auto comps = all_set_compositions(standard_atoms(enum_n));
                count = comps.size();
                if (enum_list || as_json)
                    for (const auto& c : comps) listing.push_back(c.str());
            } else {
                auto classes = all_iso_classes(enum_n);
                count = classes.size();
                if (enum_list || as_json)
                    for (const auto& c : classes) listing.push_back(c.str());
            }
            if (as_json) {
                out = json{{"kind", enum_kind}, {"n", enum_n}, {"count", count}};
                if (enum_list) out["items"] = listing;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << enum_kind << " on " << enum_n << " atoms: " << count << "\n";
                if (enum_list)
                    for (const auto& s : listing) std::cout << "  " << s << "\n";
            }
            return 0;
        }
        if (*cmd_gamma) {
            print_tensor(gamma(topology_from_arg(gamma_in)), as_json);
            return 0;
        }
        if (*cmd_delta) {
            print_tensor(delta(topology_from_arg(delta_in)), as_json);
            return 0;
        }
        if (*cmd_l) {
            print_lincomb(L(topology_from_arg(l_in)), as_json);
            return 0;
        }
        if (*cmd_lambda) {
            print_lincomb(lambda_map(iso_of(topology_from_arg(lambda_in))), as_json);
            return 0;
        }
        if (*cmd_wlambda) {
            print_lincomb(Lambda_map(LabeledTop(topology_from_arg(wlambda_in))), as_json);
            return 0;
        }
        if (*cmd_mould) {
            auto [len, norm] = parse_caps(mould_caps);
            Mould m = MouldParser(mould_expr).parse();
            auto seqs = detail::seqs_up_to(len, norm);
            if (as_json) {
                json out = json::array();
                for (const auto& w : seqs)
                    out.push_back(json{{"seq", to_json(w)}, {"value", m(w).str()}});
                std::cout << out.dump(2) << "\n";
            } else {
                std::size_t width = 0;
                for (const auto& w : seqs) width = std::max(width, w.str().size());
                for (const auto& w : seqs)
                    std::cout << std::left << std::setw(static_cast<int>(width) + 2) << w.str()
                              << m(w).str() << "\n";
            }
            return 0;
        }
        if (*cmd_check) {
            if (list_suites) {
                for (const auto& name : check_names()) std::cout << name << "\n";
                return 0;
            }
            if (!check_caps.empty()) {
                auto [len, norm] = parse_caps(check_caps);
                opts.mould_len = len;
                opts.mould_norm = norm;
            }
            std::vector<CheckReport> reports;
            if (suite == "all") {
                reports = run_all(opts);
            } else {
                bool known = false;
                for (const auto& name : check_names()) known = known || name == suite;
                if (!known) {
                    std::cerr << "unknown suite '" << suite << "'; available suites:\n";
                    for (const auto& name : check_names()) std::cerr << "  " << name << "\n";
                    return 2;
                }
                reports.push_back(run_check(suite, opts));
            }
            bool all_pass = true;
            if (as_json) {
                json out = json::array();
                for (const auto& rep : reports) {
                    out.push_back(report_to_json(rep, timings));
                    all_pass = all_pass && rep.pass();
                }
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& rep : reports) {
                    print_report(rep, timings);
                    all_pass = all_pass && rep.pass();
                }
            }
            return all_pass ? 0 : 1;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
