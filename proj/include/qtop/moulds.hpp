#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qtop/enumerate.hpp"
#include "qtop/lincomb.hpp"
#include "qtop/topalg.hpp"
#include "qtop/wordalg.hpp"

namespace qtop {

/// Finite sequence over the additive semigroup of positive integers.
class Seq {
public:
    Seq() = default;
    explicit Seq(std::vector<int> entries) : entries_(std::move(entries)) {
        for (int e : entries_)
            if (e < 1) throw InputError("Seq: entries must be positive");
    }

    std::size_t length() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    int norm() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }
    const std::vector<int>& entries() const { return entries_; }

    Seq prefix(std::size_t i) const {
        return Seq(std::vector<int>(entries_.begin(), entries_.begin() + i));
    }
    Seq suffix(std::size_t i) const {
        return Seq(std::vector<int>(entries_.begin() + i, entries_.end()));
    }
    Seq sub(std::size_t from, std::size_t len) const {
        return Seq(std::vector<int>(entries_.begin() + from, entries_.begin() + from + len));
    }

    friend bool operator==(const Seq& a, const Seq& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const Seq& a, const Seq& b) { return !(a == b); }
    friend bool operator<(const Seq& a, const Seq& b) { return a.entries_ < b.entries_; }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) os << ",";
            os << entries_[i];
        }
        os << ")";
        return os.str();
    }

private:
    std::vector<int> entries_;
};

/// Total rational-valued function on sequences, with a memo table. The memo is
/// transparent (the evaluation function must be pure) and internally
/// synchronized, so moulds can be shared across threads.
class Mould {
public:
    explicit Mould(std::function<Rational(const Seq&)> fn)
        : state_(std::make_shared<State>(std::move(fn))) {}

    Rational operator()(const Seq& w) const {
        {
            std::lock_guard<std::mutex> lock(state_->mu);
            if (auto it = state_->memo.find(w); it != state_->memo.end()) return it->second;
        }
        Rational v = state_->fn(w);
        std::lock_guard<std::mutex> lock(state_->mu);
        state_->memo.emplace(w, v);
        return v;
    }

private:
    struct State {
        explicit State(std::function<Rational(const Seq&)> f) : fn(std::move(f)) {}
        std::function<Rational(const Seq&)> fn;
        std::map<Seq, Rational> memo;
        std::mutex mu;
    };
    std::shared_ptr<State> state_;
};

/// Unit for the mould product: 1 on the empty sequence, 0 elsewhere.
inline Mould mould_one() {
    return Mould([](const Seq& w) { return Rational(w.empty() ? 1 : 0); });
}

/// Identity for composition: 1 on length-one sequences, 0 elsewhere.
inline Mould mould_identity() {
    return Mould([](const Seq& w) { return Rational(w.length() == 1 ? 1 : 0); });
}

inline Mould mould_zero() {
    return Mould([](const Seq&) { return Rational(0); });
}

/// Mould supported on length-one sequences, with value f(entry).
inline Mould length_one_mould(std::function<Rational(int)> f) {
    return Mould([f = std::move(f)](const Seq& w) {
        return w.length() == 1 ? f(w.entries()[0]) : Rational(0);
    });
}

inline Mould mould_add(const Mould& m, const Mould& n) {
    return Mould([m, n](const Seq& w) { return m(w) + n(w); });
}
inline Mould mould_sub(const Mould& m, const Mould& n) {
    return Mould([m, n](const Seq& w) { return m(w) - n(w); });
}
inline Mould mould_scale(const Rational& s, const Mould& m) {
    return Mould([s, m](const Seq& w) { return s * m(w); });
}

/// Deconcatenation pairing: (M x N)^w = sum over prefix/suffix splits.
inline Mould mould_product(const Mould& m, const Mould& n) {
    return Mould([m, n](const Seq& w) {
        Rational acc(0);
        for (std::size_t i = 0; i <= w.length(); ++i) acc += m(w.prefix(i)) * n(w.suffix(i));
        return acc;
    });
}

/// Composition: sum over block decompositions of w, M applied to the block
/// norms and N to each block. On the empty sequence this is M(empty).
inline Mould mould_compose(const Mould& m, const Mould& n) {
    return Mould([m, n](const Seq& w) {
        if (w.empty()) return m(w);
        Rational acc(0);
        for (const auto& parts : detail::int_compositions(static_cast<int>(w.length()))) {
            std::vector<int> norms;
            Rational prod(1);
            std::size_t at = 0;
            for (int p : parts) {
                Seq block = w.sub(at, p);
                norms.push_back(block.norm());
                prod *= n(block);
                at += p;
            }
            acc += m(Seq(std::move(norms))) * prod;
        }
        return acc;
    });
}

/// Interleavings of two sequences, as a multiset (duplicates kept).
inline std::vector<Seq> shuffles(const Seq& a, const Seq& b) {
    std::vector<Seq> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == a.length() && j == b.length()) {
            out.push_back(Seq(cur));
            return;
        }
        if (i < a.length()) {
            cur.push_back(a.entries()[i]);
            self(self, i + 1, j);
            cur.pop_back();
        }
        if (j < b.length()) {
            cur.push_back(b.entries()[j]);
            self(self, i, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Interleavings plus contractions: at a meeting point one entry of a and one
/// of b may merge into their sum.
inline std::vector<Seq> quasi_shuffles(const Seq& a, const Seq& b) {
    std::vector<Seq> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == a.length() && j == b.length()) {
            out.push_back(Seq(cur));
            return;
        }
        if (i < a.length()) {
            cur.push_back(a.entries()[i]);
            self(self, i + 1, j);
            cur.pop_back();
        }
        if (j < b.length()) {
            cur.push_back(b.entries()[j]);
            self(self, i, j + 1);
            cur.pop_back();
        }
        if (i < a.length() && j < b.length()) {
            cur.push_back(a.entries()[i] + b.entries()[j]);
            self(self, i + 1, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Caps bounding the exhaustive symmetry checks: pairs of nonempty sequences
/// with total length <= max_length and total norm <= max_norm.
struct SymCaps {
    int max_length = 4;
    int max_norm = 8;
};

namespace detail {

inline std::vector<Seq> seqs_up_to(int max_length, int max_norm) {
    std::vector<Seq> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int len_left, int norm_left) -> void {
        out.push_back(Seq(cur));
        if (len_left == 0) return;
        for (int e = 1; e <= norm_left; ++e) {
            cur.push_back(e);
            self(self, len_left - 1, norm_left - e);
            cur.pop_back();
        }
    };
    rec(rec, max_length, max_norm);
    std::sort(out.begin(), out.end());
    return out;
}

enum class ShuffleFlavor { plain, quasi };
enum class SymmetryKind { character, infinitesimal };

inline bool mould_symmetry(const Mould& m, SymCaps caps, ShuffleFlavor flavor, SymmetryKind kind) {
    const Rational want_empty(kind == SymmetryKind::character ? 1 : 0);
    if (m(Seq()) != want_empty) return false;
    auto seqs = seqs_up_to(caps.max_length - 1, caps.max_norm - 1);
    for (const auto& w1 : seqs) {
        if (w1.empty()) continue;
        for (const auto& w2 : seqs) {
            if (w2.empty()) continue;
            if (static_cast<int>(w1.length() + w2.length()) > caps.max_length) continue;
            if (w1.norm() + w2.norm() > caps.max_norm) continue;
            auto ws = flavor == ShuffleFlavor::plain ? shuffles(w1, w2) : quasi_shuffles(w1, w2);
            Rational sum(0);
            for (const auto& w : ws) sum += m(w);
            Rational want = kind == SymmetryKind::character ? m(w1) * m(w2) : Rational(0);
            if (sum != want) return false;
        }
    }
    return true;
}

} // namespace detail

inline bool is_symmetral(const Mould& m, SymCaps caps = {}) {
    return detail::mould_symmetry(m, caps, detail::ShuffleFlavor::plain,
                                  detail::SymmetryKind::character);
}
inline bool is_alternal(const Mould& m, SymCaps caps = {}) {
    return detail::mould_symmetry(m, caps, detail::ShuffleFlavor::plain,
                                  detail::SymmetryKind::infinitesimal);
}
inline bool is_symmetrel(const Mould& m, SymCaps caps = {}) {
    return detail::mould_symmetry(m, caps, detail::ShuffleFlavor::quasi,
                                  detail::SymmetryKind::character);
}
inline bool is_alternel(const Mould& m, SymCaps caps = {}) {
    return detail::mould_symmetry(m, caps, detail::ShuffleFlavor::quasi,
                                  detail::SymmetryKind::infinitesimal);
}

/// Exponential for the mould product; the sum over k of A^(x k)/k! collapses to
/// a finite sum over block decompositions. Requires A(empty) = 0.
inline Mould exp_mould(const Mould& a) {
    if (a(Seq()) != Rational(0)) throw DomainError("exp_mould: argument must vanish on the empty sequence");
    return Mould([a](const Seq& w) {
        if (w.empty()) return Rational(1);
        Rational acc(0);
        for (const auto& parts : detail::int_compositions(static_cast<int>(w.length()))) {
            Rational prod(1);
            std::size_t at = 0;
            for (int p : parts) {
                prod *= a(w.sub(at, p));
                at += p;
            }
            acc += prod / factorial(static_cast<int>(parts.size()));
        }
        return acc;
    });
}

/// Logarithm for the mould product, inverse of exp_mould. Requires M(empty) = 1.
inline Mould log_mould(const Mould& m) {
    if (m(Seq()) != Rational(1)) throw DomainError("log_mould: argument must be 1 on the empty sequence");
    return Mould([m](const Seq& w) {
        if (w.empty()) return Rational(0);
        Rational acc(0);
        for (const auto& parts : detail::int_compositions(static_cast<int>(w.length()))) {
            Rational prod(1);
            std::size_t at = 0;
            for (int p : parts) {
                prod *= m(w.sub(at, p));
                at += p;
            }
            const int s = static_cast<int>(parts.size());
            Rational coeff = Rational(s % 2 == 1 ? 1 : -1) / Rational(s);
            acc += coeff * prod;
        }
        return acc;
    });
}

/// Monomial quasi-symmetric function evaluated on a finite ordered alphabet:
/// M^(c_1..c_k) = sum over increasing index tuples of x_{i_1}^{c_1}..x_{i_k}^{c_k}.
/// Symmetrel by the quasi-shuffle identity.
inline Mould monomial_character(const std::vector<Rational>& alphabet) {
    for (std::size_t i = 0; i + 1 < alphabet.size(); ++i)
        if (!(alphabet[i] < alphabet[i + 1]))
            throw InputError("monomial_character: alphabet must be strictly increasing");
    return Mould([alphabet](const Seq& w) {
        const int k = static_cast<int>(w.length());
        const int m = static_cast<int>(alphabet.size());
        // acc[j] = sum over increasing tuples ending at index j
        Rational total(0);
        std::vector<Rational> acc(m, Rational(0));
        if (k == 0) return Rational(1);
        for (int pos = 0; pos < k; ++pos) {
            std::vector<Rational> next(m, Rational(0));
            for (int j = 0; j < m; ++j) {
                Rational below(0);
                if (pos == 0) {
                    below = Rational(1);
                } else {
                    for (int i = 0; i < j; ++i) below += acc[i];
                }
                next[j] = below * pow(alphabet[j], w.entries()[pos]);
            }
            acc = std::move(next);
        }
        for (int j = 0; j < m; ++j) total += acc[j];
        return total;
    });
}

// ---------------------------------------------------------------------------------------------
// Characters of H and H_T (constant-type quasi-ormoulds)
// ---------------------------------------------------------------------------------------------

enum class AlgebraKind { H, HT };

/// Multiplicative linear functional on H or H_T, stored by its values on the
/// free generators up to a size cap (connected classes for H, interval-
/// irreducible labeled topologies for H_T) and extended multiplicatively; the
/// value on the empty topology is 1.
class Character {
public:
    static Character on_h(int cap, const std::function<Rational(const IsoClass&)>& gen_value) {
        Character chi(AlgebraKind::H, cap);
        for (const auto& g : connected_iso_classes(cap)) chi.h_values_[g] = gen_value(g);
        return chi;
    }

    static Character on_ht(int cap, const std::function<Rational(const LabeledTop&)>& gen_value) {
        Character chi(AlgebraKind::HT, cap);
        for (const auto& g : irreducible_labeled(cap)) chi.ht_values_[g] = gen_value(g);
        return chi;
    }

    AlgebraKind kind() const { return kind_; }
    int cap() const { return cap_; }

    Rational operator()(const IsoClass& c) const {
        if (kind_ != AlgebraKind::H) throw InputError("Character: H value requested from an H_T character");
        Rational prod(1);
        for (const auto& comp : c.rep().connected_components().blocks)
            prod *= generator_value_h(iso_of(c.rep().restrict_to(comp)));
        return prod;
    }

    Rational operator()(const LabeledTop& a) const {
        if (kind_ != AlgebraKind::HT) throw InputError("Character: H_T value requested from an H character");
        Rational prod(1);
        for (const auto& f : interval_factors(a)) prod *= generator_value_ht(f);
        return prod;
    }

    /// Evaluates on a raw topology: through its class for H, through the
    /// standard labels for H_T (atoms must already be {1,..,n}).
    Rational eval(const QPoset& t) const {
        return kind_ == AlgebraKind::H ? (*this)(iso_of(t)) : (*this)(LabeledTop(t));
    }

    Rational eval_lin(const LinComb<IsoClass>& x) const {
        Rational acc(0);
        for (const auto& [b, c] : x.terms()) acc += c * (*this)(b);
        return acc;
    }

private:
    Character(AlgebraKind k, int cap) : kind_(k), cap_(cap) {}

    Rational generator_value_h(const IsoClass& g) const {
        if (g.n() > cap_)
            throw ResourceError("Character: component of size " + std::to_string(g.n()) +
                                " exceeds the cap " + std::to_string(cap_));
        auto it = h_values_.find(g);
        return it == h_values_.end() ? Rational(0) : it->second;
    }
    Rational generator_value_ht(const LabeledTop& g) const {
        if (g.n() > cap_)
            throw ResourceError("Character: factor of size " + std::to_string(g.n()) +
                                " exceeds the cap " + std::to_string(cap_));
        auto it = ht_values_.find(g);
        return it == ht_values_.end() ? Rational(0) : it->second;
    }

    AlgebraKind kind_;
    int cap_;
    std::map<IsoClass, Rational> h_values_;
    std::map<LabeledTop, Rational> ht_values_;
};

/// Unit of the convolution product: 1 on the empty topology, 0 elsewhere.
inline Character unit_character(AlgebraKind kind, int cap) {
    return kind == AlgebraKind::H
               ? Character::on_h(cap, [](const IsoClass&) { return Rational(0); })
               : Character::on_ht(cap, [](const LabeledTop&) { return Rational(0); });
}

/// Two-sided identity for composition: the indicator of group-like topologies.
inline Character j_character(AlgebraKind kind, int cap) {
    return kind == AlgebraKind::H
               ? Character::on_h(cap, [](const IsoClass& g) {
                     return Rational(g.rep().is_group_like() ? 1 : 0);
                 })
               : Character::on_ht(cap, [](const LabeledTop& g) {
                     return Rational(g.top().is_group_like() ? 1 : 0);
                 });
}

namespace detail {

inline std::uint64_t fnv1a(const std::vector<std::uint8_t>& bytes, std::uint64_t seed) {
    std::uint64_t h = 1469598103934665603ull ^ (seed * 0x9e3779b97f4a7c15ull);
    for (auto b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    return h;
}

inline Rational hashed_rational(std::uint64_t h) {
    long num = static_cast<long>(h % 9) - 4;        // -4..4
    long den = static_cast<long>((h >> 8) % 3) + 1; // 1..3
    return Rational(num, den);
}

} // namespace detail

/// Deterministic pseudo-random character: generator values derived from the
/// seed and the generator's canonical encoding.
inline Character random_character(AlgebraKind kind, int cap, std::uint64_t seed) {
    if (kind == AlgebraKind::H)
        return Character::on_h(cap, [seed](const IsoClass& g) {
            return detail::hashed_rational(detail::fnv1a(g.key(), seed));
        });
    return Character::on_ht(cap, [seed](const LabeledTop& g) {
        // hash the raw labeled relation, not the canonical key: homeomorphic
        // generators with different labels must get independent values
        auto enc = detail::encode_rows(g.n(), g.top().rows());
        return detail::hashed_rational(detail::fnv1a(enc, seed * 0x100000001b3ull + 7));
    });
}

/// Convolution along the external coproduct: (M.N)(T) = sum over open Y of
/// M(T restricted to the complement) N(T restricted to Y).
inline Character char_product(const Character& m, const Character& n) {
    if (m.kind() != n.kind() || m.cap() != n.cap())
        throw InputError("char_product: characters live on different algebras");
    const int cap = m.cap();
    if (m.kind() == AlgebraKind::H)
        return Character::on_h(cap, [&](const IsoClass& g) {
            Rational acc(0);
            const QPoset& rep = g.rep();
            const QPoset::Mask full = rep.full_mask();
            for (QPoset::Mask y : rep.open_masks())
                acc += m.eval(rep.restrict_mask(full & ~y)) * n(iso_of(rep.restrict_mask(y)));
            return acc;
        });
    return Character::on_ht(cap, [&](const LabeledTop& g) {
        Rational acc(0);
        for (const auto& [legs, coeff] : ht_delta(g).terms())
            acc += coeff * m(legs.first) * n(legs.second);
        return acc;
    });
}

/// Composition along the internal coproduct: (M o N)(T) = sum over admissible
/// refinements T' of N(T') M(T/T'). N sees the fine leg (and evaluates
/// multiplicatively over its components), M the quotient.
inline Character char_compose(const Character& m, const Character& n) {
    if (m.kind() != n.kind() || m.cap() != n.cap())
        throw InputError("char_compose: characters live on different algebras");
    const int cap = m.cap();
    auto value_on = [&](const QPoset& t) {
        Rational acc(0);
        for (const QPoset& tp : admissible_refinements(t))
            acc += n.eval(tp) * m.eval(quotient(t, tp));
        return acc;
    };
    if (m.kind() == AlgebraKind::H)
        return Character::on_h(cap, [&](const IsoClass& g) { return value_on(g.rep()); });
    return Character::on_ht(cap, [&](const LabeledTop& g) { return value_on(g.top()); });
}

// ---------------------------------------------------------------------------------------------
// Quasi-posetization
// ---------------------------------------------------------------------------------------------

/// Linear functional on QSym given by its values on the monomial basis.
class QSymFunctional {
public:
    explicit QSymFunctional(std::function<Rational(const Composition&)> fn) : fn_(std::move(fn)) {}

    Rational operator()(const Composition& c) const { return fn_(c); }

    Rational eval_lin(const LinComb<Composition>& x) const {
        Rational acc(0);
        for (const auto& [b, c] : x.terms()) acc += c * fn_(b);
        return acc;
    }

private:
    std::function<Rational(const Composition&)> fn_;
};

/// The functional of a mould on sequences of parts (monomial characters of
/// QSym arise this way from symmetrel moulds).
inline QSymFunctional functional_of_mould(const Mould& m) {
    return QSymFunctional([m](const Composition& c) { return m(Seq(c.parts())); });
}

/// Convolution of QSym functionals along the deconcatenation coproduct.
inline QSymFunctional qsym_convolution(const QSymFunctional& phi, const QSymFunctional& psi) {
    return QSymFunctional([phi, psi](const Composition& c) {
        Rational acc(0);
        for (const auto& [legs, coeff] : qsym_delta(c).terms())
            acc += coeff * phi(legs.first) * psi(legs.second);
        return acc;
    });
}

/// Composition of QSym functionals along the internal coproduct: psi sees the
/// fine (product) leg, phi the merged leg.
inline QSymFunctional qsym_composition(const QSymFunctional& phi, const QSymFunctional& psi) {
    return QSymFunctional([phi, psi](const Composition& c) {
        Rational acc(0);
        for (const auto& [legs, coeff] : qsym_rho(c).terms())
            acc += coeff * psi(legs.first) * phi(legs.second);
        return acc;
    });
}

namespace detail {

inline std::vector<Composition> compositions_up_to_weight(int max_weight) {
    std::vector<Composition> out;
    for (int w = 0; w <= max_weight; ++w)
        for (const auto& parts : int_compositions(w)) out.push_back(Composition(parts));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// Checks multiplicativity of a QSym functional with respect to the
/// quasi-shuffle product, for all pairs of compositions of total weight <= cap.
inline bool is_multiplicative(const QSymFunctional& phi, int cap) {
    auto comps = detail::compositions_up_to_weight(cap);
    for (const auto& c : comps)
        for (const auto& d : comps) {
            if (c.weight() + d.weight() > cap) continue;
            if (phi.eval_lin(qsym_product(c, d)) != phi(c) * phi(d)) return false;
        }
    return true;
}

/// Pullback of a QSym character along the linear-extension morphism: the
/// character on H with value phi(lambda(T)).
inline Character quasi_posetization(const QSymFunctional& phi, int cap) {
    if (!is_multiplicative(phi, cap))
        throw ValidationError("quasi_posetization: functional is not multiplicative up to the cap");
    return Character::on_h(cap, [&phi](const IsoClass& g) { return phi.eval_lin(lambda_map(g)); });
}

} // namespace qtop
