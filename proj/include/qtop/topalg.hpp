#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtop/lincomb.hpp"
#include "qtop/qposet.hpp"

namespace qtop {

// ---------------------------------------------------------------------------------------------
// Species-level coproducts
// ---------------------------------------------------------------------------------------------

/// Internal coproduct: sum of T' (x) T/T' over admissible refinements T'.
/// Degree-preserving; all coefficients are 1.
inline LinComb<std::pair<QPoset, QPoset>> gamma(const QPoset& t) {
    LinComb<std::pair<QPoset, QPoset>> out;
    for (const QPoset& tp : admissible_refinements(t)) out.add_term({tp, quotient(t, tp)}, 1);
    return out;
}

/// External coproduct: one term per open set Y, restriction to the complement
/// on the left and to Y on the right.
inline LinComb<std::pair<QPoset, QPoset>> delta(const QPoset& t) {
    LinComb<std::pair<QPoset, QPoset>> out;
    const QPoset::Mask full = t.full_mask();
    for (QPoset::Mask y : t.open_masks())
        out.add_term({t.restrict_mask(full & ~y), t.restrict_mask(y)}, 1);
    return out;
}

/// Counit of the internal coproduct: 1 on group-like topologies, 0 otherwise.
inline Rational counit_gamma(const QPoset& t) { return Rational(t.is_group_like() ? 1 : 0); }

// ---------------------------------------------------------------------------------------------
// H: homeomorphism classes
// ---------------------------------------------------------------------------------------------

/// Homeomorphism class of a finite topology. The representative lives on atoms
/// {1,..,n} and carries the canonically minimal relation matrix, so its
/// canonical form is the key itself.
class IsoClass {
public:
    IsoClass() : key_{0} {} // the empty class (unit of H)

    explicit IsoClass(const QPoset& t, int cap = 8) : key_(canonical_form(t, cap)) {
        rep_ = decode(key_);
    }

    int n() const { return static_cast<int>(rep_.size()); }
    const QPoset& rep() const { return rep_; }
    const std::vector<std::uint8_t>& key() const { return key_; }

    friend bool operator==(const IsoClass& a, const IsoClass& b) { return a.key_ == b.key_; }
    friend bool operator!=(const IsoClass& a, const IsoClass& b) { return a.key_ != b.key_; }
    friend bool operator<(const IsoClass& a, const IsoClass& b) { return a.key_ < b.key_; }

    std::string str() const { return n() == 0 ? "1" : "[" + print_dsl(rep_) + "]"; }

private:
    std::vector<std::uint8_t> key_;
    QPoset rep_;

    static QPoset decode(const std::vector<std::uint8_t>& key) {
        const int n = key.empty() ? 0 : key[0];
        AtomSet atoms;
        for (int i = 1; i <= n; ++i) atoms.insert(i);
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
        int bitpos = 0;
        std::size_t byte = 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                leq[i][j] = key[byte] & (1u << bitpos);
                if (++bitpos == 8) {
                    bitpos = 0;
                    ++byte;
                }
            }
        return QPoset::from_leq(atoms, leq);
    }
};

inline IsoClass iso_of(const QPoset& t, int cap = 8) { return IsoClass(t, cap); }

inline LinComb<IsoClass> to_iso(const LinComb<QPoset>& x, int cap = 8) {
    return apply_linear(x, [cap](const QPoset& t) { return LinComb<IsoClass>(iso_of(t, cap)); });
}

/// Product of H: disjoint union of representatives, then forget the labels.
inline IsoClass h_product(const IsoClass& a, const IsoClass& b) {
    std::map<int, int> shift;
    for (int i = 1; i <= b.n(); ++i) shift[i] = a.n() + i;
    return iso_of(product(a.rep(), b.rep().relabel(shift)));
}

inline LinComb<IsoClass> h_product(const LinComb<IsoClass>& a, const LinComb<IsoClass>& b) {
    LinComb<IsoClass> out;
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms()) out.add_term(h_product(x, y), cx * cy);
    return out;
}

inline LinComb<std::pair<IsoClass, IsoClass>> h_delta(const IsoClass& c) {
    return apply_legs(
        delta(c.rep()), [](const QPoset& t) { return LinComb<IsoClass>(iso_of(t)); },
        [](const QPoset& t) { return LinComb<IsoClass>(iso_of(t)); });
}

inline LinComb<std::pair<IsoClass, IsoClass>> h_gamma(const IsoClass& c) {
    return apply_legs(
        gamma(c.rep()), [](const QPoset& t) { return LinComb<IsoClass>(iso_of(t)); },
        [](const QPoset& t) { return LinComb<IsoClass>(iso_of(t)); });
}

/// Antipode of (H, product, delta), by the reduced-coproduct recursion of a
/// graded connected Hopf algebra:
///   S(1) = 1,  S(T) = -T - sum over proper nonempty open Y of S(T|_{X\Y}) * T|_Y.
inline LinComb<IsoClass> antipode_h(const IsoClass& c) {
    if (c.n() == 0) return LinComb<IsoClass>(IsoClass());
    thread_local std::map<IsoClass, LinComb<IsoClass>> memo;
    if (auto it = memo.find(c); it != memo.end()) return it->second;

    const QPoset& rep = c.rep();
    const QPoset::Mask full = rep.full_mask();
    LinComb<IsoClass> acc(c, Rational(-1));
    for (QPoset::Mask y : rep.open_masks()) {
        if (y == 0 || y == full) continue;
        LinComb<IsoClass> left = antipode_h(iso_of(rep.restrict_mask(full & ~y)));
        acc -= h_product(left, LinComb<IsoClass>(iso_of(rep.restrict_mask(y))));
    }
    memo.emplace(c, acc);
    return acc;
}

// ---------------------------------------------------------------------------------------------
// H_T: labeled topologies on {1,..,n}
// ---------------------------------------------------------------------------------------------

/// A topology whose atoms are exactly {1,..,n}.
class LabeledTop {
public:
    LabeledTop() = default;

    explicit LabeledTop(QPoset t) : top_(std::move(t)) {
        for (int i = 0; i < static_cast<int>(top_.size()); ++i)
            if (top_.atoms()[i] != i + 1)
                throw InputError("LabeledTop: atoms must be exactly {1,..,n}");
    }

    int n() const { return static_cast<int>(top_.size()); }
    const QPoset& top() const { return top_; }

    friend bool operator==(const LabeledTop& a, const LabeledTop& b) { return a.top_ == b.top_; }
    friend bool operator!=(const LabeledTop& a, const LabeledTop& b) { return a.top_ != b.top_; }
    friend bool operator<(const LabeledTop& a, const LabeledTop& b) { return a.top_ < b.top_; }

    std::string str() const { return top_.str(); }

private:
    QPoset top_;
};

/// Standardization: transport a topology along the unique increasing bijection
/// from its atoms onto {1,..,n}.
inline LabeledTop std_of(const QPoset& t) {
    std::map<int, int> phi;
    int next = 1;
    for (int a : t.atoms()) phi[a] = next++;
    return LabeledTop(t.relabel(phi));
}

/// Shifted product: b's atoms are moved up by a.n(), open sets are the unions
/// Y u (Y' + n). Noncommutative on labels, homeomorphic to the opposite order.
inline LabeledTop ht_product(const LabeledTop& a, const LabeledTop& b) {
    std::map<int, int> shift;
    for (int i = 1; i <= b.n(); ++i) shift[i] = a.n() + i;
    return LabeledTop(product(a.top(), b.top().relabel(shift)));
}

/// Joint product: open sets are the open sets of the shifted b together with
/// Y u {n+1,..,n+n'} for Y open in a; on quasi-orders this is the ordinal sum.
inline LabeledTop ht_join(const LabeledTop& a, const LabeledTop& b) {
    LabeledTop stacked = ht_product(a, b);
    const int n = a.n(), total = a.n() + b.n();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = n + 1; j <= total; ++j) pairs.emplace_back(i, j);
    AtomSet ground = stacked.top().atom_set();
    std::vector<std::pair<int, int>> all;
    for (int i = 1; i <= total; ++i)
        for (int j = 1; j <= total; ++j)
            if (stacked.top().leq(i, j)) all.emplace_back(i, j);
    all.insert(all.end(), pairs.begin(), pairs.end());
    return LabeledTop(QPoset::from_relations(ground, all));
}

/// External coproduct of H_T: both restriction legs are standardized.
inline LinComb<std::pair<LabeledTop, LabeledTop>> ht_delta(const LabeledTop& a) {
    LinComb<std::pair<LabeledTop, LabeledTop>> out;
    const QPoset& t = a.top();
    const QPoset::Mask full = t.full_mask();
    for (QPoset::Mask y : t.open_masks())
        out.add_term({std_of(t.restrict_mask(full & ~y)), std_of(t.restrict_mask(y))}, 1);
    return out;
}

inline Rational ht_counit(const LabeledTop& a) { return Rational(a.n() == 0 ? 1 : 0); }

/// Internal coproduct of H_T: identical to the species-level coproduct, both
/// legs keep the labels {1,..,n} (no standardization).
inline LinComb<std::pair<LabeledTop, LabeledTop>> gamma_ht(const LabeledTop& a) {
    return apply_legs(
        gamma(a.top()), [](const QPoset& t) { return LinComb<LabeledTop>(LabeledTop(t)); },
        [](const QPoset& t) { return LinComb<LabeledTop>(LabeledTop(t)); });
}

/// Dual topology with the same labels.
inline LabeledTop involution_ht(const LabeledTop& a) { return LabeledTop(a.top().dual()); }

} // namespace qtop
