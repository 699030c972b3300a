#pragma once

#include <algorithm>
#include <bit>
#include <sstream>
#include <string>
#include <vector>

#include "qtop/lincomb.hpp"
#include "qtop/qposet.hpp"

namespace qtop {

/// Ordered partition of a finite ground set into nonempty blocks.
class SetComposition {
public:
    SetComposition() = default; // the empty composition

    explicit SetComposition(std::vector<AtomSet> blocks) : blocks_(std::move(blocks)) {
        AtomSet seen;
        for (const auto& b : blocks_) {
            if (b.empty()) throw InputError("SetComposition: empty block");
            for (int x : b)
                if (!seen.insert(x).second) throw InputError("SetComposition: overlapping blocks");
        }
    }

    SetComposition(std::initializer_list<AtomSet> blocks)
        : SetComposition(std::vector<AtomSet>(blocks)) {}

    std::size_t length() const { return blocks_.size(); }
    const std::vector<AtomSet>& blocks() const { return blocks_; }

    AtomSet ground() const {
        AtomSet g;
        for (const auto& b : blocks_) g.insert(b.begin(), b.end());
        return g;
    }

    friend bool operator==(const SetComposition& a, const SetComposition& b) {
        return a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const SetComposition& a, const SetComposition& b) { return !(a == b); }
    friend bool operator<(const SetComposition& a, const SetComposition& b) {
        return a.blocks_ < b.blocks_;
    }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (i) os << ",";
            os << "{";
            bool first = true;
            for (int x : blocks_[i]) {
                if (!first) os << ",";
                os << x;
                first = false;
            }
            os << "}";
        }
        os << ")";
        return os.str();
    }

private:
    std::vector<AtomSet> blocks_;
};

/// Trace on a subset: intersect each block with Y, drop what becomes empty.
inline SetComposition sc_restrict(const SetComposition& c, const AtomSet& y) {
    AtomSet g = c.ground();
    for (int a : y)
        if (!g.count(a)) throw InputError("sc_restrict: atom " + std::to_string(a) + " not in the ground set");
    std::vector<AtomSet> out;
    for (const auto& b : c.blocks()) {
        AtomSet inter;
        std::set_intersection(b.begin(), b.end(), y.begin(), y.end(),
                              std::inserter(inter, inter.end()));
        if (!inter.empty()) out.push_back(std::move(inter));
    }
    return SetComposition(std::move(out));
}

/// Product: sum of all set compositions of the disjoint union restricting to
/// the two factors. Enumerated as a quasi-shuffle of the block sequences (next
/// block from the left, from the right, or the union of both next blocks).
inline LinComb<SetComposition> sc_product(const SetComposition& cp, const SetComposition& cq) {
    AtomSet gx = cp.ground();
    for (int a : cq.ground())
        if (gx.count(a)) throw InputError("sc_product: ground sets overlap at " + std::to_string(a));
    LinComb<SetComposition> out;
    std::vector<AtomSet> prefix;
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == cp.length() && j == cq.length()) {
            out.add_term(SetComposition(prefix), 1);
            return;
        }
        if (i < cp.length()) {
            prefix.push_back(cp.blocks()[i]);
            self(self, i + 1, j);
            prefix.pop_back();
        }
        if (j < cq.length()) {
            prefix.push_back(cq.blocks()[j]);
            self(self, i, j + 1);
            prefix.pop_back();
        }
        if (i < cp.length() && j < cq.length()) {
            AtomSet merged = cp.blocks()[i];
            merged.insert(cq.blocks()[j].begin(), cq.blocks()[j].end());
            prefix.push_back(std::move(merged));
            self(self, i + 1, j + 1);
            prefix.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Deconcatenation coproduct: k+1 terms.
inline LinComb<std::pair<SetComposition, SetComposition>> sc_delta(const SetComposition& c) {
    LinComb<std::pair<SetComposition, SetComposition>> out;
    for (std::size_t i = 0; i <= c.length(); ++i) {
        std::vector<AtomSet> left(c.blocks().begin(), c.blocks().begin() + i);
        std::vector<AtomSet> right(c.blocks().begin() + i, c.blocks().end());
        out.add_term({SetComposition(std::move(left)), SetComposition(std::move(right))}, 1);
    }
    return out;
}

namespace detail {

/// Compositions of k into positive parts, lexicographic.
inline std::vector<std::vector<int>> int_compositions(int k) {
    std::vector<std::vector<int>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = 1; part <= rest; ++part) {
            cur.push_back(part);
            self(self, rest - part);
            cur.pop_back();
        }
    };
    rec(rec, k);
    return out;
}

} // namespace detail

/// Internal coproduct: for every composition of the block count, the product
/// of the consecutive subcompositions on the left and the merged blocks on the
/// right. The left leg is expanded into basis terms.
inline LinComb<std::pair<SetComposition, SetComposition>> sc_rho(const SetComposition& c) {
    LinComb<std::pair<SetComposition, SetComposition>> out;
    const int k = static_cast<int>(c.length());
    for (const auto& parts : detail::int_compositions(k)) {
        LinComb<SetComposition> left{SetComposition()};
        std::vector<AtomSet> merged;
        int at = 0;
        for (int p : parts) {
            std::vector<AtomSet> sub(c.blocks().begin() + at, c.blocks().begin() + at + p);
            AtomSet lump;
            for (const auto& b : sub) lump.insert(b.begin(), b.end());
            merged.push_back(std::move(lump));
            SetComposition subc{std::move(sub)};
            LinComb<SetComposition> next;
            for (const auto& [term, coeff] : left.terms()) next += sc_product(term, subc) * coeff;
            left = std::move(next);
            at += p;
        }
        out += tensor(left, LinComb<SetComposition>(SetComposition(std::move(merged))));
    }
    return out;
}

/// Counit of the internal coproduct: 1 iff at most one block.
inline Rational sc_counit(const SetComposition& c) { return Rational(c.length() <= 1 ? 1 : 0); }

/// Linear extensions of a quasi-poset: set compositions whose blocks are
/// unions of equivalence classes, built by repeatedly peeling a nonempty set
/// of minimal classes of the T0 quotient.
inline std::vector<SetComposition> linear_extensions(const QPoset& t) {
    const int n = static_cast<int>(t.size());
    auto per_pos = t.class_masks();
    std::vector<QPoset::Mask> classes;
    {
        std::set<QPoset::Mask> seen;
        for (int i = 0; i < n; ++i)
            if (seen.insert(per_pos[i]).second) classes.push_back(per_pos[i]);
    }
    const int k = static_cast<int>(classes.size());
    auto class_below = [&](int a, int b) { // strict order on classes
        if (a == b) return false;
        return bool(t.rows()[std::countr_zero(classes[a])] & classes[b]);
    };

    std::vector<SetComposition> out;
    std::vector<AtomSet> prefix;
    auto rec = [&](auto&& self, std::uint32_t remaining) -> void {
        if (!remaining) {
            out.push_back(SetComposition(prefix));
            return;
        }
        std::uint32_t minimal = 0;
        for (int a = 0; a < k; ++a) {
            if (!(remaining & (1u << a))) continue;
            bool is_min = true;
            for (int b = 0; b < k && is_min; ++b)
                if ((remaining & (1u << b)) && class_below(b, a)) is_min = false;
            if (is_min) minimal |= 1u << a;
        }
        // every nonempty subset of the minimal classes can be the next block
        for (std::uint32_t s = minimal; s; s = (s - 1) & minimal) {
            QPoset::Mask atoms = 0;
            for (int a = 0; a < k; ++a)
                if (s & (1u << a)) atoms |= classes[a];
            prefix.push_back(t.mask_to_atoms(atoms));
            self(self, remaining & ~s);
            prefix.pop_back();
        }
    };
    rec(rec, k == 0 ? 0 : (k == 32 ? ~0u : (1u << k) - 1));
    std::sort(out.begin(), out.end());
    return out;
}

/// Sum of the linear extensions, coefficient 1 each.
inline LinComb<SetComposition> L(const QPoset& t) {
    LinComb<SetComposition> out;
    for (const auto& c : linear_extensions(t)) out.add_term(c, 1);
    return out;
}

/// All set compositions of the given ground set, sorted.
inline std::vector<SetComposition> all_set_compositions(const AtomSet& atoms) {
    std::vector<SetComposition> out;
    std::vector<AtomSet> prefix;
    std::vector<int> elems(atoms.begin(), atoms.end());
    auto rec = [&](auto&& self, std::vector<int> rest) -> void {
        if (rest.empty()) {
            out.push_back(SetComposition(prefix));
            return;
        }
        const int k = static_cast<int>(rest.size());
        for (std::uint32_t s = 1; s < (1u << k); ++s) {
            AtomSet block;
            std::vector<int> remaining;
            for (int i = 0; i < k; ++i)
                (s & (1u << i)) ? (void)block.insert(rest[i]) : remaining.push_back(rest[i]);
            prefix.push_back(std::move(block));
            self(self, std::move(remaining));
            prefix.pop_back();
        }
    };
    rec(rec, elems);
    std::sort(out.begin(), out.end());
    return out;
}

/// The topology whose open sets are the suffix unions of the blocks; its only
/// linear extension is the composition itself.
inline QPoset composition_topology(const SetComposition& c) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < c.length(); ++i)
        for (std::size_t j = i; j < c.length(); ++j)
            for (int x : c.blocks()[i])
                for (int y : c.blocks()[j]) pairs.emplace_back(x, y);
    return QPoset::from_relations(c.ground(), pairs);
}

} // namespace qtop
