#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qtop/lincomb.hpp"
#include "qtop/setcomp.hpp"
#include "qtop/topalg.hpp"

namespace qtop {

/// Composition of an integer: finite sequence of positive parts. Indexes the
/// monomial basis of QSym.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw InputError("Composition: parts must be positive");
    }

    std::size_t length() const { return parts_.size(); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    const std::vector<int>& parts() const { return parts_; }

    friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Composition& a, const Composition& b) { return !(a == b); }
    friend bool operator<(const Composition& a, const Composition& b) { return a.parts_ < b.parts_; }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ",";
            os << parts_[i];
        }
        os << ")";
        return os.str();
    }

private:
    std::vector<int> parts_;
};

/// Packed word: every value 1..max(w) occurs. Indexes the monomial basis of WQSym.
class PackedWord {
public:
    PackedWord() = default;
    explicit PackedWord(std::vector<int> letters) : letters_(std::move(letters)) {
        int m = 0;
        for (int x : letters_) {
            if (x < 1) throw InputError("PackedWord: letters must be positive");
            m = std::max(m, x);
        }
        std::vector<bool> hit(m, false);
        for (int x : letters_) hit[x - 1] = true;
        for (bool h : hit)
            if (!h) throw InputError("PackedWord: word is not packed");
    }

    std::size_t length() const { return letters_.size(); }
    int max_letter() const {
        int m = 0;
        for (int x : letters_) m = std::max(m, x);
        return m;
    }
    const std::vector<int>& letters() const { return letters_; }

    friend bool operator==(const PackedWord& a, const PackedWord& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const PackedWord& a, const PackedWord& b) { return !(a == b); }
    friend bool operator<(const PackedWord& a, const PackedWord& b) { return a.letters_ < b.letters_; }

    /// Digits run together when all letters are single digits, otherwise
    /// comma-separated; the comma form is the canonical JSON rendering.
    std::string str() const {
        if (letters_.empty()) return "()";
        bool digits = std::all_of(letters_.begin(), letters_.end(), [](int x) { return x <= 9; });
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i && !digits) os << ",";
            os << letters_[i];
        }
        os << ")";
        return os.str();
    }

private:
    std::vector<int> letters_;
};

/// Surjections u : [i_1+..+i_p] ->> [max(u)] that increase strictly inside
/// each block of consecutive positions of length i_j. Enumerated by peeling
/// the preimage of each value off the block heads, so blocks stay increasing.
inline std::vector<std::vector<int>> qsh_surjections(const std::vector<int>& block_sizes) {
    std::vector<int> sizes;
    std::vector<int> starts;
    int total = 0;
    for (int s : block_sizes) {
        if (s < 0) throw InputError("qsh_surjections: negative block size");
        if (s > 0) {
            starts.push_back(total);
            sizes.push_back(s);
        }
        total += s;
    }
    std::vector<std::vector<int>> out;
    std::vector<int> word(total, 0);
    const int p = static_cast<int>(sizes.size());
    std::vector<int> taken(p, 0); // entries consumed per block
    auto rec = [&](auto&& self, int value, int left) -> void {
        if (left == 0) {
            out.push_back(word);
            return;
        }
        std::vector<int> avail;
        for (int b = 0; b < p; ++b)
            if (taken[b] < sizes[b]) avail.push_back(b);
        const int a = static_cast<int>(avail.size());
        for (std::uint32_t s = 1; s < (1u << a); ++s) {
            int used = 0;
            for (int idx = 0; idx < a; ++idx)
                if (s & (1u << idx)) {
                    int b = avail[idx];
                    word[starts[b] + taken[b]] = value;
                    ++taken[b];
                    ++used;
                }
            self(self, value + 1, left - used);
            for (int idx = 0; idx < a; ++idx)
                if (s & (1u << idx)) --taken[avail[idx]];
        }
    };
    rec(rec, 1, total);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------------------------
// QSym in the monomial basis
// ---------------------------------------------------------------------------------------------

/// Quasi-shuffle product: parts are interleaved or merged by addition.
inline LinComb<Composition> qsym_product(const Composition& c, const Composition& d) {
    const int k = static_cast<int>(c.length()), l = static_cast<int>(d.length());
    std::vector<int> parts = c.parts();
    parts.insert(parts.end(), d.parts().begin(), d.parts().end());
    LinComb<Composition> out;
    for (const auto& u : qsh_surjections({k, l})) {
        int m = 0;
        for (int x : u) m = std::max(m, x);
        std::vector<int> merged(m, 0);
        for (std::size_t i = 0; i < u.size(); ++i) merged[u[i] - 1] += parts[i];
        out.add_term(Composition(std::move(merged)), 1);
    }
    return out;
}

inline LinComb<std::pair<Composition, Composition>> qsym_delta(const Composition& c) {
    LinComb<std::pair<Composition, Composition>> out;
    for (std::size_t i = 0; i <= c.length(); ++i) {
        std::vector<int> left(c.parts().begin(), c.parts().begin() + i);
        std::vector<int> right(c.parts().begin() + i, c.parts().end());
        out.add_term({Composition(std::move(left)), Composition(std::move(right))}, 1);
    }
    return out;
}

/// Internal coproduct of QSym: quasi-shuffle products of consecutive
/// subcompositions on the left, block sums on the right.
inline LinComb<std::pair<Composition, Composition>> qsym_rho(const Composition& c) {
    LinComb<std::pair<Composition, Composition>> out;
    const int k = static_cast<int>(c.length());
    for (const auto& parts : detail::int_compositions(k)) {
        LinComb<Composition> left{Composition()};
        std::vector<int> sums;
        int at = 0;
        for (int p : parts) {
            std::vector<int> sub(c.parts().begin() + at, c.parts().begin() + at + p);
            sums.push_back(std::accumulate(sub.begin(), sub.end(), 0));
            Composition subc{std::move(sub)};
            LinComb<Composition> next;
            for (const auto& [term, coeff] : left.terms()) next += qsym_product(term, subc) * coeff;
            left = std::move(next);
            at += p;
        }
        out += tensor(left, LinComb<Composition>(Composition(std::move(sums))));
    }
    return out;
}

inline Rational qsym_rho_counit(const Composition& c) { return Rational(c.length() <= 1 ? 1 : 0); }

// ---------------------------------------------------------------------------------------------
// WQSym in the monomial basis
// ---------------------------------------------------------------------------------------------

/// Order-preserving relabelling of the letters onto an initial segment.
inline PackedWord pack(const std::vector<int>& word) {
    std::vector<int> values(word);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<int> out;
    out.reserve(word.size());
    for (int x : word)
        out.push_back(static_cast<int>(std::lower_bound(values.begin(), values.end(), x) -
                                       values.begin()) +
                      1);
    return PackedWord(std::move(out));
}

inline LinComb<PackedWord> wqsym_product(const PackedWord& u, const PackedWord& v) {
    const int mu = u.max_letter(), mv = v.max_letter();
    std::vector<int> concat = u.letters();
    for (int x : v.letters()) concat.push_back(x + mu);
    LinComb<PackedWord> out;
    for (const auto& w : qsh_surjections({mu, mv})) {
        std::vector<int> word;
        word.reserve(concat.size());
        for (int x : concat) word.push_back(w[x - 1]);
        out.add_term(PackedWord(std::move(word)), 1);
    }
    return out;
}

inline LinComb<std::pair<PackedWord, PackedWord>> wqsym_delta(const PackedWord& w) {
    LinComb<std::pair<PackedWord, PackedWord>> out;
    const int m = w.max_letter();
    for (int k = 0; k <= m; ++k) {
        std::vector<int> low, high;
        for (int x : w.letters()) (x <= k ? low : high).push_back(x);
        out.add_term({PackedWord(std::move(low)), pack(high)}, 1);
    }
    return out;
}

/// Internal coproduct of WQSym: the left legs refine the fibers of u along a
/// quasi-shuffle surjection, the right leg groups the letters by block.
inline LinComb<std::pair<PackedWord, PackedWord>> wqsym_rho(const PackedWord& u) {
    LinComb<std::pair<PackedWord, PackedWord>> out;
    const int m = u.max_letter();
    for (const auto& parts : detail::int_compositions(m)) {
        std::vector<int> block_of(m + 1, 0);
        {
            int value = 1;
            for (std::size_t j = 0; j < parts.size(); ++j)
                for (int i = 0; i < parts[j]; ++i) block_of[value++] = static_cast<int>(j) + 1;
        }
        std::vector<int> right;
        right.reserve(u.length());
        for (int x : u.letters()) right.push_back(block_of[x]);
        PackedWord right_word{std::move(right)};
        for (const auto& v : qsh_surjections(parts)) {
            std::vector<int> left;
            left.reserve(u.length());
            for (int x : u.letters()) left.push_back(v[x - 1]);
            out.add_term({PackedWord(std::move(left)), right_word}, 1);
        }
    }
    return out;
}

inline Rational wqsym_rho_counit(const PackedWord& w) { return Rational(w.max_letter() <= 1 ? 1 : 0); }

// ---------------------------------------------------------------------------------------------
// Set compositions vs words
// ---------------------------------------------------------------------------------------------

/// Set compositions of {1,..,n} are packed words of length n: letter i is the
/// index of the block containing i.
inline PackedWord sc_to_packed(const SetComposition& c) {
    AtomSet g = c.ground();
    const int n = static_cast<int>(g.size());
    for (int i = 1; i <= n; ++i)
        if (!g.count(i)) throw InputError("sc_to_packed: ground set must be exactly {1,..,n}");
    std::vector<int> word(n, 0);
    for (std::size_t j = 0; j < c.length(); ++j)
        for (int x : c.blocks()[j]) word[x - 1] = static_cast<int>(j) + 1;
    return PackedWord(std::move(word));
}

inline SetComposition packed_to_sc(const PackedWord& w) {
    std::vector<AtomSet> blocks(w.max_letter());
    for (std::size_t i = 0; i < w.length(); ++i)
        blocks[w.letters()[i] - 1].insert(static_cast<int>(i) + 1);
    return SetComposition(std::move(blocks));
}

inline Composition type_of(const SetComposition& c) {
    std::vector<int> parts;
    parts.reserve(c.length());
    for (const auto& b : c.blocks()) parts.push_back(static_cast<int>(b.size()));
    return Composition(std::move(parts));
}

/// All packed words of the given length, ordered lexicographically.
inline std::vector<PackedWord> all_packed_words(int len) {
    AtomSet atoms;
    for (int i = 1; i <= len; ++i) atoms.insert(i);
    std::vector<PackedWord> out;
    for (const auto& c : all_set_compositions(atoms)) out.push_back(sc_to_packed(c));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------------------------
// Linear-extension morphisms
// ---------------------------------------------------------------------------------------------

inline LinComb<Composition> lambda_of(const QPoset& t) {
    LinComb<Composition> out;
    for (const auto& c : linear_extensions(t)) out.add_term(type_of(c), 1);
    return out;
}

/// Morphism H -> QSym; well defined on classes since the type of a linear
/// extension is relabelling-invariant.
inline LinComb<Composition> lambda_map(const IsoClass& c) { return lambda_of(c.rep()); }

/// Morphism H_T -> WQSym.
inline LinComb<PackedWord> Lambda_map(const LabeledTop& a) {
    LinComb<PackedWord> out;
    for (const auto& c : linear_extensions(a.top())) out.add_term(sc_to_packed(c), 1);
    return out;
}

} // namespace qtop
