#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qtop/error.hpp"

namespace qtop {

using AtomSet = std::set<int>;

/// Unordered partition of a ground set. Blocks are nonempty, pairwise disjoint,
/// and kept sorted by their minimal element.
struct Partition {
    std::vector<AtomSet> blocks;

    static Partition of_blocks(std::vector<AtomSet> bs) {
        for (const auto& b : bs)
            if (b.empty()) throw InputError("Partition: empty block");
        std::sort(bs.begin(), bs.end(),
                  [](const AtomSet& a, const AtomSet& b) { return *a.begin() < *b.begin(); });
        AtomSet seen;
        for (const auto& b : bs)
            for (int x : b)
                if (!seen.insert(x).second) throw InputError("Partition: overlapping blocks");
        Partition p;
        p.blocks = std::move(bs);
        return p;
    }

    std::size_t size() const { return blocks.size(); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.blocks == b.blocks; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        os << "{";
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (i) os << ",";
            os << "{";
            bool first = true;
            for (int x : blocks[i]) {
                if (!first) os << ",";
                os << x;
                first = false;
            }
            os << "}";
        }
        os << "}";
        return os.str();
    }
};

/// A finite topology on an ordered ground set of atoms, stored as its
/// quasi-order: leq(a, b) holds iff every open set containing a contains b.
/// Open sets are recovered as the final segments (up-sets) of the relation.
///
/// Values are immutable after construction; every constructor output is a
/// genuine quasi-order (reflexivity and transitivity are enforced).
class QPoset {
public:
    static constexpr int max_atoms = 32;

    QPoset() = default; // the empty topology

    /// Reflexive-transitive closure of the given pairs (a, b) meaning a <= b.
    static QPoset from_relations(const AtomSet& atoms, const std::vector<std::pair<int, int>>& pairs) {
        QPoset t = discrete(atoms);
        for (auto [a, b] : pairs) {
            int i = t.position_checked(a, "from_relations");
            int j = t.position_checked(b, "from_relations");
            t.rows_[i] |= bit(j);
        }
        t.close();
        t.validate();
        return t;
    }

    /// Accepts an explicit relation matrix; rejects anything that is not
    /// already reflexive and transitive.
    static QPoset from_leq(const AtomSet& atoms, const std::vector<std::vector<bool>>& leq) {
        QPoset t = discrete(atoms);
        const std::size_t n = t.size();
        if (leq.size() != n) throw ValidationError("from_leq: matrix size does not match atom count");
        for (std::size_t i = 0; i < n; ++i) {
            if (leq[i].size() != n) throw ValidationError("from_leq: matrix is not square");
            t.rows_[i] = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (leq[i][j]) t.rows_[i] |= bit(static_cast<int>(j));
        }
        for (std::size_t i = 0; i < n; ++i)
            if (!(t.rows_[i] & bit(static_cast<int>(i)))) throw ValidationError("from_leq: relation is not reflexive");
        if (!t.is_transitive()) throw ValidationError("from_leq: relation is not transitive");
        return t;
    }

    static QPoset discrete(const AtomSet& atoms) {
        QPoset t;
        t.atoms_.assign(atoms.begin(), atoms.end());
        if (t.atoms_.size() > max_atoms) throw ResourceError("QPoset: more than 32 atoms");
        for (int a : t.atoms_)
            if (a < 0) throw InputError("QPoset: atoms must be non-negative");
        t.rows_.assign(t.atoms_.size(), 0);
        for (std::size_t i = 0; i < t.rows_.size(); ++i) t.rows_[i] = bit(static_cast<int>(i));
        return t;
    }

    static QPoset coarse(const AtomSet& atoms) {
        QPoset t = discrete(atoms);
        const Mask full = t.full_mask();
        for (auto& r : t.rows_) r = full;
        return t;
    }

    /// Total order a1 < a2 < ... in the given sequence order.
    static QPoset chain(const std::vector<int>& atoms_in_order) {
        AtomSet ground(atoms_in_order.begin(), atoms_in_order.end());
        if (ground.size() != atoms_in_order.size()) throw InputError("chain: repeated atom");
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t i = 0; i + 1 < atoms_in_order.size(); ++i)
            pairs.emplace_back(atoms_in_order[i], atoms_in_order[i + 1]);
        return from_relations(ground, pairs);
    }

    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }
    const std::vector<int>& atoms() const { return atoms_; }
    AtomSet atom_set() const { return AtomSet(atoms_.begin(), atoms_.end()); }
    bool has_atom(int a) const { return position(a) >= 0; }

    bool leq(int a, int b) const {
        int i = position_checked(a, "leq");
        int j = position_checked(b, "leq");
        return rows_[i] & bit(j);
    }
    bool equiv(int a, int b) const { return leq(a, b) && leq(b, a); }

    /// All open sets, ordered by their position bitmask (so the empty set comes
    /// first and the full set last).
    std::vector<AtomSet> open_sets() const {
        std::vector<AtomSet> out;
        for (Mask m : open_masks()) out.push_back(mask_to_atoms(m));
        return out;
    }

    static QPoset from_open_sets(const AtomSet& atoms, const std::vector<AtomSet>& family) {
        QPoset t = discrete(atoms);
        std::set<Mask> opens;
        for (const auto& member : family) {
            Mask m = 0;
            for (int a : member) m |= bit(t.position_checked(a, "from_open_sets"));
            opens.insert(m);
        }
        if (!opens.count(0)) throw ValidationError("from_open_sets: empty set is missing");
        if (!opens.count(t.full_mask())) throw ValidationError("from_open_sets: full set is missing");
        for (Mask a : opens)
            for (Mask b : opens) {
                if (!opens.count(a | b)) throw ValidationError("from_open_sets: family not closed under union");
                if (!opens.count(a & b)) throw ValidationError("from_open_sets: family not closed under intersection");
            }
        const int n = static_cast<int>(t.size());
        for (int i = 0; i < n; ++i) {
            Mask row = t.full_mask();
            for (Mask o : opens)
                if (o & bit(i)) row &= o; // a <= b iff every open containing a contains b
            t.rows_[i] = row;
        }
        t.validate();
        return t;
    }

    /// Open sets of the dual are the complements of the open sets; on the
    /// quasi-order side this transposes the relation.
    QPoset dual() const {
        QPoset t = *this;
        const int n = static_cast<int>(size());
        for (int i = 0; i < n; ++i) {
            Mask r = 0;
            for (int j = 0; j < n; ++j)
                if (rows_[j] & bit(i)) r |= bit(j);
            t.rows_[i] = r;
        }
        return t;
    }

    QPoset restrict_to(const AtomSet& y) const {
        Mask m = 0;
        for (int a : y) m |= bit(position_checked(a, "restrict_to"));
        return restrict_mask(m);
    }

    Partition equiv_classes() const { return mask_partition(class_masks()); }

    /// Components of the undirected comparability graph.
    Partition connected_components() const { return mask_partition(component_masks()); }

    /// Number of equivalence classes minus number of connected components.
    int degree() const {
        return static_cast<int>(count_distinct(class_masks())) -
               static_cast<int>(count_distinct(component_masks()));
    }

    bool is_group_like() const {
        const int n = static_cast<int>(size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (bool(rows_[i] & bit(j)) != bool(rows_[j] & bit(i))) return false;
        return true;
    }

    bool is_connected() const {
        if (empty()) return true;
        return count_distinct(component_masks()) == 1;
    }

    /// Relabels atoms along a bijection; the quasi-order is transported as-is.
    QPoset relabel(const std::map<int, int>& phi) const {
        if (phi.size() != size()) throw InputError("relabel: map does not cover the atoms exactly");
        AtomSet new_atoms;
        for (int a : atoms_) {
            auto it = phi.find(a);
            if (it == phi.end()) throw InputError("relabel: atom missing from map");
            if (it->second < 0) throw InputError("relabel: atoms must be non-negative");
            if (!new_atoms.insert(it->second).second) throw InputError("relabel: map is not injective");
        }
        QPoset t = discrete(new_atoms);
        const int n = static_cast<int>(size());
        for (int i = 0; i < n; ++i) {
            int ni = t.position(phi.at(atoms_[i]));
            Mask r = 0;
            for (int j = 0; j < n; ++j)
                if (rows_[i] & bit(j)) r |= bit(t.position(phi.at(atoms_[j])));
            t.rows_[ni] = r;
        }
        t.validate();
        return t;
    }

    friend bool operator==(const QPoset& a, const QPoset& b) {
        return a.atoms_ == b.atoms_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const QPoset& a, const QPoset& b) { return !(a == b); }
    friend bool operator<(const QPoset& a, const QPoset& b) {
        if (a.atoms_ != b.atoms_) return a.atoms_ < b.atoms_;
        return a.rows_ < b.rows_;
    }

    std::string str() const; // "{...}" around the DSL normal form; defined after print_dsl

    // --- internals shared with the rest of the library ------------------------------------

    using Mask = std::uint32_t;

    Mask full_mask() const {
        const std::size_t n = size();
        return n == 32 ? ~Mask(0) : (Mask(1) << n) - 1;
    }
    static Mask bit(int i) { return Mask(1) << i; }

    int position(int atom) const {
        auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
        if (it == atoms_.end() || *it != atom) return -1;
        return static_cast<int>(it - atoms_.begin());
    }
    int position_checked(int atom, const char* who) const {
        int i = position(atom);
        if (i < 0) throw InputError(std::string(who) + ": unknown atom " + std::to_string(atom));
        return i;
    }

    bool leq_pos(int i, int j) const { return rows_[i] & bit(j); }
    const std::vector<Mask>& rows() const { return rows_; }

    AtomSet mask_to_atoms(Mask m) const {
        AtomSet s;
        for (int i = 0; i < static_cast<int>(size()); ++i)
            if (m & bit(i)) s.insert(atoms_[i]);
        return s;
    }

    std::vector<Mask> open_masks() const {
        std::vector<Mask> out;
        const Mask full = full_mask();
        for (Mask m = 0;; ++m) {
            bool open = true;
            for (int i = 0; open && i < static_cast<int>(size()); ++i)
                if ((m & bit(i)) && (rows_[i] & ~m)) open = false;
            if (open) out.push_back(m);
            if (m == full) break;
        }
        return out;
    }

    QPoset restrict_mask(Mask m) const {
        AtomSet ys;
        for (int i = 0; i < static_cast<int>(size()); ++i)
            if (m & bit(i)) ys.insert(atoms_[i]);
        QPoset t = discrete(ys);
        int ni = 0;
        for (int i = 0; i < static_cast<int>(size()); ++i) {
            if (!(m & bit(i))) continue;
            Mask r = 0;
            int nj = 0;
            for (int j = 0; j < static_cast<int>(size()); ++j) {
                if (!(m & bit(j))) continue;
                if (rows_[i] & bit(j)) r |= bit(nj);
                ++nj;
            }
            t.rows_[ni++] = r;
        }
        return t;
    }

    /// class_masks()[i] = positions equivalent to i.
    std::vector<Mask> class_masks() const {
        const int n = static_cast<int>(size());
        std::vector<Mask> cls(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((rows_[i] & bit(j)) && (rows_[j] & bit(i))) cls[i] |= bit(j);
        return cls;
    }

    /// component_masks()[i] = positions in the comparability component of i.
    std::vector<Mask> component_masks() const {
        const int n = static_cast<int>(size());
        std::vector<Mask> sym(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((rows_[i] & bit(j)) || (rows_[j] & bit(i))) sym[i] |= bit(j);
        // closure of the symmetric relation
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if ((sym[i] & bit(j)) && (sym[i] | sym[j]) != sym[i]) {
                        sym[i] |= sym[j];
                        changed = true;
                    }
        }
        return sym;
    }

    bool connected_mask(Mask m) const {
        if (!m) return true; // the empty subset is connected by convention
        const int n = static_cast<int>(size());
        int start = std::countr_zero(m);
        Mask reach = bit(start), frontier = bit(start);
        while (frontier) {
            Mask next = 0;
            for (int i = 0; i < n; ++i)
                if (frontier & bit(i))
                    for (int j = 0; j < n; ++j)
                        if ((m & bit(j)) && !(reach & bit(j)) &&
                            ((rows_[i] & bit(j)) || (rows_[j] & bit(i))))
                            next |= bit(j);
            reach |= next;
            frontier = next;
        }
        return reach == m;
    }

    // Used by operations that construct relations positionally (quotient, product).
    static QPoset from_rows_unchecked(std::vector<int> atoms, std::vector<Mask> rows) {
        QPoset t;
        t.atoms_ = std::move(atoms);
        t.rows_ = std::move(rows);
        t.close();
        t.validate();
        return t;
    }

private:
    std::vector<int> atoms_; // strictly increasing
    std::vector<Mask> rows_; // rows_[i] bit j: atom i <= atom j

    void close() {
        const int n = static_cast<int>(size());
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if (rows_[i] & bit(k)) rows_[i] |= rows_[k];
    }

    bool is_transitive() const {
        const int n = static_cast<int>(size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((rows_[i] & bit(j)) && (rows_[j] & ~rows_[i])) return false;
        return true;
    }

    void validate() const {
        for (std::size_t i = 1; i < atoms_.size(); ++i)
            if (atoms_[i - 1] >= atoms_[i]) throw InputError("QPoset: atoms not strictly increasing");
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (!(rows_[i] & bit(static_cast<int>(i)))) throw DomainError("QPoset: relation lost reflexivity");
        if (!is_transitive()) throw DomainError("QPoset: relation lost transitivity");
    }

    Partition mask_partition(const std::vector<Mask>& per_position) const {
        std::vector<AtomSet> blocks;
        std::set<Mask> seen;
        for (std::size_t i = 0; i < per_position.size(); ++i)
            if (seen.insert(per_position[i]).second) blocks.push_back(mask_to_atoms(per_position[i]));
        return Partition::of_blocks(std::move(blocks));
    }

    static std::size_t count_distinct(const std::vector<Mask>& v) {
        std::set<Mask> s(v.begin(), v.end());
        return s.size();
    }
};

// ---------------------------------------------------------------------------------------------
// Structural operations
// ---------------------------------------------------------------------------------------------

/// Disjoint-union product: open sets are exactly the Y with both traces open.
inline QPoset product(const QPoset& t1, const QPoset& t2) {
    for (int a : t1.atoms())
        if (t2.has_atom(a)) throw InputError("product: atom sets overlap at " + std::to_string(a));
    AtomSet ground = t1.atom_set();
    for (int a : t2.atoms()) ground.insert(a);
    QPoset t = QPoset::discrete(ground);
    std::vector<QPoset::Mask> rows = t.rows();
    auto install = [&](const QPoset& src) {
        for (int i = 0; i < static_cast<int>(src.size()); ++i) {
            int ni = t.position(src.atoms()[i]);
            for (int j = 0; j < static_cast<int>(src.size()); ++j)
                if (src.leq_pos(i, j)) rows[ni] |= QPoset::bit(t.position(src.atoms()[j]));
        }
    };
    install(t1);
    install(t2);
    return QPoset::from_rows_unchecked(std::vector<int>(ground.begin(), ground.end()), std::move(rows));
}

/// tp is finer than t: every t-open set is tp-open, i.e. leq(tp) contained in leq(t).
inline bool is_finer(const QPoset& tp, const QPoset& t) {
    if (tp.atoms() != t.atoms()) throw InputError("is_finer: atom sets differ");
    for (std::size_t i = 0; i < t.size(); ++i)
        if (tp.rows()[i] & ~t.rows()[i]) return false;
    return true;
}

/// Quotient of t by a finer tp: transitive closure of (x <=_t y or y <=_tp x).
inline QPoset quotient(const QPoset& t, const QPoset& tp) {
    if (!is_finer(tp, t)) throw DomainError("quotient: second argument is not a finer topology");
    const int n = static_cast<int>(t.size());
    std::vector<QPoset::Mask> rows(t.rows());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (tp.rows()[j] & QPoset::bit(i)) rows[i] |= QPoset::bit(j);
    return QPoset::from_rows_unchecked(t.atoms(), std::move(rows));
}

/// Admissibility of a refinement: tp agrees with t on every tp-connected set,
/// and the quotient's equivalence matches tp-connectivity. Checking agreement
/// on the tp-connected components suffices (restriction is hereditary).
inline bool is_admissible(const QPoset& tp, const QPoset& t) {
    if (tp.atoms() != t.atoms()) throw InputError("is_admissible: atom sets differ");
    if (!is_finer(tp, t)) return false;
    auto comps = tp.component_masks();
    std::set<QPoset::Mask> seen;
    for (auto m : comps) {
        if (!seen.insert(m).second) continue;
        if (tp.restrict_mask(m) != t.restrict_mask(m)) return false;
    }
    QPoset qt = quotient(t, tp);
    QPoset qtp = quotient(tp, tp);
    return qt.class_masks() == qtp.class_masks();
}

namespace detail {

/// Set partitions of {0,..,n-1} as block masks (restricted growth order).
inline std::vector<std::vector<QPoset::Mask>> set_partitions(int n) {
    std::vector<std::vector<QPoset::Mask>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> rgs(n, 0);
    while (true) {
        int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<QPoset::Mask> blocks(k, 0);
        for (int i = 0; i < n; ++i) blocks[rgs[i]] |= QPoset::bit(i);
        out.push_back(blocks);
        int i = n - 1;
        for (; i > 0; --i) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[i] < cap) break;
        }
        if (i == 0) break;
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    return out;
}

} // namespace detail

/// All admissible refinements of t. A refinement is determined by its partition
/// into connected components: blocks must be t-connected, the candidate is the
/// product of the restrictions of t to the blocks, and it is kept iff the
/// quotient's equivalence classes are exactly the blocks.
inline std::vector<QPoset> admissible_refinements(const QPoset& t) {
    const int n = static_cast<int>(t.size());
    std::vector<QPoset> out;
    for (const auto& blocks : detail::set_partitions(n)) {
        bool ok = true;
        for (auto m : blocks)
            if (!t.connected_mask(m)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        std::vector<QPoset::Mask> block_of(n, 0);
        for (auto m : blocks)
            for (int i = 0; i < n; ++i)
                if (m & QPoset::bit(i)) block_of[i] = m;
        std::vector<QPoset::Mask> rows(n, 0);
        for (int i = 0; i < n; ++i) rows[i] = t.rows()[i] & block_of[i];
        QPoset cand = QPoset::from_rows_unchecked(t.atoms(), std::move(rows));
        if (quotient(t, cand).class_masks() == block_of) out.push_back(std::move(cand));
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Canonical form (homeomorphism classes)
// ---------------------------------------------------------------------------------------------

namespace detail {

inline std::vector<std::uint8_t> encode_rows(int n, const std::vector<QPoset::Mask>& rows) {
    std::vector<std::uint8_t> bytes;
    bytes.push_back(static_cast<std::uint8_t>(n));
    int bitpos = 0;
    std::uint8_t cur = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (rows[i] & QPoset::bit(j)) cur |= std::uint8_t(1u << bitpos);
            if (++bitpos == 8) {
                bytes.push_back(cur);
                cur = 0;
                bitpos = 0;
            }
        }
    if (bitpos) bytes.push_back(cur);
    return bytes;
}

} // namespace detail

/// Canonical key: two quasi-posets get the same key iff they are related by a
/// relabelling. Computed as the minimum, over atom permutations, of a row-major
/// encoding of the relation; permutations are restricted to those preserving
/// the (class size, out-degree, in-degree) invariant of each position, which
/// leaves the minimum well defined per homeomorphism class. Results are
/// memoized per thread.
inline std::vector<std::uint8_t> canonical_form(const QPoset& t, int cap = 8) {
    const int n = static_cast<int>(t.size());
    if (n > cap)
        throw ResourceError("canonical_form: " + std::to_string(n) +
                            " atoms exceeds the cap of " + std::to_string(cap) +
                            "; plug in an external canonicalizer for larger instances");
    auto plain = detail::encode_rows(n, t.rows());
    thread_local std::map<std::vector<std::uint8_t>, std::vector<std::uint8_t>> memo;
    if (auto it = memo.find(plain); it != memo.end()) return it->second;

    auto cls = t.class_masks();
    std::vector<std::tuple<int, int, int>> inv(n);
    for (int i = 0; i < n; ++i) {
        int indeg = 0;
        for (int j = 0; j < n; ++j)
            if (t.rows()[j] & QPoset::bit(i)) ++indeg;
        inv[i] = {std::popcount(cls[i]), std::popcount(t.rows()[i]), indeg};
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return inv[a] != inv[b] ? inv[a] < inv[b] : a < b;
    });
    // group boundaries of equal invariants
    std::vector<std::pair<int, int>> groups;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && inv[order[j]] == inv[order[i]]) ++j;
        groups.emplace_back(i, j);
        i = j;
    }

    std::vector<std::uint8_t> best;
    std::vector<int> perm = order;
    std::vector<QPoset::Mask> permuted(n);
    auto evaluate = [&]() {
        std::vector<int> newpos(n);
        for (int a = 0; a < n; ++a) newpos[perm[a]] = a;
        for (int a = 0; a < n; ++a) {
            QPoset::Mask r = 0;
            for (int b = 0; b < n; ++b)
                if (t.rows()[perm[a]] & QPoset::bit(perm[b])) r |= QPoset::bit(b);
            permuted[a] = r;
        }
        auto enc = detail::encode_rows(n, permuted);
        if (best.empty() || enc < best) best = std::move(enc);
    };
    auto rec = [&](auto&& self, std::size_t g) -> void {
        if (g == groups.size()) {
            evaluate();
            return;
        }
        auto [lo, hi] = groups[g];
        std::sort(perm.begin() + lo, perm.begin() + hi);
        do {
            self(self, g + 1);
        } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
    };
    rec(rec, 0);

    memo.emplace(std::move(plain), best);
    return best;
}

// ---------------------------------------------------------------------------------------------
// Text DSL
// ---------------------------------------------------------------------------------------------

/// Grammar: comma-separated items, whitespace ignored. An item is a bare atom,
/// `a<b` (strict order) or `a~b` (equivalence). Atoms are non-negative
/// integers; `a<a` is rejected.
inline QPoset parse_dsl(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) ++pos;
    };
    auto fail = [&](const std::string& msg) -> void {
        throw InputError("parse error at position " + std::to_string(pos + 1) + ": " + msg);
    };
    auto read_atom = [&]() -> int {
        skip_ws();
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') fail("expected atom");
        long v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000) fail("atom identifier too large");
            ++pos;
        }
        return static_cast<int>(v);
    };

    AtomSet atoms;
    std::vector<std::pair<int, int>> pairs;
    skip_ws();
    if (pos < text.size()) {
        while (true) {
            int a = read_atom();
            atoms.insert(a);
            skip_ws();
            if (pos < text.size() && (text[pos] == '<' || text[pos] == '~')) {
                char op = text[pos++];
                int b = read_atom();
                atoms.insert(b);
                if (op == '<') {
                    if (a == b) fail("self-loop " + std::to_string(a) + "<" + std::to_string(a));
                    pairs.emplace_back(a, b);
                } else {
                    pairs.emplace_back(a, b);
                    pairs.emplace_back(b, a);
                }
                skip_ws();
            }
            if (pos >= text.size()) break;
            if (text[pos] != ',') fail("expected ',' or end of input");
            ++pos;
        }
    }
    return QPoset::from_relations(atoms, pairs);
}

/// Deterministic normal form: equivalence chains for each non-trivial class
/// (ascending, by minimal atom), then the Hasse covers of the T0 quotient on
/// minimal class representatives, then isolated atoms. parse_dsl(print_dsl(t))
/// reproduces t exactly.
inline std::string print_dsl(const QPoset& t) {
    const int n = static_cast<int>(t.size());
    auto cls = t.class_masks();
    std::vector<QPoset::Mask> classes;
    std::set<QPoset::Mask> seen;
    for (int i = 0; i < n; ++i)
        if (seen.insert(cls[i]).second) classes.push_back(cls[i]);

    auto rep = [&](QPoset::Mask m) { return t.atoms()[std::countr_zero(m)]; };

    std::vector<std::string> items;
    for (auto m : classes) {
        std::vector<int> members;
        for (int i = 0; i < n; ++i)
            if (m & QPoset::bit(i)) members.push_back(t.atoms()[i]);
        for (std::size_t i = 0; i + 1 < members.size(); ++i)
            items.push_back(std::to_string(members[i]) + "~" + std::to_string(members[i + 1]));
    }

    auto class_leq = [&](QPoset::Mask a, QPoset::Mask b) {
        return t.rows()[std::countr_zero(a)] & QPoset::bit(std::countr_zero(b));
    };
    std::set<QPoset::Mask> covered_or_covering; // classes touched by some cover pair
    for (auto a : classes)
        for (auto b : classes) {
            if (a == b || !class_leq(a, b)) continue;
            bool cover = true;
            for (auto c : classes)
                if (c != a && c != b && class_leq(a, c) && class_leq(c, b)) {
                    cover = false;
                    break;
                }
            if (cover) {
                items.push_back(std::to_string(rep(a)) + "<" + std::to_string(rep(b)));
                covered_or_covering.insert(a);
                covered_or_covering.insert(b);
            }
        }

    for (auto m : classes)
        if (std::popcount(m) == 1 && !covered_or_covering.count(m))
            items.push_back(std::to_string(rep(m)));

    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += items[i];
    }
    return out;
}

inline std::string QPoset::str() const { return "{" + print_dsl(*this) + "}"; }

} // namespace qtop
