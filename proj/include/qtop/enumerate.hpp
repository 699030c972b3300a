#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "qtop/qposet.hpp"
#include "qtop/topalg.hpp"

namespace qtop {

/// All topologies on the given atoms, by direct filtering of the reflexive
/// relations for transitivity. Deterministic order (ascending off-diagonal
/// bitmask).
inline std::vector<QPoset> all_topologies(const AtomSet& atoms) {
    const int n = static_cast<int>(atoms.size());
    if (n > 5) throw ResourceError("all_topologies: enumeration capped at 5 atoms");
    std::vector<int> atomv(atoms.begin(), atoms.end());
    std::vector<std::pair<int, int>> offdiag;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) offdiag.emplace_back(i, j);
    std::vector<QPoset> out;
    const std::uint64_t limit = 1ull << offdiag.size();
    std::vector<QPoset::Mask> rows(n);
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        for (int i = 0; i < n; ++i) rows[i] = QPoset::bit(i);
        for (std::size_t b = 0; b < offdiag.size(); ++b)
            if (mask & (1ull << b)) rows[offdiag[b].first] |= QPoset::bit(offdiag[b].second);
        bool transitive = true;
        for (int i = 0; transitive && i < n; ++i)
            for (int j = 0; j < n; ++j)
                if ((rows[i] & QPoset::bit(j)) && (rows[j] & ~rows[i])) {
                    transitive = false;
                    break;
                }
        if (transitive) out.push_back(QPoset::from_rows_unchecked(atomv, rows));
    }
    return out;
}

inline AtomSet standard_atoms(int n, int first = 1) {
    AtomSet s;
    for (int i = 0; i < n; ++i) s.insert(first + i);
    return s;
}

/// All topologies on {1,..,n}, cached per size.
inline const std::vector<QPoset>& labeled_topologies(int n) {
    thread_local std::map<int, std::vector<QPoset>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, all_topologies(standard_atoms(n))).first;
    return it->second;
}

/// Independent enumerator: counts set families on {1,..,n} satisfying the
/// open-set axioms (contains the empty and full sets, closed under pairwise
/// union and intersection). Only feasible for n <= 4.
inline std::uint64_t count_topologies_by_families(int n) {
    if (n > 4) throw ResourceError("count_topologies_by_families: capped at 4 atoms");
    const int subsets = 1 << n;
    const std::uint32_t full = subsets - 1;
    std::uint64_t count = 0;
    const std::uint64_t limit = 1ull << subsets;
    for (std::uint64_t fam = 0; fam < limit; ++fam) {
        if (!(fam & 1ull)) continue;                 // empty set
        if (!(fam & (1ull << full))) continue;       // full set
        bool closed = true;
        for (int a = 0; closed && a < subsets; ++a) {
            if (!(fam & (1ull << a))) continue;
            for (int b = a + 1; b < subsets; ++b) {
                if (!(fam & (1ull << b))) continue;
                if (!(fam & (1ull << (a | b))) || !(fam & (1ull << (a & b)))) {
                    closed = false;
                    break;
                }
            }
        }
        if (closed) ++count;
    }
    return count;
}

/// Homeomorphism classes of topologies on n points, ordered by canonical key.
inline std::vector<IsoClass> all_iso_classes(int n) {
    std::set<IsoClass> classes;
    for (const auto& t : labeled_topologies(n)) classes.insert(iso_of(t));
    return std::vector<IsoClass>(classes.begin(), classes.end());
}

/// Connected homeomorphism classes with 1..cap points: the free generators of H.
inline std::vector<IsoClass> connected_iso_classes(int cap) {
    std::vector<IsoClass> out;
    for (int n = 1; n <= cap; ++n)
        for (const auto& c : all_iso_classes(n))
            if (c.rep().is_connected()) out.push_back(c);
    return out;
}

/// True when no position 1..n-1 splits the labels into two relation-free
/// intervals; such topologies freely generate H_T under the shifted product.
inline bool is_interval_irreducible(const LabeledTop& a) {
    const int n = a.n();
    for (int cut = 1; cut < n; ++cut) {
        bool crossing = false;
        for (int i = 1; i <= cut && !crossing; ++i)
            for (int j = cut + 1; j <= n; ++j)
                if (a.top().leq(i, j) || a.top().leq(j, i)) {
                    crossing = true;
                    break;
                }
        if (!crossing) return false;
    }
    return n > 0;
}

/// Maximal factorization of a labeled topology under the shifted product;
/// factors are standardized. Empty input gives no factors.
inline std::vector<LabeledTop> interval_factors(const LabeledTop& a) {
    const int n = a.n();
    std::vector<LabeledTop> factors;
    int start = 1;
    for (int cut = 1; cut <= n; ++cut) {
        bool is_cut = (cut == n);
        if (!is_cut) {
            bool crossing = false;
            for (int i = 1; i <= cut && !crossing; ++i)
                for (int j = cut + 1; j <= n; ++j)
                    if (a.top().leq(i, j) || a.top().leq(j, i)) {
                        crossing = true;
                        break;
                    }
            is_cut = !crossing;
        }
        if (is_cut) {
            AtomSet seg;
            for (int i = start; i <= cut; ++i) seg.insert(i);
            factors.push_back(std_of(a.top().restrict_to(seg)));
            start = cut + 1;
        }
    }
    return factors;
}

inline std::vector<LabeledTop> irreducible_labeled(int cap) {
    std::vector<LabeledTop> out;
    for (int n = 1; n <= cap; ++n)
        for (const auto& t : labeled_topologies(n)) {
            LabeledTop a{t};
            if (is_interval_irreducible(a)) out.push_back(a);
        }
    return out;
}

} // namespace qtop
