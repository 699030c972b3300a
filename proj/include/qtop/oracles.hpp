#pragma once

// Reference implementations used only for cross-checking: deliberately naive,
// written independently of the algorithms they validate.

#include <vector>

#include "qtop/enumerate.hpp"
#include "qtop/qposet.hpp"
#include "qtop/setcomp.hpp"

namespace qtop::oracle {

/// Reflexive-transitive closure by iterated boolean matrix product.
inline std::vector<std::vector<bool>> naive_closure(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) m[i][i] = true;
    for (auto [a, b] : arcs) m[a][b] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<bool>> sq = m;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (sq[i][j]) continue;
                for (int k = 0; k < n; ++k)
                    if (m[i][k] && m[k][j]) {
                        sq[i][j] = true;
                        changed = true;
                        break;
                    }
            }
        m = std::move(sq);
    }
    return m;
}

/// Admissible refinements straight from the definition: filter every topology
/// on the same atoms by refinement, agreement on all connected subsets, and
/// the equivalence condition on the quotients.
inline std::vector<QPoset> definitional_admissible_refinements(const QPoset& t) {
    std::vector<QPoset> out;
    const int n = static_cast<int>(t.size());
    for (const QPoset& tp : all_topologies(t.atom_set())) {
        if (!is_finer(tp, t)) continue;
        bool ok = true;
        const QPoset::Mask full = t.full_mask();
        for (QPoset::Mask y = 0; ok && y <= full; ++y) {
            if (!tp.connected_mask(y)) continue;
            if (tp.restrict_mask(y) != t.restrict_mask(y)) ok = false;
            if (y == full) break;
        }
        if (!ok) continue;
        if (quotient(t, tp).class_masks() != quotient(tp, tp).class_masks()) continue;
        out.push_back(tp);
        if (n == 0) break; // single empty topology
    }
    return out;
}

/// Product of set compositions by filtering every composition of the union.
inline LinComb<SetComposition> brute_sc_product(const SetComposition& a, const SetComposition& b) {
    AtomSet ground = a.ground();
    for (int x : b.ground()) ground.insert(x);
    LinComb<SetComposition> out;
    for (const auto& c : all_set_compositions(ground))
        if (sc_restrict(c, a.ground()) == a && sc_restrict(c, b.ground()) == b) out.add_term(c, 1);
    return out;
}

/// Linear extensions by filtering every set composition against the two
/// defining conditions.
inline std::vector<SetComposition> brute_linear_extensions(const QPoset& t) {
    std::vector<SetComposition> out;
    for (const auto& c : all_set_compositions(t.atom_set())) {
        bool ok = true;
        const auto& blocks = c.blocks();
        for (std::size_t i = 0; ok && i < blocks.size(); ++i)
            for (std::size_t j = 0; ok && j < blocks.size(); ++j)
                for (int x : blocks[i]) {
                    bool stop = false;
                    for (int y : blocks[j]) {
                        if (t.leq(x, y) && !t.leq(y, x) && !(i < j)) { ok = false; stop = true; break; }
                        if (t.leq(x, y) && t.leq(y, x) && i != j) { ok = false; stop = true; break; }
                    }
                    if (stop) break;
                }
        if (ok) out.push_back(c);
    }
    return out;
}

/// Number of relabelling orbits of the topologies on {1,..,n}, computed with
/// explicit permutations (no canonical forms involved).
inline std::size_t iso_orbit_count(int n) {
    auto tops = labeled_topologies(n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<QPoset> seen;
    std::size_t orbits = 0;
    for (const auto& t : tops) {
        if (seen.count(t)) continue;
        ++orbits;
        for (const auto& p : perms) {
            std::map<int, int> phi;
            for (int i = 0; i < n; ++i) phi[i + 1] = p[i];
            seen.insert(t.relabel(phi));
        }
    }
    return orbits;
}

} // namespace qtop::oracle
