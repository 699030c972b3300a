#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qtop/lincomb.hpp"
#include "qtop/moulds.hpp"
#include "qtop/qposet.hpp"
#include "qtop/setcomp.hpp"
#include "qtop/topalg.hpp"
#include "qtop/wordalg.hpp"

namespace qtop {

using nlohmann::json;

inline json qposet_to_json(const QPoset& t) {
    json atoms = json::array();
    for (int a : t.atoms()) atoms.push_back(a);
    json leq = json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < t.size(); ++j)
            row.push_back(bool(t.rows()[i] & QPoset::bit(static_cast<int>(j))));
        leq.push_back(std::move(row));
    }
    return json{{"atoms", std::move(atoms)}, {"leq", std::move(leq)}};
}

inline QPoset qposet_from_json(const json& j) {
    if (!j.is_object() || !j.contains("atoms") || !j.contains("leq"))
        throw InputError("topology JSON must have \"atoms\" and \"leq\" fields");
    AtomSet atoms;
    for (const auto& a : j.at("atoms")) {
        int v = a.get<int>();
        if (!atoms.insert(v).second) throw InputError("topology JSON: repeated atom");
    }
    std::vector<std::vector<bool>> leq;
    for (const auto& row : j.at("leq")) leq.push_back(row.get<std::vector<bool>>());
    return QPoset::from_leq(atoms, leq);
}

inline json to_json(const QPoset& t) { return qposet_to_json(t); }
inline json to_json(const IsoClass& c) { return qposet_to_json(c.rep()); }
inline json to_json(const LabeledTop& a) { return qposet_to_json(a.top()); }

inline json to_json(const SetComposition& c) {
    json blocks = json::array();
    for (const auto& b : c.blocks()) {
        json block = json::array();
        for (int x : b) block.push_back(x);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

inline json to_json(const Composition& c) {
    json parts = json::array();
    for (int p : c.parts()) parts.push_back(p);
    return parts;
}

/// Canonical comma-separated form, e.g. "1,1,2".
inline json to_json(const PackedWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.letters()[i]);
    }
    return json(s);
}

inline json to_json(const Seq& w) {
    json entries = json::array();
    for (int e : w.entries()) entries.push_back(e);
    return entries;
}

/// Map form: rendered basis element -> coefficient in lowest terms.
template <typename B>
json lincomb_to_json(const LinComb<B>& x) {
    json terms = json::object();
    for (const auto& [b, c] : x.terms()) terms[basis_str(b)] = c.str();
    return terms;
}

namespace detail {
inline std::vector<std::uint8_t> tensor_sort_key(const QPoset& t) { return canonical_form(t); }
inline std::vector<std::uint8_t> tensor_sort_key(const IsoClass& c) { return c.key(); }
inline std::vector<std::uint8_t> tensor_sort_key(const LabeledTop& a) { return canonical_form(a.top()); }
} // namespace detail

/// Tensor rendering: list of {left, right, coeff}, ordered by (canonical key
/// of the left leg, canonical key of the right leg), with the raw value as a
/// final tiebreak.
template <typename B1, typename B2>
json tensor_to_json(const LinComb<std::pair<B1, B2>>& x) {
    using Term = std::pair<std::pair<B1, B2>, Rational>;
    std::vector<Term> terms(x.terms().begin(), x.terms().end());
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        auto ka = std::make_pair(detail::tensor_sort_key(a.first.first),
                                 detail::tensor_sort_key(a.first.second));
        auto kb = std::make_pair(detail::tensor_sort_key(b.first.first),
                                 detail::tensor_sort_key(b.first.second));
        if (ka != kb) return ka < kb;
        return a.first < b.first;
    });
    json out = json::array();
    for (const auto& [legs, coeff] : terms)
        out.push_back(json{{"left", to_json(legs.first)}, {"right", to_json(legs.second)}, {"coeff", coeff.str()}});
    return out;
}

} // namespace qtop
