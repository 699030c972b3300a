#pragma once

#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>

#include "qtop/rational.hpp"

namespace qtop {

// Rendering hook for basis elements. Each basis type either provides a member
// str() or overloads basis_str; pairs and tuples render as tensors.
template <typename B>
auto basis_str(const B& b) -> decltype(b.str()) {
    return b.str();
}

template <typename B1, typename B2>
std::string basis_str(const std::pair<B1, B2>& p) {
    return basis_str(p.first) + " (x) " + basis_str(p.second);
}

template <typename B1, typename B2, typename B3>
std::string basis_str(const std::tuple<B1, B2, B3>& t) {
    return basis_str(std::get<0>(t)) + " (x) " + basis_str(std::get<1>(t)) + " (x) " +
           basis_str(std::get<2>(t));
}

/// Finitely supported rational combination of basis elements of type B.
/// Zero coefficients are never stored; iteration order is the key order of B,
/// so equality and rendering are independent of insertion order.
template <typename B>
class LinComb {
public:
    using basis_type = B;
    using term_map = std::map<B, Rational>;

    LinComb() = default;
    explicit LinComb(const B& b) { terms_.emplace(b, Rational(1)); }
    LinComb(const B& b, const Rational& c) {
        if (!c.is_zero()) terms_.emplace(b, c);
    }

    static LinComb zero() { return LinComb(); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Rvalues hand the map out by value (a move), so iterating the terms of a
    // freshly computed combination never dangles.
    const term_map& terms() const& { return terms_; }
    term_map terms() && { return std::move(terms_); }

    Rational coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const B& b, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [b, c] : terms_) c *= s;
        }
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
    friend LinComb operator-(const LinComb& a) { return a * Rational(-1); }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [b, c] : terms_) {
            Rational mag = c.sign() < 0 ? -c : c;
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            if (!mag.is_one()) os << mag.str() << "*";
            os << basis_str(b);
        }
        return os.str();
    }

private:
    term_map terms_;
};

template <typename B1, typename B2>
LinComb<std::pair<B1, B2>> tensor(const LinComb<B1>& a, const LinComb<B2>& b) {
    LinComb<std::pair<B1, B2>> out;
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms()) out.add_term({x, y}, cx * cy);
    return out;
}

/// Applies f : B -> LinComb<C> linearly to a combination.
template <typename B, typename F>
auto apply_linear(const LinComb<B>& x, F&& f) {
    using C = typename std::invoke_result_t<F, const B&>::basis_type;
    LinComb<C> out;
    for (const auto& [b, c] : x.terms()) out += f(b) * c;
    return out;
}

/// Lifts f : B -> LinComb<C> to the linear map LinComb<B> -> LinComb<C>.
template <typename F>
auto extend_linear(F f) {
    return [f](const auto& x) { return apply_linear(x, f); };
}

/// Applies f to the left legs and g to the right legs of a tensor combination.
template <typename B1, typename B2, typename F, typename G>
auto apply_legs(const LinComb<std::pair<B1, B2>>& x, F&& f, G&& g) {
    using C1 = typename std::invoke_result_t<F, const B1&>::basis_type;
    using C2 = typename std::invoke_result_t<G, const B2&>::basis_type;
    LinComb<std::pair<C1, C2>> out;
    for (const auto& [bb, c] : x.terms()) out += tensor(f(bb.first), g(bb.second)) * c;
    return out;
}

} // namespace qtop
