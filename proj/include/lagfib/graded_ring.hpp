#pragma once

// Truncated graded commutative polynomial rings over the rationals.
//
// A ring is declared by an ordered list of weighted generators and a
// truncation weight. Elements are sparse maps from monomials to non-zero
// rational coefficients; every product silently drops terms whose weight
// exceeds the truncation. No relations are imposed: quotients such as
// h^2 = 0 are expressed in the evaluation functional instead.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lagfib/error.hpp"
#include "lagfib/rational.hpp"

namespace lagfib {

struct Generator {
    std::string name;
    unsigned weight;

    bool operator==(const Generator&) const = default;
};

class RingSpec {
public:
    const std::vector<Generator>& generators() const { return data_->generators; }
    unsigned truncation_weight() const { return data_->truncation; }
    std::size_t size() const { return data_->generators.size(); }
    unsigned weight_of(std::size_t index) const { return data_->generators[index].weight; }
    const std::string& name_of(std::size_t index) const { return data_->generators[index].name; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        const auto& gens = data_->generators;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == name) return i;
        return std::nullopt;
    }

    std::size_t require_index(std::string_view name) const {
        if (auto i = index_of(name)) return *i;
        throw UnknownGenerator("no generator named '" + std::string(name) + "'");
    }

    friend bool operator==(const RingSpec& a, const RingSpec& b) {
        return a.data_ == b.data_ ||
               (a.data_->truncation == b.data_->truncation && a.data_->generators == b.data_->generators);
    }

    friend RingSpec make_ring(std::vector<Generator> generators, unsigned truncation_weight);

private:
    struct Data {
        std::vector<Generator> generators;
        unsigned truncation;
    };
    explicit RingSpec(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    std::shared_ptr<const Data> data_;
};

// Names must be unique and non-empty, weights >= 1 and the truncation must
// be at least the largest generator weight.
inline RingSpec make_ring(std::vector<Generator> generators, unsigned truncation_weight) {
    if (truncation_weight < 1) throw InvalidWeight("truncation weight must be >= 1");
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto& g = generators[i];
        if (g.name.empty()) throw InvalidWeight("generator names must be non-empty");
        if (g.weight < 1) throw InvalidWeight("generator '" + g.name + "' has weight 0");
        if (g.weight > truncation_weight)
            throw InvalidWeight("generator '" + g.name + "' is heavier than the truncation weight");
        for (std::size_t j = 0; j < i; ++j)
            if (generators[j].name == g.name) throw DuplicateGenerator("generator '" + g.name + "' declared twice");
    }
    return RingSpec(std::make_shared<const RingSpec::Data>(RingSpec::Data{std::move(generators), truncation_weight}));
}

// A product of generators. Only non-zero exponents are stored, keyed by the
// generator's declaration index; the total weight is cached.
class Monomial {
public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>; // (generator index, exponent)

    Monomial() = default;

    static Monomial from_factors(const RingSpec& ring, std::vector<Factor> factors) {
        std::sort(factors.begin(), factors.end());
        Monomial m;
        for (const auto& [index, exp] : factors) {
            if (index >= ring.size()) throw UnknownGenerator("generator index out of range");
            if (exp == 0) continue;
            if (!m.factors_.empty() && m.factors_.back().first == index)
                m.factors_.back().second += exp;
            else
                m.factors_.push_back({index, exp});
            m.weight_ += ring.weight_of(index) * exp;
        }
        return m;
    }

    static Monomial of(const RingSpec& ring, std::initializer_list<std::pair<std::string_view, unsigned>> powers) {
        std::vector<Factor> factors;
        for (const auto& [name, exp] : powers)
            factors.push_back({static_cast<std::uint32_t>(ring.require_index(name)), exp});
        return from_factors(ring, std::move(factors));
    }

    // "c2.c2.c4": dot-separated generator names with repetition.
    static Monomial parse_dotted(const RingSpec& ring, std::string_view key) {
        std::vector<Factor> factors;
        std::size_t start = 0;
        while (start <= key.size()) {
            const auto dot = std::min(key.find('.', start), key.size());
            const auto name = key.substr(start, dot - start);
            if (name.empty()) throw ParseError("empty factor in monomial key '" + std::string(key) + "'");
            factors.push_back({static_cast<std::uint32_t>(ring.require_index(name)), 1});
            start = dot + 1;
        }
        return from_factors(ring, std::move(factors));
    }

    unsigned weight() const { return weight_; }
    bool is_unit() const { return factors_.empty(); }
    std::span<const Factor> factors() const { return factors_; }

    unsigned exponent(std::size_t index) const {
        for (const auto& [i, e] : factors_)
            if (i == index) return e;
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        m.weight_ = a.weight_ + b.weight_;
        m.factors_.reserve(a.factors_.size() + b.factors_.size());
        auto ia = a.factors_.begin();
        auto ib = b.factors_.begin();
        while (ia != a.factors_.end() || ib != b.factors_.end()) {
            if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
                m.factors_.push_back(*ia++);
            } else if (ia == a.factors_.end() || ib->first < ia->first) {
                m.factors_.push_back(*ib++);
            } else {
                m.factors_.push_back({ia->first, ia->second + ib->second});
                ++ia;
                ++ib;
            }
        }
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.weight_ == b.weight_ && a.factors_ == b.factors_;
    }

    // Canonical term order: weight ascending, then exponent vectors (in
    // declaration order) lexicographically descending, so c2^2 < c4.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.weight_ != b.weight_) return a.weight_ < b.weight_;
        auto ia = a.factors_.begin();
        auto ib = b.factors_.begin();
        for (; ia != a.factors_.end() && ib != b.factors_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first < ib->first;
            if (ia->second != ib->second) return ia->second > ib->second;
        }
        return ia != a.factors_.end() && ib == b.factors_.end();
    }

    std::string to_string(const RingSpec& ring) const {
        if (factors_.empty()) return "1";
        std::string out;
        for (const auto& [index, exp] : factors_) {
            if (!out.empty()) out += '*';
            out += ring.name_of(index);
            if (exp != 1) out += '^' + std::to_string(exp);
        }
        return out;
    }

    std::string to_dotted(const RingSpec& ring) const {
        std::string out;
        for (const auto& [index, exp] : factors_)
            for (std::uint32_t k = 0; k < exp; ++k) {
                if (!out.empty()) out += '.';
                out += ring.name_of(index);
            }
        return out;
    }

private:
    std::vector<Factor> factors_;
    unsigned weight_ = 0;
};

class GradedElement {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit GradedElement(RingSpec ring) : ring_(std::move(ring)) {}

    static GradedElement constant(const RingSpec& ring, const Rational& c) {
        return term(ring, Monomial{}, c);
    }

    static GradedElement one(const RingSpec& ring) { return constant(ring, 1); }

    static GradedElement term(const RingSpec& ring, const Monomial& m, const Rational& c) {
        GradedElement e(ring);
        e.accumulate(m, c);
        return e;
    }

    static GradedElement generator(const RingSpec& ring, std::string_view name) {
        return term(ring, Monomial::of(ring, {{name, 1}}), 1);
    }

    const RingSpec& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(Monomial{}); }

    GradedElement homogeneous_part(unsigned weight) const {
        GradedElement e(ring_);
        for (const auto& [m, c] : terms_)
            if (m.weight() == weight) e.terms_.emplace_hint(e.terms_.end(), m, c);
        return e;
    }

    // Same ring, terms above `max_weight` dropped.
    GradedElement truncated(unsigned max_weight) const {
        GradedElement e(ring_);
        for (const auto& [m, c] : terms_) {
            if (m.weight() > max_weight) break;
            e.terms_.emplace_hint(e.terms_.end(), m, c);
        }
        return e;
    }

    GradedElement& operator+=(const GradedElement& other) {
        check_same_ring(other);
        for (const auto& [m, c] : other.terms_) accumulate(m, c);
        return *this;
    }

    GradedElement& operator-=(const GradedElement& other) {
        check_same_ring(other);
        for (const auto& [m, c] : other.terms_) accumulate(m, -c);
        return *this;
    }

    GradedElement& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
    friend GradedElement operator*(GradedElement a, const Rational& s) { return a *= s; }
    friend GradedElement operator*(const Rational& s, GradedElement a) { return a *= s; }
    friend GradedElement operator-(GradedElement a) { return a *= Rational(-1); }

    friend GradedElement operator*(const GradedElement& a, const GradedElement& b) {
        a.check_same_ring(b);
        const unsigned limit = a.ring_.truncation_weight();
        GradedElement out(a.ring_);
        for (const auto& [ma, ca] : a.terms_) {
            if (ma.weight() > limit) break;
            const unsigned room = limit - ma.weight();
            // Terms are ordered by weight, so the inner scan stops at the first
            // factor that would overflow the truncation.
            for (const auto& [mb, cb] : b.terms_) {
                if (mb.weight() > room) break;
                out.accumulate(ma * mb, ca * cb);
            }
        }
        return out;
    }

    GradedElement& operator*=(const GradedElement& other) { return *this = *this * other; }

    friend bool operator==(const GradedElement& a, const GradedElement& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

    // Terms in canonical order, e.g. "1 + 1/24*c2 + 7/5760*c2^2 - 1/1440*c4".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            const bool negative = c < 0;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            const Rational magnitude = negative ? Rational(-c) : c;
            if (m.is_unit())
                out += lagfib::to_string(magnitude);
            else if (magnitude == 1)
                out += m.to_string(ring_);
            else
                out += lagfib::to_string(magnitude) + "*" + m.to_string(ring_);
        }
        return out;
    }

private:
    void check_same_ring(const GradedElement& other) const {
        if (!(ring_ == other.ring_)) throw RingMismatch("operands belong to different rings");
    }

    void accumulate(const Monomial& m, const Rational& c) {
        if (c == 0 || m.weight() > ring_.truncation_weight()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    RingSpec ring_;
    TermMap terms_;
};

inline GradedElement pow(const GradedElement& base, unsigned exp) {
    GradedElement result = GradedElement::one(base.ring());
    GradedElement square = base;
    while (exp != 0) {
        if (exp & 1u) result *= square;
        exp >>= 1;
        if (exp != 0) square *= square;
    }
    return result;
}

// Formal square root of a series with constant term 1, solved one weight at a
// time: if s is correct below weight k then the weight-k part of s is half the
// weight-k part of (a - s^2).
inline GradedElement sqrt_unit(const GradedElement& a) {
    if (a.constant_term() != 1) throw NonUnitConstantTerm("square root needs constant term 1");
    const RingSpec& ring = a.ring();
    GradedElement s = GradedElement::one(ring);
    for (unsigned k = 1; k <= ring.truncation_weight(); ++k) {
        const GradedElement residual = (a - s * s).homogeneous_part(k);
        if (!residual.is_zero()) s += residual * Rational(1, 2);
    }
    return s;
}

// Multiplicative inverse; the constant term only has to be non-zero.
inline GradedElement inverse_unit(const GradedElement& a) {
    const Rational c = a.constant_term();
    if (c == 0) throw NonUnitConstantTerm("inverse needs a non-zero constant term");
    const RingSpec& ring = a.ring();
    // 1/(c(1+u)) = (1/c) * sum (-u)^k; u is nilpotent modulo truncation.
    const GradedElement minus_u = GradedElement::one(ring) - a * (1 / c);
    GradedElement sum = GradedElement::one(ring);
    GradedElement power = GradedElement::one(ring);
    for (unsigned k = 1; k <= ring.truncation_weight(); ++k) {
        power *= minus_u;
        if (power.is_zero()) break;
        sum += power;
    }
    return sum * (1 / c);
}

inline GradedElement log_unit(const GradedElement& a) {
    if (a.constant_term() != 1) throw NonUnitConstantTerm("logarithm needs constant term 1");
    const RingSpec& ring = a.ring();
    const GradedElement u = a - GradedElement::one(ring);
    GradedElement sum(ring);
    GradedElement power = GradedElement::one(ring);
    for (unsigned k = 1; k <= ring.truncation_weight(); ++k) {
        power *= u;
        if (power.is_zero()) break;
        sum += power * Rational(k % 2 == 1 ? 1 : -1, k);
    }
    return sum;
}

inline GradedElement exp_nilpotent(const GradedElement& a) {
    if (a.constant_term() != 0) throw NonZeroConstantTerm("exponential needs constant term 0");
    const RingSpec& ring = a.ring();
    GradedElement sum = GradedElement::one(ring);
    GradedElement power = GradedElement::one(ring);
    for (unsigned k = 1; k <= ring.truncation_weight(); ++k) {
        power = power * a * Rational(1, k);
        if (power.is_zero()) break;
        sum += power;
    }
    return sum;
}

// Drops every term containing one of the named generators, i.e. substitutes
// zero for them.
inline GradedElement set_to_zero(const GradedElement& a, std::span<const std::string> names) {
    std::vector<std::size_t> killed;
    for (const auto& n : names) killed.push_back(a.ring().require_index(n));
    GradedElement out(a.ring());
    for (const auto& [m, c] : a.terms()) {
        const bool survives = std::none_of(killed.begin(), killed.end(),
                                           [&](std::size_t i) { return m.exponent(i) != 0; });
        if (survives) out += GradedElement::term(a.ring(), m, c);
    }
    return out;
}

using EvaluationMap = std::map<Monomial, Rational>;

// Linear functional on the weight-`select_weight` part. Monomials absent from
// `values` evaluate to zero; every key must have the selected weight.
inline Rational evaluate(const GradedElement& a, const EvaluationMap& values, unsigned select_weight) {
    for (const auto& [m, v] : values)
        if (m.weight() != select_weight)
            throw WeightMismatch("evaluation key " + m.to_string(a.ring()) + " has weight " +
                                 std::to_string(m.weight()) + ", expected " + std::to_string(select_weight));
    Rational total = 0;
    for (const auto& [m, c] : a.terms()) {
        if (m.weight() != select_weight) continue;
        if (auto it = values.find(m); it != values.end()) total += c * it->second;
    }
    return total;
}

// Inverse of GradedElement::to_string. Factors in a term are joined by '*';
// each is a rational literal or a generator with an optional "^exp".
inline GradedElement parse_element(const RingSpec& ring, std::string_view text) {
    std::string compact;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') compact += ch;
    if (compact.empty()) throw ParseError("empty element");

    GradedElement out(ring);
    std::size_t pos = 0;
    while (pos < compact.size()) {
        Rational sign = 1;
        if (compact[pos] == '+' || compact[pos] == '-') {
            if (compact[pos] == '-') sign = -1;
            ++pos;
        } else if (pos != 0) {
            throw ParseError("expected '+' or '-' in '" + std::string(text) + "'");
        }
        const std::size_t end = std::min(compact.find_first_of("+-", pos), compact.size());
        const std::string_view body(compact.data() + pos, end - pos);
        if (body.empty()) throw ParseError("empty term in '" + std::string(text) + "'");

        Rational coeff = sign;
        std::vector<Monomial::Factor> factors;
        std::size_t start = 0;
        while (start <= body.size()) {
            const std::size_t star = std::min(body.find('*', start), body.size());
            const std::string_view factor = body.substr(start, star - start);
            if (factor.empty()) throw ParseError("empty factor in '" + std::string(text) + "'");
            if (factor[0] >= '0' && factor[0] <= '9') {
                coeff *= parse_rational(factor);
            } else {
                const auto caret = factor.find('^');
                unsigned exp = 1;
                if (caret != std::string_view::npos) {
                    const Integer e = detail::parse_integer(factor.substr(caret + 1), text);
                    if (e < 0) throw ParseError("negative exponent in '" + std::string(text) + "'");
                    exp = static_cast<unsigned>(e);
                }
                factors.push_back({static_cast<std::uint32_t>(ring.require_index(factor.substr(0, caret))), exp});
            }
            start = star + 1;
        }
        out += GradedElement::term(ring, Monomial::from_factors(ring, std::move(factors)), coeff);
        pos = end;
    }
    return out;
}

} // namespace lagfib
