#pragma once

// Multiplicative sequences in Chern classes: the A-hat genus and its formal
// square root, plus characteristic numbers built from them.
//
// A-hat is assembled as exp(sum_m a_m p_m), where p_m are the power sums of
// the Chern roots (Newton's identities) and sum_m a_m x^m = log Q(x) with
// Q(x) = (x/2)/sinh(x/2). No coefficient table is hard-coded.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "lagfib/error.hpp"
#include "lagfib/graded_ring.hpp"
#include "lagfib/rational.hpp"

namespace lagfib {

// c1, ..., c_N with weight(c_i) = i, truncated at N.
inline RingSpec chern_ring(unsigned max_weight) {
    if (max_weight < 1) throw InvalidWeight("Chern ring needs max_weight >= 1");
    std::vector<Generator> gens;
    for (unsigned i = 1; i <= max_weight; ++i) gens.push_back({"c" + std::to_string(i), i});
    return make_ring(std::move(gens), max_weight);
}

// p_1, ..., p_N in c_1, ..., c_N, from
//   p_k = sum_{i=1}^{k-1} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k.
inline std::vector<GradedElement> power_sums_from_chern(unsigned max_weight) {
    const RingSpec ring = chern_ring(max_weight);
    std::vector<GradedElement> c;
    for (unsigned i = 1; i <= max_weight; ++i) c.push_back(GradedElement::generator(ring, ring.name_of(i - 1)));

    std::vector<GradedElement> p;
    for (unsigned k = 1; k <= max_weight; ++k) {
        GradedElement pk = c[k - 1] * Rational(k % 2 == 1 ? int(k) : -int(k));
        for (unsigned i = 1; i < k; ++i) {
            const GradedElement step = c[i - 1] * p[k - i - 1];
            if (i % 2 == 1)
                pk += step;
            else
                pk -= step;
        }
        p.push_back(std::move(pk));
    }
    return p;
}

// a_1, ..., a_N with log((x/2)/sinh(x/2)) = sum a_m x^m (odd ones vanish).
inline std::vector<Rational> log_q_coefficients(unsigned max_weight) {
    const RingSpec line = make_ring({{"x", 1}}, max_weight);
    // sinh(x/2)/(x/2) = sum_k x^{2k} / (4^k (2k+1)!)
    GradedElement sinhc = GradedElement::one(line);
    for (unsigned k = 1; 2 * k <= max_weight; ++k) {
        const Rational c(Integer(1), ipow(Integer(4), k) * factorial(2 * k + 1));
        sinhc += GradedElement::term(line, Monomial::of(line, {{"x", 2 * k}}), c);
    }
    const GradedElement log_q = log_unit(inverse_unit(sinhc));
    std::vector<Rational> a;
    for (unsigned m = 1; m <= max_weight; ++m) a.push_back(log_q.coefficient(Monomial::of(line, {{"x", m}})));
    return a;
}

enum class Genus { ahat, sqrt_ahat };

inline std::string to_string(Genus g) { return g == Genus::ahat ? "ahat" : "sqrt-ahat"; }

struct CharacteristicSeries {
    GradedElement element;
    Genus source;

    unsigned max_weight() const { return element.ring().truncation_weight(); }
};

inline CharacteristicSeries ahat_series(unsigned max_weight) {
    if (max_weight < 2) throw InvalidWeight("A-hat series needs max_weight >= 2");
    const auto p = power_sums_from_chern(max_weight);
    const auto a = log_q_coefficients(max_weight);
    GradedElement log_ahat(p.front().ring());
    for (unsigned m = 1; m <= max_weight; ++m)
        if (a[m - 1] != 0) log_ahat += p[m - 1] * a[m - 1];
    return {exp_nilpotent(log_ahat), Genus::ahat};
}

inline CharacteristicSeries sqrt_ahat_series(unsigned max_weight) {
    return {sqrt_unit(ahat_series(max_weight).element), Genus::sqrt_ahat};
}

inline CharacteristicSeries series_for(Genus genus, unsigned max_weight) {
    return genus == Genus::ahat ? ahat_series(max_weight) : sqrt_ahat_series(max_weight);
}

// Holomorphic symplectic specialization: c1 = c3 = c5 = ... = 0.
inline GradedElement with_odd_chern_zero(const GradedElement& e) {
    std::vector<std::string> odd;
    for (std::size_t i = 0; i < e.ring().size(); ++i)
        if (e.ring().weight_of(i) % 2 == 1) odd.push_back(e.ring().name_of(i));
    return set_to_zero(e, odd);
}

// A Chern monomial as the multiset of class indices, e.g. c2^2 c4 -> {2, 2, 4}.
using ChernPartition = std::vector<unsigned>;

struct ChernNumbers {
    std::string name;
    unsigned complex_dimension = 0;
    std::map<ChernPartition, Integer> values;
};

// Sorts each partition and checks it has weight complex_dimension.
inline ChernNumbers make_chern_numbers(std::string name, unsigned complex_dimension,
                                       const std::vector<std::pair<ChernPartition, Integer>>& values) {
    if (complex_dimension < 1) throw InvalidWeight("complex dimension must be >= 1");
    ChernNumbers out{std::move(name), complex_dimension, {}};
    for (auto [partition, value] : values) {
        unsigned weight = 0;
        for (unsigned part : partition) {
            if (part < 1) throw InvalidWeight("c0 is not a Chern monomial factor");
            weight += part;
        }
        if (weight != complex_dimension)
            throw WeightMismatch("Chern monomial of weight " + std::to_string(weight) + " in dimension " +
                                 std::to_string(complex_dimension));
        std::sort(partition.begin(), partition.end());
        if (!out.values.emplace(std::move(partition), std::move(value)).second)
            throw DuplicateGenerator("Chern monomial listed twice");
    }
    return out;
}

inline Rational characteristic_number(const CharacteristicSeries& series, const ChernNumbers& chern) {
    const RingSpec& ring = series.element.ring();
    if (chern.complex_dimension > series.max_weight())
        throw WeightMismatch("series truncated at weight " + std::to_string(series.max_weight()) +
                             " cannot evaluate a manifold of dimension " + std::to_string(chern.complex_dimension));
    EvaluationMap values;
    for (const auto& [partition, v] : chern.values) {
        std::vector<Monomial::Factor> factors;
        for (unsigned part : partition) factors.push_back({part - 1, 1});
        values.emplace(Monomial::from_factors(ring, std::move(factors)), Rational(v));
    }
    return evaluate(series.element, values, chern.complex_dimension);
}

} // namespace lagfib
