#pragma once

// Discriminant degree of a Lagrangian fibration X -> P^n with good singular
// fibres, from the characteristic number sqrt(A-hat)[X]:
//
//   deg D = 24 * (n! sqrtAhat / (d_1 ... d_n))^(1/n) = (1/2) (b_theta / (d_1 ... d_n))^(1/n)
//
// with b_theta = 48^n n! sqrtAhat. `master_equation_solve` reaches the same
// number from the three intersection integrals instead of the closed form.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "lagfib/error.hpp"
#include "lagfib/rational.hpp"

namespace lagfib {

// Exact rational r with r^n = x.
inline Rational rational_nth_root(const Rational& x, unsigned n) {
    if (n == 0) throw std::invalid_argument("rational_nth_root: n must be >= 1");
    if (x == 0) return 0;
    if (x < 0 && n % 2 == 0) throw NegativeEvenRoot(to_string(x) + " has no real root of even order " + std::to_string(n));
    const bool negative = x < 0;
    const auto [num, num_exact] = integer_nth_root(abs(numerator_of(x)), n);
    const auto [den, den_exact] = integer_nth_root(denominator_of(x), n);
    if (!num_exact || !den_exact)
        throw NotPerfectPower(to_string(x) + " has no rational root of order " + std::to_string(n));
    return Rational(negative ? Integer(-num) : num, den);
}

// Polarization type (d_1, ..., d_n) with d_1 | d_2 | ... | d_n.
class PolarizationType {
public:
    explicit PolarizationType(std::vector<Integer> d) : d_(std::move(d)) {
        if (d_.empty()) throw InvalidPolarization("polarization type must be non-empty");
        for (std::size_t i = 0; i < d_.size(); ++i) {
            if (d_[i] < 1) throw InvalidPolarization("polarization entries must be positive");
            if (i > 0 && d_[i] % d_[i - 1] != 0)
                throw InvalidPolarization(lagfib::to_string(d_[i - 1]) + " does not divide " + lagfib::to_string(d_[i]));
        }
    }

    static PolarizationType principal(unsigned n) { return PolarizationType(std::vector<Integer>(n, Integer(1))); }

    const std::vector<Integer>& entries() const { return d_; }
    unsigned dimension() const { return static_cast<unsigned>(d_.size()); }

    Integer product() const {
        Integer p = 1;
        for (const auto& d : d_) p *= d;
        return p;
    }

    std::string to_string() const {
        std::string s;
        for (const auto& d : d_) s += (s.empty() ? "" : ",") + lagfib::to_string(d);
        return s;
    }

    bool operator==(const PolarizationType&) const = default;

private:
    std::vector<Integer> d_;
};

inline Rational b_theta_from_sqrt_ahat(unsigned n, const Rational& sqrt_ahat) {
    if (n < 1) throw NonPositiveInput("n must be >= 1");
    return Rational(ipow(Integer(48), n) * factorial(n)) * sqrt_ahat;
}

namespace detail {
inline void require_positive(unsigned n, const Rational& sqrt_ahat) {
    if (n < 1) throw NonPositiveInput("n must be >= 1");
    if (sqrt_ahat <= 0) throw NonPositiveInput("sqrt(A-hat)[X] must be positive, got " + to_string(sqrt_ahat));
}
} // namespace detail

inline Rational deg_delta_principal(unsigned n, const Rational& sqrt_ahat) {
    detail::require_positive(n, sqrt_ahat);
    return 24 * rational_nth_root(Rational(factorial(n)) * sqrt_ahat, n);
}

inline Rational deg_delta_polarized(unsigned n, const PolarizationType& pol, const Rational& sqrt_ahat) {
    detail::require_positive(n, sqrt_ahat);
    if (pol.dimension() != n)
        throw InvalidPolarization("polarization (" + pol.to_string() + ") has length " +
                                  std::to_string(pol.dimension()) + ", expected " + std::to_string(n));
    return 24 * rational_nth_root(Rational(factorial(n)) * sqrt_ahat / Rational(pol.product()), n);
}

struct FujikiData {
    unsigned n = 1;
    Integer polarization_product = 1;
    Rational sqrt_ahat;
    Integer theta_multiple = 1; // Y restricts to m * Theta on a fibre
};

struct DegreeResult {
    Rational deg_delta;
    Rational b_theta;
    Rational intermediate_c2YL; // integral of c2 Y^(n-1) L^(n-1)
};

// Solves
//   (int (s sbar)^n)^(n-1) (int c2 Y^(n-1) L^(n-1))^n
//       = (int Y^n L^n)^(n-1) (int c2 (s sbar)^(n-1))^n
// with int Y^n L^n = n! m^n P, the sigma ratio 24^n (n!)^2 / n^n * sqrtAhat,
// and int c2 Y^(n-1) L^(n-1) = (n-1)! m^(n-1) P deg D.
inline DegreeResult master_equation_solve(const FujikiData& data) {
    detail::require_positive(data.n, data.sqrt_ahat);
    if (data.polarization_product < 1) throw NonPositiveInput("polarization product must be positive");
    if (data.theta_multiple < 1) throw NonPositiveInput("theta multiple must be positive");
    const unsigned n = data.n;
    const Integer n_fact = factorial(n);
    const Integer m = data.theta_multiple;
    const Integer& product = data.polarization_product;

    const Rational yl = Rational(n_fact * ipow(m, n) * product);
    const Rational sigma_ratio = Rational(ipow(Integer(24), n) * n_fact * n_fact, ipow(Integer(n), n)) * data.sqrt_ahat;
    const Rational c2yl = rational_nth_root(ipow(yl, n - 1) * sigma_ratio, n);
    const Rational deg = c2yl / Rational(factorial(n - 1) * ipow(m, n - 1) * product);

    return {deg, b_theta_from_sqrt_ahat(n, data.sqrt_ahat), c2yl};
}

// A candidate semi-stable degeneration: k P^1-bundles glued in a cycle, with
// the limiting divisor of type (d'_1, ..., d'_{n-1}) on each singular component.
struct DegenerationModel {
    Integer k;
    std::vector<Integer> d_prime;

    bool operator==(const DegenerationModel&) const = default;
};

// All (k, d') with d_i | d'_i and d_1 ... d_n = d'_1 ... d'_{n-1} k, sorted by
// k then d'. Writing d'_i = d_i e_i reduces this to ordered factorizations
// e_1 ... e_{n-1} = d_n / k over the divisors k of d_n.
//
// For n = 1 there is no abelian part and the product condition forces k = d_1.
inline std::vector<DegenerationModel> degeneration_models(const PolarizationType& pol) {
    const auto& d = pol.entries();
    const std::size_t slots = d.size() - 1;
    const Integer& last = d.back();

    std::vector<Integer> divisors;
    for (Integer k = 1; k * k <= last; ++k)
        if (last % k == 0) {
            divisors.push_back(k);
            if (k * k != last) divisors.push_back(last / k);
        }
    std::sort(divisors.begin(), divisors.end());

    std::vector<DegenerationModel> models;
    std::vector<Integer> e(slots);
    // Fill e[i..] so that their product is `rest`, in lexicographic order.
    auto fill = [&](auto&& self, std::size_t i, const Integer& rest, const Integer& k) -> void {
        if (i == slots) {
            if (rest != 1) return;
            DegenerationModel model{k, {}};
            for (std::size_t j = 0; j < slots; ++j) model.d_prime.push_back(d[j] * e[j]);
            models.push_back(std::move(model));
            return;
        }
        if (i + 1 == slots) {
            e[i] = rest;
            self(self, i + 1, Integer(1), k);
            return;
        }
        for (const auto& f : divisors) {
            if (f > rest) break;
            if (rest % f != 0) continue;
            e[i] = f;
            self(self, i + 1, rest / f, k);
        }
    };
    for (const auto& k : divisors) fill(fill, 0, last / k, k);

    // Entries d'_i = d_i e_i are ordered like e when d is fixed, but not
    // necessarily lexicographically in d', so sort explicitly.
    std::sort(models.begin(), models.end(), [](const DegenerationModel& a, const DegenerationModel& b) {
        if (a.k != b.k) return a.k < b.k;
        return a.d_prime < b.d_prime;
    });
    return models;
}

enum class KnownFamily { hilbert_scheme, generalized_kummer };

inline std::string to_string(KnownFamily f) {
    return f == KnownFamily::hilbert_scheme ? "hilbert_scheme" : "generalized_kummer";
}

// b_theta^n for S^[n] and K_n.
inline Rational known_example_b_theta(KnownFamily family, unsigned n) {
    if (n < 1) throw NonPositiveInput("n must be >= 1");
    const Integer twelve_n = ipow(Integer(12), n);
    if (family == KnownFamily::hilbert_scheme) return Rational(twelve_n * ipow(Integer(n + 3), n));
    return Rational(twelve_n * ipow(Integer(n + 1), n + 1));
}

inline Rational known_example_sqrt_ahat(KnownFamily family, unsigned n) {
    return known_example_b_theta(family, n) / Rational(ipow(Integer(48), n) * factorial(n));
}

// (1, ..., 1) for S^[n]; (1, ..., 1, n+1) for K_n.
inline PolarizationType known_example_polarization(KnownFamily family, unsigned n) {
    if (n < 1) throw NonPositiveInput("n must be >= 1");
    std::vector<Integer> d(n, Integer(1));
    if (family == KnownFamily::generalized_kummer) d.back() = n + 1;
    return PolarizationType(std::move(d));
}

} // namespace lagfib
