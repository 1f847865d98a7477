#pragma once

// Discriminant degree from a pencil of curves on a surface S with c1(S) = 0.
//
// Singular members of a pencil in |C| are the zeros of a section of
// O(C,1) + T*S(C,1) on S x P^1, so deg D = c3 of that rank-3 bundle. The
// cohomology of S x P^1 is modelled by the free ring on C, h (weight 1) and
// g = c2(S) (weight 2); the relations h^2 = 0, C^3 = 0 and so on are applied
// at evaluation time, where only C^2 h -> C.C and h g -> c2(S) survive.

#include "lagfib/error.hpp"
#include "lagfib/graded_ring.hpp"
#include "lagfib/rational.hpp"

namespace lagfib {

struct SurfaceData {
    bool c1_is_zero = true;
    Integer c2_number = 0;               // Euler characteristic of S
    Integer curve_self_intersection = 0; // C.C = 2g - 2

    static SurfaceData k3(unsigned n) { return {true, 24, 2 * Integer(n) - 2}; }
    static SurfaceData abelian(unsigned n) { return {true, 0, 2 * (Integer(n) + 1)}; }
};

inline RingSpec surface_pencil_ring() { return make_ring({{"C", 1}, {"h", 1}, {"g", 2}}, 3); }

// Total Chern class of O(D) + T*S(D) for D = C + h.
inline GradedElement pencil_bundle_chern_class(const RingSpec& ring) {
    const auto one = GradedElement::one(ring);
    const auto divisor = GradedElement::generator(ring, "C") + GradedElement::generator(ring, "h");
    const auto c2_surface = GradedElement::generator(ring, "g");
    // For rank 2 with c1(T*S) = 0: c(T*S (x) O(D)) = 1 + 2D + (c2(S) + D^2).
    const auto twisted_cotangent = one + divisor * Rational(2) + c2_surface + divisor * divisor;
    return (one + divisor) * twisted_cotangent;
}

inline EvaluationMap surface_pencil_evaluation(const RingSpec& ring, const SurfaceData& surface) {
    return {
        {Monomial::of(ring, {{"C", 2}, {"h", 1}}), Rational(surface.curve_self_intersection)},
        {Monomial::of(ring, {{"h", 1}, {"g", 1}}), Rational(surface.c2_number)},
    };
}

inline Integer pencil_degree(const SurfaceData& surface) {
    if (!surface.c1_is_zero) throw InvalidSurface("pencil computation assumes c1(S) = 0");
    if (surface.curve_self_intersection % 2 != 0)
        throw InvalidSurface("C.C = " + to_string(surface.curve_self_intersection) + " is odd");
    const RingSpec ring = surface_pencil_ring();
    const GradedElement c3 = pencil_bundle_chern_class(ring).homogeneous_part(3);
    const Rational degree = evaluate(c3, surface_pencil_evaluation(ring, surface), 3);
    if (!is_integer(degree)) throw NonIntegerResult("pencil degree " + to_string(degree) + " is not an integer");
    return numerator_of(degree);
}

} // namespace lagfib
