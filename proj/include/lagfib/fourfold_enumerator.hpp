#pragma once

// Admissible invariants of Lagrangian fibrations X -> P^2 on irreducible
// holomorphic symplectic four-folds with polarization of type (1, d).
//
// Guan's Betti numbers fix b4 (Salamon), c4 = chi(X), and with A-hat[X] = 3
// also c2^2; then 1152 sqrtAhat[X] = 992 - 4 b2 + b3 =: rw, and the fibration
// needs deg D^2 d = rw.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagfib/char_classes.hpp"
#include "lagfib/error.hpp"
#include "lagfib/rational.hpp"

namespace lagfib {

struct BettiPair {
    std::int64_t b2;
    std::int64_t b3;

    auto operator<=>(const BettiPair&) const = default;
};

// Guan's list, in the order the bounds are usually quoted.
inline std::vector<BettiPair> guan_table() {
    struct Range {
        std::int64_t b2;
        std::int64_t max_b3;
        bool only_endpoints;
    };
    // b2 = 7 allows b3 = 0 or 8 only; every other row is 0, 4, ..., max.
    static constexpr Range ranges[] = {
        {23, 0, false}, {8, 0, false}, {7, 8, true}, {6, 16, false}, {5, 36, false}, {4, 60, false}, {3, 68, false},
    };
    std::vector<BettiPair> table;
    for (const auto& r : ranges) {
        if (r.only_endpoints) {
            table.push_back({r.b2, 0});
            table.push_back({r.b2, r.max_b3});
            continue;
        }
        for (std::int64_t b3 = 0; b3 <= r.max_b3; b3 += 4) table.push_back({r.b2, b3});
    }
    return table;
}

inline bool in_guan_table(const BettiPair& betti) {
    const auto table = guan_table();
    return std::find(table.begin(), table.end(), betti) != table.end();
}

struct FourfoldInvariants {
    BettiPair betti;
    std::int64_t b4;
    std::int64_t c4;
    std::int64_t c2_squared;
    Rational sqrt_ahat;
    std::int64_t rw; // 1152 * sqrtAhat[X]
};

inline FourfoldInvariants invariants_from_betti(const BettiPair& betti) {
    if (!in_guan_table(betti))
        throw NotInGuanTable("(b2, b3) = (" + std::to_string(betti.b2) + ", " + std::to_string(betti.b3) +
                             ") is not allowed");
    FourfoldInvariants inv{};
    inv.betti = betti;
    inv.b4 = 46 + 10 * betti.b2 - betti.b3;
    inv.c4 = 48 + 12 * betti.b2 - 3 * betti.b3;
    // A-hat[X] = (3 c2^2 - c4) / 720 = 3
    inv.c2_squared = (2160 + inv.c4) / 3;
    inv.rw = 992 - 4 * betti.b2 + betti.b3;

    static const CharacteristicSeries sqrt_ahat = sqrt_ahat_series(4);
    const ChernNumbers chern = make_chern_numbers("", 4, {{{2, 2}, inv.c2_squared}, {{4}, inv.c4}});
    inv.sqrt_ahat = characteristic_number(sqrt_ahat, chern);
    if (inv.sqrt_ahat * 1152 != inv.rw || 3 * inv.rw != 3024 - inv.c4)
        throw std::logic_error("four-fold invariants disagree for b2 = " + std::to_string(betti.b2));
    return inv;
}

struct CensusRow {
    FourfoldInvariants invariants;
    std::int64_t d;
    std::int64_t deg_delta_squared;         // rw / d
    std::optional<std::int64_t> deg_delta;  // set when rw / d is a perfect square
};

namespace detail {

inline std::optional<std::int64_t> exact_isqrt(std::int64_t x) {
    const auto [root, exact] = integer_nth_root(Integer(x), 2);
    if (!exact) return std::nullopt;
    return static_cast<std::int64_t>(root);
}

inline std::vector<CensusRow> census_rows_for(const BettiPair& betti, bool require_integer_degree) {
    std::vector<CensusRow> rows;
    const FourfoldInvariants inv = invariants_from_betti(betti);
    for (std::int64_t d = 1; d <= inv.rw; ++d) {
        if (inv.rw % d != 0) continue;
        const std::int64_t sq = inv.rw / d;
        const auto root = exact_isqrt(sq);
        if (require_integer_degree && !root) continue;
        rows.push_back({inv, d, sq, root});
    }
    return rows;
}

} // namespace detail

// Candidate (b2, b3, d, deg D) combinations, sorted by (b2, b3, d). b2 = 3 is
// excluded: the fibre class is isotropic for a form of signature (3, b2 - 3).
// `workers` > 1 splits the Guan pairs across threads; the output is the same.
inline std::vector<CensusRow> census(bool require_integer_degree = true, unsigned workers = 1) {
    std::vector<BettiPair> pairs;
    for (const auto& p : guan_table())
        if (p.b2 >= 4) pairs.push_back(p);

    std::vector<CensusRow> rows;
    if (workers <= 1) {
        for (const auto& p : pairs) {
            auto part = detail::census_rows_for(p, require_integer_degree);
            rows.insert(rows.end(), part.begin(), part.end());
        }
    } else {
        std::vector<std::future<std::vector<CensusRow>>> jobs;
        for (unsigned w = 0; w < workers; ++w)
            jobs.push_back(std::async(std::launch::async, [&pairs, w, workers, require_integer_degree] {
                std::vector<CensusRow> local;
                for (std::size_t i = w; i < pairs.size(); i += workers) {
                    auto part = detail::census_rows_for(pairs[i], require_integer_degree);
                    local.insert(local.end(), part.begin(), part.end());
                }
                return local;
            }));
        for (auto& job : jobs) {
            auto part = job.get();
            rows.insert(rows.end(), part.begin(), part.end());
        }
    }
    std::sort(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) {
        if (a.invariants.betti != b.invariants.betti) return a.invariants.betti < b.invariants.betti;
        return a.d < b.d;
    });
    return rows;
}

struct CensusBounds {
    std::int64_t max_d;
    std::int64_t max_deg;
    std::int64_t max_rw;
};

// Rows without an integral degree contribute floor(sqrt(rw / d)).
inline CensusBounds bounds_summary(const std::vector<CensusRow>& rows) {
    if (rows.empty()) throw EmptyCensus("no census rows to summarize");
    CensusBounds b{0, 0, 0};
    for (const auto& row : rows) {
        b.max_d = std::max(b.max_d, row.d);
        b.max_rw = std::max(b.max_rw, row.invariants.rw);
        const std::int64_t deg = row.deg_delta
                                     ? *row.deg_delta
                                     : static_cast<std::int64_t>(integer_nth_root(Integer(row.deg_delta_squared), 2).first);
        b.max_deg = std::max(b.max_deg, deg);
    }
    return b;
}

} // namespace lagfib
