#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qsix/trunc_series.hpp"

namespace qsix {

// Two-level series: a truncated series in x whose coefficients are
// truncated series in y over Laurent polynomials in q. The outer and inner
// truncation orders are tracked independently; equality is nested
// coefficient-wise equality.
struct SeriesTower {
    SeriesTower(long outer, long inner)
        : cols(outer + 1, TruncSeries<Laurent>(inner)), inner_order(inner) {}

    long outer_order() const { return static_cast<long>(cols.size()) - 1; }

    std::vector<TruncSeries<Laurent>> cols;  // cols[l] = coefficient of x^l
    long inner_order;

    bool operator==(const SeriesTower& o) const {
        return inner_order == o.inner_order && cols == o.cols;
    }
    bool operator!=(const SeriesTower& o) const { return !(*this == o); }
};

// First (x-degree, y-degree) position where two towers disagree.
inline std::optional<std::pair<long, long>> tower_mismatch(const SeriesTower& a,
                                                           const SeriesTower& b) {
    const long outer = std::min(a.outer_order(), b.outer_order());
    for (long l = 0; l <= outer; ++l) {
        long d = first_mismatch(a.cols[l], b.cols[l]);
        if (d >= 0) return std::make_pair(l, d);
    }
    return std::nullopt;
}

inline bool tower_is_zero(const SeriesTower& t) {
    for (const auto& col : t.cols)
        if (!col.is_zero()) return false;
    return true;
}

}  // namespace qsix
