#include "strata/hironaka.hpp"

#include <algorithm>
#include <numeric>

#include "strata/error.hpp"

namespace strata {

void check_covector_space(const CovectorSpace& u) {
    if (u.e < 1 || u.e > u.n) {
        throw Error(ErrorKind::InvalidArgument,
                    "need 1 <= e <= n, got e=" + std::to_string(u.e) + " n=" + std::to_string(u.n));
    }
    for (const auto& row : u.rows) {
        if (row.size() != u.n) {
            throw Error(ErrorKind::InvalidArgument,
                        "row of length " + std::to_string(row.size()) + " in dimension " + std::to_string(u.n));
        }
    }
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            const Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::size_t strict_tangent_dimension(const CovectorSpace& u) {
    check_covector_space(u);
    return u.n - rational_rank(u.rows);
}

std::size_t t_value(const CovectorSpace& u, const std::vector<std::size_t>& j) {
    check_covector_space(u);
    std::vector<std::size_t> labels = j;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    for (std::size_t l : labels) {
        if (l < 1 || l > u.e) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "coordinate " + std::to_string(l) + " outside 1.." + std::to_string(u.e));
        }
    }
    const std::size_t ru = rational_rank(u.rows);
    auto all = u.rows;
    for (std::size_t l : labels) {
        std::vector<Rational> coord(u.n, Rational(0));
        coord[l - 1] = 1;
        all.push_back(std::move(coord));
    }
    return ru + labels.size() - rational_rank(std::move(all));
}

TSequence t_sequence(const CovectorSpace& u) {
    check_covector_space(u);
    // A maximal chain is fixed by the order in which coordinates are dropped.
    // Orders are visited from "drop the last coordinate first" downwards, so
    // ties resolve to the chain {1..e} ⊋ {1..e-1} ⊋ ... when it is maximal.
    std::vector<std::size_t> order(u.e);
    std::iota(order.rbegin(), order.rend(), 1);
    TSequence best;
    bool first = true;
    do {
        TSequence cur;
        std::vector<std::size_t> current(u.e);
        std::iota(current.begin(), current.end(), 1);
        for (std::size_t step = 0; step < u.e; ++step) {
            cur.values.push_back(t_value(u, current));
            cur.chain.push_back(current);
            current.erase(std::find(current.begin(), current.end(), order[step]));
        }
        if (first || cur.values > best.values) {
            best = std::move(cur);
            first = false;
        }
    } while (std::prev_permutation(order.begin(), order.end()));
    return best;
}

std::size_t theta(const CovectorSpace& u) {
    std::vector<std::size_t> all(u.e);
    std::iota(all.begin(), all.end(), 1);
    return t_value(u, all);
}

int zeta(const CovectorSpace& u) {
    const std::size_t d = strict_tangent_dimension(u);
    if (d <= 1) return 0;
    const TSequence t = t_sequence(u);
    auto describe = [&] {
        std::string s = "(";
        for (std::size_t k = 0; k < t.values.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(t.values[k]);
        }
        return "d=" + std::to_string(d) + " e=" + std::to_string(u.e) + " t=" + s + ")";
    };
    if (d != 2) throw Error(ErrorKind::UnclassifiedTSequence, "no zeta case for " + describe());
    using V = std::vector<std::size_t>;
    if (t.values.front() == 0) return 0;
    if (u.e == 3 && t.values == V{1, 0, 0}) return 1;
    if (u.e >= 2 && (t.values == V{1, 0} || t.values == V{1, 1, 0})) return 2;
    if (u.e >= 2 && (t.values == V{1, 1} || t.values == V{1, 1, 1})) return 3;
    throw Error(ErrorKind::UnclassifiedTSequence, "no zeta case for " + describe());
}

std::string ControlInvariant::to_string() const {
    return "(" + std::to_string(nu) + "," + std::to_string(d) + "," + std::to_string(zeta) + ")";
}

std::strong_ordering compare_invariants(const ControlInvariant& a, const ControlInvariant& b) {
    return a <=> b;
}

ControlInvariant control_invariant(const CovectorSpace& u, std::size_t nu) {
    if (nu == 0) {
        check_covector_space(u);
        return {};
    }
    return {nu, strict_tangent_dimension(u), zeta(u)};
}

}  // namespace strata
