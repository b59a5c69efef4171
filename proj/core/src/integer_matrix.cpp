#include "strata/integer_matrix.hpp"

#include <utility>

namespace strata {

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

}  // namespace

std::vector<BigInt> smith_diagonal(IntegerMatrix m) {
    std::vector<BigInt> diag;
    const std::size_t limit = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < limit; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            bool found = false;
            std::size_t pr = t, pc = t;
            for (std::size_t r = t; r < m.rows(); ++r) {
                for (std::size_t c = t; c < m.cols(); ++c) {
                    if (m(r, c) == 0) continue;
                    if (!found || abs(m(r, c)) < abs(m(pr, pc))) {
                        pr = r;
                        pc = c;
                        found = true;
                    }
                }
            }
            if (!found) return diag;
            swap_rows(m, t, pr);
            swap_cols(m, t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < m.rows(); ++r) {
                if (m(r, t) == 0) continue;
                const BigInt q = m(r, t) / m(t, t);
                for (std::size_t c = t; c < m.cols(); ++c) m(r, c) -= q * m(t, c);
                if (m(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < m.cols(); ++c) {
                if (m(t, c) == 0) continue;
                const BigInt q = m(t, c) / m(t, t);
                for (std::size_t r = t; r < m.rows(); ++r) m(r, c) -= q * m(r, t);
                if (m(t, c) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold any row with an entry the pivot does not divide.
            bool divides = true;
            for (std::size_t r = t + 1; r < m.rows() && divides; ++r) {
                for (std::size_t c = t + 1; c < m.cols(); ++c) {
                    if (m(r, c) % m(t, t) != 0) {
                        for (std::size_t cc = t; cc < m.cols(); ++cc) m(t, cc) += m(r, cc);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
        diag.push_back(abs(m(t, t)));
    }
    return diag;
}

}  // namespace strata
