#include "bnloci/smith.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace bnloci {

namespace {

BigMatrix identity(std::size_t n) {
    BigMatrix m(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

void swap_rows(BigMatrix& m, std::size_t a, std::size_t b) {
    if (a != b) std::swap(m[a], m[b]);
}

void swap_cols(BigMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : m) std::swap(row[a], row[b]);
}

// row[a] += factor * row[b]
void add_row(BigMatrix& m, std::size_t a, std::size_t b, const BigInt& factor) {
    const std::size_t cols = m[a].size();
    for (std::size_t j = 0; j < cols; ++j) m[a][j] += factor * m[b][j];
}

// col[a] += factor * col[b]
void add_col(BigMatrix& m, std::size_t a, std::size_t b, const BigInt& factor) {
    for (auto& row : m) row[a] += factor * row[b];
}

void negate_row(BigMatrix& m, std::size_t a) {
    for (auto& v : m[a]) v = -v;
}

// Smallest nonzero |entry| in the trailing submatrix starting at (t, t).
bool find_pivot(const BigMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    BigInt best = 0;
    for (std::size_t i = t; i < d.size(); ++i) {
        for (std::size_t j = t; j < d[i].size(); ++j) {
            if (d[i][j] == 0) continue;
            const BigInt mag = abs(d[i][j]);
            if (!found || mag < best) {
                found = true;
                best = mag;
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

bool row_col_clear(const BigMatrix& d, std::size_t t) {
    for (std::size_t i = t + 1; i < d.size(); ++i) {
        if (d[i][t] != 0) return false;
    }
    for (std::size_t j = t + 1; j < d[t].size(); ++j) {
        if (d[t][j] != 0) return false;
    }
    return true;
}

}  // namespace

SmithDecomposition smith_normal_form(const BigMatrix& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& row : a) {
        if (row.size() != cols) throw std::invalid_argument("smith: ragged matrix");
    }

    SmithDecomposition out{identity(rows), a, identity(cols)};
    BigMatrix& d = out.diag;

    const std::size_t steps = rows < cols ? rows : cols;
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(d, t, pi, pj)) break;  // trailing block is zero
        swap_rows(d, t, pi);
        swap_rows(out.left, t, pi);
        swap_cols(d, t, pj);
        swap_cols(out.right, t, pj);

        while (true) {
            // Clear column t below the pivot, then row t to its right.
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d[i][t] == 0) continue;
                const BigInt q = d[i][t] / d[t][t];
                if (q != 0) {
                    add_row(d, i, t, -q);
                    add_row(out.left, i, t, -q);
                }
                if (d[i][t] != 0) {
                    // Remainder smaller than the pivot: promote it.
                    swap_rows(d, t, i);
                    swap_rows(out.left, t, i);
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d[t][j] == 0) continue;
                const BigInt q = d[t][j] / d[t][t];
                if (q != 0) {
                    add_col(d, j, t, -q);
                    add_col(out.right, j, t, -q);
                }
                if (d[t][j] != 0) {
                    swap_cols(d, t, j);
                    swap_cols(out.right, t, j);
                }
            }
            if (!row_col_clear(d, t)) continue;

            // Divisibility chain: the pivot must divide the rest of the
            // trailing block; fold a violating row in and reduce again.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < rows && divides_all; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (d[i][j] % d[t][t] != 0) {
                        add_row(d, t, i, 1);
                        add_row(out.left, t, i, 1);
                        divides_all = false;
                        break;
                    }
                }
            }
            if (divides_all) break;
        }

        if (d[t][t] < 0) {
            negate_row(d, t);
            negate_row(out.left, t);
        }
    }
    return out;
}

std::optional<std::vector<BigInt>> solve_integer_system(const BigMatrix& a,
                                                        const std::vector<BigInt>& b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    if (b.size() != rows) throw std::invalid_argument("smith: rhs size mismatch");

    const SmithDecomposition snf = smith_normal_form(a);

    // left * a * right = diag, so with y := right^{-1} x the system becomes
    // diag * y = left * b.
    std::vector<BigInt> c(rows, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < rows; ++j) c[i] += snf.left[i][j] * b[j];
    }

    std::vector<BigInt> y(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        const BigInt pivot = i < cols ? snf.diag[i][i] : BigInt(0);
        if (pivot == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % pivot != 0) return std::nullopt;
            y[i] = c[i] / pivot;
        }
    }

    std::vector<BigInt> x(cols, 0);
    for (std::size_t i = 0; i < cols; ++i) {
        for (std::size_t j = 0; j < cols; ++j) x[i] += snf.right[i][j] * y[j];
    }
    return x;
}

}  // namespace bnloci
