#include <gaugecoho/zlinalg.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

#include <gaugecoho/errors.hpp>

namespace gaugecoho
{

namespace
{

int cmpabs(const Integer &a, const Integer &b)
{
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

// row dst -= q * row src, touching columns [from, cols).
void sub_row(IntMatrix &A, std::size_t dst, std::size_t src, const Integer &q, std::size_t from = 0)
{
    auto d = A.row(dst);
    const auto s = A.row(src);
    for (std::size_t j = from; j < A.cols(); ++j) {
        if (s[j] != 0) {
            d[j] -= q * s[j];
        }
    }
}

// col dst -= q * col src, touching rows [from, rows).
void sub_col(IntMatrix &A, std::size_t dst, std::size_t src, const Integer &q, std::size_t from = 0)
{
    for (std::size_t i = from; i < A.rows(); ++i) {
        if (A(i, src) != 0) {
            A(i, dst) -= q * A(i, src);
        }
    }
}

void negate_row(IntMatrix &A, std::size_t r)
{
    for (auto &v : A.row(r)) {
        v = -v;
    }
}

Integer tdiv(const Integer &a, const Integer &b)
{
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer fdiv(const Integer &a, const Integer &b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    while (e != 0) {
        if (e & 1u) {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1u;
    }
    return r;
}

void require_prime(std::uint64_t p)
{
    if (!is_prime(p)) {
        throw ArgumentError("modulus " + std::to_string(p) + " is not prime");
    }
}

} // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : m_rows(rows.size()), m_cols(rows.size() ? rows.begin()->size() : 0)
{
    m_data.reserve(m_rows * m_cols);
    for (const auto &r : rows) {
        if (r.size() != m_cols) {
            throw ArgumentError("ragged matrix literal");
        }
        for (long v : r) {
            m_data.emplace_back(v);
        }
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        I(i, i) = 1;
    }
    return I;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) {
        return;
    }
    auto ra = row(a);
    auto rb = row(b);
    for (std::size_t j = 0; j < m_cols; ++j) {
        mpz_swap(ra[j].get_mpz_t(), rb[j].get_mpz_t());
    }
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b) {
        return;
    }
    for (std::size_t i = 0; i < m_rows; ++i) {
        mpz_swap((*this)(i, a).get_mpz_t(), (*this)(i, b).get_mpz_t());
    }
}

void IntMatrix::append_row(std::span<const Integer> values)
{
    if (m_rows == 0 && m_cols == 0) {
        m_cols = values.size();
    }
    if (values.size() != m_cols) {
        throw ArgumentError("row length does not match column count");
    }
    m_data.insert(m_data.end(), values.begin(), values.end());
    ++m_rows;
}

void IntMatrix::truncate_rows(std::size_t count)
{
    if (count < m_rows) {
        m_rows = count;
        m_data.resize(m_rows * m_cols);
    }
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix T(m_cols, m_rows);
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = 0; j < m_cols; ++j) {
            T(j, i) = (*this)(i, j);
        }
    }
    return T;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(m_data.begin(), m_data.end(), [](const Integer &v) { return v == 0; });
}

Integer IntMatrix::determinant() const
{
    if (m_rows != m_cols) {
        throw ArgumentError("determinant of a non-square matrix");
    }
    const std::size_t n = m_rows;
    if (n == 0) {
        return 1;
    }
    IntMatrix A = *this;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && A(p, k) == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            A.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                A(i, j) = (A(k, k) * A(i, j) - A(i, k) * A(k, j));
                mpz_divexact(A(i, j).get_mpz_t(), A(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = A(k, k);
    }
    return sign * A(n - 1, n - 1);
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b)
{
    if (a.cols() != b.rows()) {
        throw ArgumentError("matrix dimension mismatch in product");
    }
    IntMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto &aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j) != 0) {
                    r(i, j) += aik * b(k, j);
                }
            }
        }
    }
    return r;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m_rows; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m_cols; ++j) {
            os << (j ? ", " : "") << (*this)(i, j).get_str();
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

HermiteResult hermite_normal_form(const IntMatrix &M, bool with_transform)
{
    HermiteResult res;
    IntMatrix &A = res.H;
    A = M;
    const std::size_t m = A.rows();
    if (with_transform) {
        res.U = IntMatrix::identity(m);
    }
    auto row_op = [&](std::size_t dst, std::size_t src, const Integer &q, std::size_t from) {
        sub_row(A, dst, src, q, from);
        if (with_transform) {
            sub_row(res.U, dst, src, q);
        }
    };

    std::size_t r = 0;
    for (std::size_t col = 0; col < A.cols() && r < m; ++col) {
        // Euclid on the column, always pivoting on the smallest magnitude entry.
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (A(i, col) != 0 && (best == m || cmpabs(A(i, col), A(best, col)) < 0)) {
                    best = i;
                }
            }
            if (best == m) {
                break;
            }
            A.swap_rows(r, best);
            if (with_transform) {
                res.U.swap_rows(r, best);
            }
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (A(i, col) == 0) {
                    continue;
                }
                row_op(i, r, tdiv(A(i, col), A(r, col)), col);
                if (A(i, col) != 0) {
                    clean = false;
                }
            }
            if (clean) {
                break;
            }
        }
        if (A(r, col) == 0) {
            continue;
        }
        if (A(r, col) < 0) {
            negate_row(A, r);
            if (with_transform) {
                negate_row(res.U, r);
            }
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (A(i, col) != 0) {
                const Integer q = fdiv(A(i, col), A(r, col));
                if (q != 0) {
                    row_op(i, r, q, col);
                }
            }
        }
        res.pivot_columns.push_back(col);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t SnfResult::rank() const
{
    return static_cast<std::size_t>(
        std::count_if(divisors.begin(), divisors.end(), [](const Integer &d) { return d != 0; }));
}

SnfResult smith_normal_form(const IntMatrix &M, SnfOptions options)
{
    SnfResult res;
    IntMatrix A = M;
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    if (options.left_transform) {
        res.U = IntMatrix::identity(m);
    }
    if (options.right_transform) {
        res.V = IntMatrix::identity(n);
    }
    auto row_op = [&](std::size_t dst, std::size_t src, const Integer &q, std::size_t from) {
        sub_row(A, dst, src, q, from);
        if (options.left_transform) {
            sub_row(res.U, dst, src, q);
        }
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const Integer &q, std::size_t from) {
        sub_col(A, dst, src, q, from);
        if (options.right_transform) {
            sub_col(res.V, dst, src, q);
        }
    };
    auto swap_r = [&](std::size_t a, std::size_t b) {
        A.swap_rows(a, b);
        if (options.left_transform) {
            res.U.swap_rows(a, b);
        }
    };
    auto swap_c = [&](std::size_t a, std::size_t b) {
        A.swap_cols(a, b);
        if (options.right_transform) {
            res.V.swap_cols(a, b);
        }
    };

    const std::size_t limit = std::min(m, n);
    std::size_t t = 0;
    for (; t < limit; ++t) {
        // Smallest nonzero entry of the trailing block; among units, the one with the
        // fewest nonzeros in its row and column, which keeps fill-in and V small.
        std::vector<std::size_t> row_nnz(m, 0);
        std::vector<std::size_t> col_nnz(n, 0);
        for (std::size_t i = t; i < m; ++i) {
            for (std::size_t j = t; j < n; ++j) {
                if (A(i, j) != 0) {
                    ++row_nnz[i];
                    ++col_nnz[j];
                }
            }
        }
        std::size_t pi = m;
        std::size_t pj = n;
        std::size_t best_cost = 0;
        for (std::size_t i = t; i < m; ++i) {
            for (std::size_t j = t; j < n; ++j) {
                if (A(i, j) == 0) {
                    continue;
                }
                const std::size_t cost = (row_nnz[i] - 1) * (col_nnz[j] - 1);
                const int c = pi == m ? -1 : cmpabs(A(i, j), A(pi, pj));
                if (c < 0 || (c == 0 && cost < best_cost)) {
                    pi = i;
                    pj = j;
                    best_cost = cost;
                }
            }
        }
        if (pi == m) {
            break;
        }
        swap_r(t, pi);
        swap_c(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (A(i, t) != 0) {
                    row_op(i, t, tdiv(A(i, t), A(t, t)), t);
                    clean = clean && A(i, t) == 0;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (A(t, j) != 0) {
                    col_op(j, t, tdiv(A(t, j), A(t, t)), t);
                    clean = clean && A(t, j) == 0;
                }
            }
            if (!clean) {
                // A remainder smaller than the pivot survived; move it to the pivot spot.
                std::size_t bi = t;
                std::size_t bj = t;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (A(i, t) != 0 && cmpabs(A(i, t), A(bi, bj)) < 0) {
                        bi = i;
                        bj = t;
                    }
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (A(t, j) != 0 && cmpabs(A(t, j), A(bi, bj)) < 0) {
                        bi = t;
                        bj = j;
                    }
                }
                swap_r(t, bi);
                swap_c(t, bj);
                continue;
            }
            // Pivot must divide the whole trailing block.
            std::size_t bad = m;
            if (abs(A(t, t)) != 1) {
                for (std::size_t i = t + 1; i < m && bad == m; ++i) {
                    for (std::size_t j = t + 1; j < n; ++j) {
                        if (A(i, j) != 0 && !mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
                            bad = i;
                            break;
                        }
                    }
                }
            }
            if (bad == m) {
                break;
            }
            row_op(t, bad, Integer(-1), t);
        }
        if (A(t, t) < 0) {
            negate_row(A, t);
            if (options.left_transform) {
                negate_row(res.U, t);
            }
        }
    }
    res.divisors.assign(limit, Integer(0));
    for (std::size_t i = 0; i < t; ++i) {
        res.divisors[i] = A(i, i);
    }
    return res;
}

std::size_t rank_over_field(const IntMatrix &M, std::uint64_t modulus)
{
    if (modulus != 0) {
        return row_reduce_mod(M, modulus).pivot_columns.size();
    }
    // Fraction-free elimination; every intermediate entry is a minor of M.
    IntMatrix A = M;
    const std::size_t m = A.rows();
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < A.cols() && r < m; ++col) {
        std::size_t p = r;
        while (p < m && A(p, col) == 0) {
            ++p;
        }
        if (p == m) {
            continue;
        }
        A.swap_rows(r, p);
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < A.cols(); ++j) {
                A(i, j) = A(r, col) * A(i, j) - A(i, col) * A(r, j);
                mpz_divexact(A(i, j).get_mpz_t(), A(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            A(i, col) = 0;
        }
        prev = A(r, col);
        ++r;
    }
    return r;
}

ModEchelon row_reduce_mod(const IntMatrix &M, std::uint64_t prime)
{
    require_prime(prime);
    ModEchelon e;
    e.modulus = prime;
    e.cols = M.cols();
    std::vector<std::vector<std::uint64_t>> rows(M.rows(), std::vector<std::uint64_t>(M.cols()));
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) {
            rows[i][j] = mod_floor(M(i, j), prime).get_ui();
        }
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < M.cols() && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col] == 0) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[p]);
        const auto inv = pow_mod(rows[r][col], prime - 2, prime);
        for (auto &v : rows[r]) {
            v = mul_mod(v, inv, prime);
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) {
                continue;
            }
            const auto f = rows[i][col];
            for (std::size_t j = col; j < M.cols(); ++j) {
                if (rows[r][j] != 0) {
                    rows[i][j] = (rows[i][j] + prime - mul_mod(f, rows[r][j], prime)) % prime;
                }
            }
        }
        e.pivot_columns.push_back(col);
        ++r;
    }
    rows.resize(r);
    e.rows = std::move(rows);
    return e;
}

std::optional<std::vector<Integer>> solve_in_row_space(const IntMatrix &M, std::span<const Integer> b)
{
    if (b.size() != M.cols()) {
        throw ArgumentError("right-hand side has length " + std::to_string(b.size()) + ", expected "
                            + std::to_string(M.cols()));
    }
    const auto hnf = hermite_normal_form(M, true);
    std::vector<Integer> residual(b.begin(), b.end());
    std::vector<Integer> z(hnf.rank);
    for (std::size_t i = 0; i < hnf.rank; ++i) {
        const auto col = hnf.pivot_columns[i];
        const auto &pivot = hnf.H(i, col);
        if (!mpz_divisible_p(residual[col].get_mpz_t(), pivot.get_mpz_t())) {
            return std::nullopt;
        }
        z[i] = residual[col] / pivot;
        if (z[i] == 0) {
            continue;
        }
        for (std::size_t j = col; j < M.cols(); ++j) {
            residual[j] -= z[i] * hnf.H(i, j);
        }
    }
    if (!std::all_of(residual.begin(), residual.end(), [](const Integer &v) { return v == 0; })) {
        return std::nullopt;
    }
    std::vector<Integer> y(M.rows());
    for (std::size_t i = 0; i < hnf.rank; ++i) {
        if (z[i] == 0) {
            continue;
        }
        for (std::size_t k = 0; k < M.rows(); ++k) {
            y[k] += z[i] * hnf.U(i, k);
        }
    }
    return y;
}

} // namespace gaugecoho
