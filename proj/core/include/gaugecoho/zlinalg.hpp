#ifndef GAUGECOHO_ZLINALG_HPP
#define GAUGECOHO_ZLINALG_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gaugecoho/numbers.hpp>

namespace gaugecoho
{

// Dense integer matrix, row-major.
class IntMatrix
{
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return m_rows; }
    std::size_t cols() const noexcept { return m_cols; }

    Integer &operator()(std::size_t r, std::size_t c) { return m_data[r * m_cols + c]; }
    const Integer &operator()(std::size_t r, std::size_t c) const { return m_data[r * m_cols + c]; }
    std::span<Integer> row(std::size_t r) { return {m_data.data() + r * m_cols, m_cols}; }
    std::span<const Integer> row(std::size_t r) const { return {m_data.data() + r * m_cols, m_cols}; }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void append_row(std::span<const Integer> values);
    // Keeps rows [0, count).
    void truncate_rows(std::size_t count);

    IntMatrix transpose() const;
    bool is_zero() const;
    // Fraction-free determinant of a square matrix.
    Integer determinant() const;

    friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
    friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

    std::string to_string() const;

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<Integer> m_data;
};

// Row-style Hermite normal form: H = U * M with U unimodular. Nonzero rows come
// first, pivots are positive and strictly move right, and entries above a pivot
// lie in [0, pivot).
struct HermiteResult {
    IntMatrix H;
    IntMatrix U;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

HermiteResult hermite_normal_form(const IntMatrix &M, bool with_transform = true);

struct SnfResult {
    // d_1 | d_2 | ... , min(rows, cols) entries, zeros trailing.
    std::vector<Integer> divisors;
    // U * M * V is diagonal on the divisors. Empty unless requested.
    IntMatrix U;
    IntMatrix V;

    std::size_t rank() const;
};

struct SnfOptions {
    bool left_transform = true;
    bool right_transform = true;
};

SnfResult smith_normal_form(const IntMatrix &M, SnfOptions options = {});

// Rank over Q (modulus 0) or F_p. Throws ArgumentError for a composite modulus.
std::size_t rank_over_field(const IntMatrix &M, std::uint64_t modulus);

// Reduced row echelon form over F_p, entries in [0, p).
struct ModEchelon {
    std::uint64_t modulus = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<std::size_t> pivot_columns;
};

ModEchelon row_reduce_mod(const IntMatrix &M, std::uint64_t prime);

// Some integer y with y * M = b, or nullopt when b is outside the Z-row space.
std::optional<std::vector<Integer>> solve_in_row_space(const IntMatrix &M, std::span<const Integer> b);

} // namespace gaugecoho

#endif
