#ifndef GAUGECOHO_SYMFUNC_HPP
#define GAUGECOHO_SYMFUNC_HPP

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gaugecoho/numbers.hpp>

// Symmetric functions in the elementary basis e_1, e_2, ... and the power-sum
// basis p_1, p_2, ..., with exact rational coefficients. Generator e_i (p_i)
// has weight i.
namespace gaugecoho::symfunc
{

enum class Basis { elementary, power_sum };

class SymPoly
{
public:
    // exponents[i - 1] is the exponent of generator i. Trailing zeros are never
    // stored, so two equal monomials always have equal vectors.
    using Exponents = std::vector<unsigned>;
    using Terms = std::map<Exponents, Rational>;

    explicit SymPoly(Basis basis) : m_basis(basis) {}

    static SymPoly constant(Basis basis, const Rational &c);
    static SymPoly generator(Basis basis, unsigned index);

    Basis basis() const noexcept { return m_basis; }
    const Terms &terms() const noexcept { return m_terms; }
    bool is_zero() const noexcept { return m_terms.empty(); }
    bool has_integer_coefficients() const;

    // Common weight of all terms; nullopt for zero or mixed-weight input.
    std::optional<unsigned> weight() const;

    SymPoly &operator+=(const SymPoly &other);
    SymPoly &operator-=(const SymPoly &other);
    SymPoly &operator*=(const Rational &c);
    friend SymPoly operator+(SymPoly a, const SymPoly &b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly &b) { return a -= b; }
    friend SymPoly operator*(SymPoly a, const Rational &c) { return a *= c; }
    friend SymPoly operator*(const Rational &c, SymPoly a) { return a *= c; }
    friend SymPoly operator*(const SymPoly &a, const SymPoly &b);
    SymPoly operator-() const { return *this * Rational(-1); }
    SymPoly pow(unsigned e) const;

    friend bool operator==(const SymPoly &, const SymPoly &) = default;

    // values[i - 1] is substituted for generator i; missing values count as zero.
    Rational evaluate(std::span<const Rational> values) const;

    // Replaces generator i by image(i), producing a polynomial in `target`.
    SymPoly substitute(const std::function<SymPoly(unsigned)> &image, Basis target) const;

    // "e1^2 - 2*e2"; power sums print as s_i.
    std::string to_string() const;

    static unsigned weight_of(const Exponents &e);

private:
    void add_term(const Exponents &e, const Rational &c);

    Basis m_basis;
    Terms m_terms;
};

// s_i written in e_1..e_i (integer coefficients), from Newton's identities.
SymPoly power_sum_in_e(int i);

// e_i written in p_1..p_i over the rationals.
SymPoly e_in_power_sums(int i);

// p_i - e_1 p_{i-1} + ... + (-1)^{i-1} i e_i == 0, with each p_j expanded in e's.
bool newton_recurrence_check(int i);

// Weight-i part of the Chern character, s_i / i!, in the elementary basis.
SymPoly chern_character_component(int i);

} // namespace gaugecoho::symfunc

#endif
