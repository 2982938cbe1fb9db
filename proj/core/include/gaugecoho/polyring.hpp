#ifndef GAUGECOHO_POLYRING_HPP
#define GAUGECOHO_POLYRING_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gaugecoho/numbers.hpp>
#include <gaugecoho/symfunc.hpp>

// Commutative polynomial rings on weighted generators c_i, x_i, y_i (weight i,
// cohomological degree 2i), over Z or a prime field.
namespace gaugecoho
{

// Declaration order is the generator order: every c before every x before every y.
enum class Family : std::uint8_t { c, x, y };

char family_letter(Family f);

struct Generator {
    Family family;
    unsigned index;

    unsigned weight() const noexcept { return index; }
    std::string name() const;

    friend auto operator<=>(const Generator &, const Generator &) = default;
};

class GeneratorContext;
using ContextPtr = std::shared_ptr<const GeneratorContext>;

class GeneratorContext
{
public:
    // Sorts into generator order; rejects duplicates and index 0. A nonzero
    // modulus must be prime and turns coefficients into F_p elements.
    explicit GeneratorContext(std::vector<Generator> generators, std::uint64_t modulus = 0);

    static ContextPtr make(std::vector<Generator> generators, std::uint64_t modulus = 0);
    // c_1..c_n, x_1..x_xcap
    static ContextPtr gauge(unsigned n, unsigned x_cap, std::uint64_t modulus = 0);
    // y_1..y_ycap
    static ContextPtr bott(unsigned y_cap, std::uint64_t modulus = 0);

    std::size_t size() const noexcept { return m_generators.size(); }
    const std::vector<Generator> &generators() const noexcept { return m_generators; }
    const Generator &generator(std::size_t pos) const { return m_generators.at(pos); }
    std::optional<std::size_t> position(Generator g) const;
    // Largest index present for the family, 0 if absent.
    unsigned family_cap(Family f) const;
    std::uint64_t modulus() const noexcept { return m_modulus; }

    ContextPtr with_modulus(std::uint64_t modulus) const;

    bool same_generators(const GeneratorContext &other) const { return m_generators == other.m_generators; }
    friend bool operator==(const GeneratorContext &, const GeneratorContext &) = default;

    std::string describe() const;

private:
    std::vector<Generator> m_generators;
    std::uint64_t m_modulus;
};

// A product of generator powers, stored sparsely as (generator position, exponent)
// pairs sorted by position. Positions refer to the owning context.
class Monomial
{
public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>;

    Monomial() = default;
    // Factors may be unsorted and may repeat a position; zero exponents are dropped.
    Monomial(const GeneratorContext &ctx, std::vector<Factor> factors);

    const std::vector<Factor> &factors() const noexcept { return m_factors; }
    unsigned weight() const noexcept { return m_weight; }
    bool is_one() const noexcept { return m_factors.empty(); }
    std::uint32_t exponent(std::uint32_t pos) const;

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    friend bool operator==(const Monomial &, const Monomial &) = default;

    std::string to_string(const GeneratorContext &ctx) const;

private:
    std::vector<Factor> m_factors;
    unsigned m_weight = 0;
};

// Graded-lexicographic order: lower weight first; within a weight, a larger
// exponent on an earlier generator makes the monomial smaller. At weight 2 over
// {c1, c2, x1, x2} this reads c1^2 < c1*x1 < c2 < x1^2 < x2.
struct MonomialOrder {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

std::strong_ordering compare(const Monomial &a, const Monomial &b);

class GradedPoly
{
public:
    using Terms = std::map<Monomial, Integer, MonomialOrder>;

    explicit GradedPoly(ContextPtr ctx);

    static GradedPoly zero(ContextPtr ctx) { return GradedPoly(std::move(ctx)); }
    static GradedPoly constant(ContextPtr ctx, const Integer &c);
    static GradedPoly generator(ContextPtr ctx, Generator g);
    static GradedPoly monomial(ContextPtr ctx, const Monomial &m, const Integer &c = 1);

    const ContextPtr &context() const noexcept { return m_ctx; }
    const Terms &terms() const noexcept { return m_terms; }
    bool is_zero() const noexcept { return m_terms.empty(); }
    std::size_t size() const noexcept { return m_terms.size(); }
    Integer coefficient(const Monomial &m) const;

    bool is_homogeneous() const;
    // Shared weight of all terms; nullopt for the zero polynomial or mixed weights.
    std::optional<unsigned> weight() const;
    bool uses_family(Family f) const;

    GradedPoly &operator+=(const GradedPoly &other);
    GradedPoly &operator-=(const GradedPoly &other);
    GradedPoly &operator*=(const Integer &c);
    GradedPoly operator-() const;
    friend GradedPoly operator+(GradedPoly a, const GradedPoly &b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly &b) { return a -= b; }
    friend GradedPoly operator*(GradedPoly a, const Integer &c) { return a *= c; }
    friend GradedPoly operator*(const Integer &c, GradedPoly a) { return a *= c; }
    friend GradedPoly operator*(const GradedPoly &a, const GradedPoly &b);
    GradedPoly pow(unsigned e) const;

    // Structural equality: same generators, same modulus, same terms.
    friend bool operator==(const GradedPoly &a, const GradedPoly &b);

    // Moves the polynomial to another context, matching generators by family and
    // index. Throws ContextMismatch if a used generator is missing there.
    GradedPoly recontext(ContextPtr target) const;

    void add_term(const Monomial &m, const Integer &c);

private:
    void check_compatible(const GradedPoly &other) const;
    void normalize(Integer &c) const;

    ContextPtr m_ctx;
    Terms m_terms;
};

// Every monomial of exactly weight w over ctx, ascending in MonomialOrder.
std::vector<Monomial> monomials_of_weight(const GeneratorContext &ctx, unsigned w);

// Unassigned generators map to themselves; images must share the context of p.
GradedPoly substitute(const GradedPoly &p, const std::map<Generator, GradedPoly> &assignment);

// Reduces coefficients modulo a prime, landing in the same generators with modulus p.
GradedPoly reduce_mod(const GradedPoly &p, std::uint64_t prime);

// Image of an integral symmetric polynomial in the elementary basis with e_t -> family_t.
GradedPoly from_elementary(const symfunc::SymPoly &s, ContextPtr ctx, Family family);

//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := integer ('*' factor)* | factor ('*' factor)*
//   factor := gen ('^' nat)?
//   gen    := ('c'|'x'|'y') nat
GradedPoly parse_poly(std::string_view text, ContextPtr ctx);

// Terms ascending in MonomialOrder, explicit signs, "0" for zero.
std::string render_poly(const GradedPoly &p);

} // namespace gaugecoho

#endif
