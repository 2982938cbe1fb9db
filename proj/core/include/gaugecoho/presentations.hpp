#ifndef GAUGECOHO_PRESENTATIONS_HPP
#define GAUGECOHO_PRESENTATIONS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gaugecoho/numbers.hpp>
#include <gaugecoho/polyring.hpp>
#include <gaugecoho/series.hpp>
#include <gaugecoho/zlinalg.hpp>

namespace gaugecoho
{

inline constexpr unsigned default_weight_cap = 10;

// Coefficient ring of a computation: Z (Smith form, torsion), Q, or F_p.
class Ring
{
public:
    enum class Kind { integers, rationals, prime_field };

    static Ring integers() { return Ring(Kind::integers, 0); }
    static Ring rationals() { return Ring(Kind::rationals, 0); }
    static Ring prime_field(std::uint64_t p);
    // 0 selects Q, a prime selects F_p.
    static Ring from_modulus(std::uint64_t modulus);

    Kind kind() const noexcept { return m_kind; }
    // p for F_p, 0 otherwise.
    std::uint64_t modulus() const noexcept { return m_modulus; }
    bool is_field() const noexcept { return m_kind != Kind::integers; }
    // "Z", "Q", "F_3"
    std::string name() const;

    friend auto operator<=>(const Ring &, const Ring &) = default;

private:
    Ring(Kind kind, std::uint64_t modulus) : m_kind(kind), m_modulus(modulus) {}

    Kind m_kind;
    std::uint64_t m_modulus;
};

enum class PresentationKind { gauge, bott };

// Z[c_1..c_n, x_1, x_2, ...]/(h_n, h_{n+1}, ...)  or  Z[y_1, y_2, ...]/(s_n, s_{n+1}, ...),
// truncated at weight_cap.
class PresentationSpec
{
public:
    static PresentationSpec gauge(unsigned n, long k, unsigned weight_cap = default_weight_cap);
    static PresentationSpec bott(unsigned n, unsigned weight_cap = default_weight_cap);

    PresentationKind kind() const noexcept { return m_kind; }
    unsigned n() const noexcept { return m_n; }
    // Bundle degree; always 0 for Bott presentations.
    long k() const noexcept { return m_k; }
    unsigned weight_cap() const noexcept { return m_cap; }
    const ContextPtr &context() const noexcept { return m_ctx; }

    PresentationSpec with_weight_cap(unsigned cap) const;
    // Relation of index i >= n: h_i or s_i.
    GradedPoly relation(unsigned i) const;
    // Identifies the ring independently of the cap, e.g. "gauge-n2-k-1", "bott-n3".
    std::string key() const;
    std::string describe() const;

private:
    PresentationSpec(PresentationKind kind, unsigned n, long k, unsigned cap);

    PresentationKind m_kind;
    unsigned m_n;
    long m_k;
    unsigned m_cap;
    ContextPtr m_ctx;
};

// h_i = k c_i + sum_{1<=j<=i} (-1)^j s_j(x_1..x_j) c_{i-j}, with c_0 = 1 and c_m = 0 for m > n.
GradedPoly gauge_relation(unsigned i, const PresentationSpec &spec);
// s_i(y_1..y_i).
GradedPoly bott_relation(unsigned i, const PresentationSpec &spec);

// One weight of the quotient ring. Immutable once built.
struct DegreeComponent {
    unsigned weight = 0;
    Ring ring = Ring::integers();
    // Ascending in MonomialOrder; relation_matrix columns follow this list.
    std::vector<Monomial> monomials;
    // Rows m * r for every relation r of weight u <= weight and monomial m of weight weight - u.
    IntMatrix relation_matrix;
    // Nonzero Smith divisors over Z; empty for field components.
    std::vector<Integer> divisors;
    // Indices into monomials of the retained (non-pivot) monomials.
    std::vector<std::size_t> basis;
    std::size_t dim = 0;
    // Over Z: every echelon pivot is 1, so the basis monomials form a Z-basis of the quotient.
    bool unit_pivots = true;

    // Echelon rows used for reduction, in reversed column order (internal column j is
    // monomial count - 1 - j) so that pivots fall on the largest monomials.
    IntMatrix echelon;
    std::vector<std::size_t> echelon_pivots;
    ModEchelon mod_echelon;
    // Over Z without unit_pivots: the echelon columns that are not unit pivots, and the
    // right Smith transform of the non-unit rows restricted to them.
    std::vector<std::size_t> smith_columns;
    IntMatrix smith_right;
    std::vector<Integer> smith_diagonal;

    bool torsion_free() const;
    std::vector<Integer> torsion() const;
    std::optional<std::size_t> index_of(const Monomial &m) const;
};

DegreeComponent build_degree_component(const PresentationSpec &spec, unsigned w, Ring ring);

// Class of a homogeneous element. For field rings and for Z with unit pivots the
// free entries are coefficients on the component basis; otherwise (Z, smith set)
// they are Smith coordinates and torsion holds residues modulo torsion_orders.
struct Coordinates {
    unsigned weight = 0;
    Ring ring = Ring::integers();
    bool smith = false;
    std::vector<Rational> free;
    std::vector<Integer> torsion;
    std::vector<Integer> torsion_orders;

    bool is_zero() const;
    friend bool operator==(const Coordinates &, const Coordinates &) = default;
};

Coordinates normal_form_in(const DegreeComponent &component, const GradedPoly &p);

struct TorsionEntry {
    unsigned weight;
    std::vector<Integer> divisors;

    friend bool operator==(const TorsionEntry &, const TorsionEntry &) = default;
};

class ComponentCache;

// A presentation together with a component cache; the query surface of the engine.
class Presentation
{
public:
    explicit Presentation(PresentationSpec spec, std::shared_ptr<ComponentCache> cache = nullptr);

    const PresentationSpec &spec() const noexcept { return m_spec; }
    const std::shared_ptr<ComponentCache> &cache() const noexcept { return m_cache; }

    std::shared_ptr<const DegreeComponent> component(unsigned w, Ring ring) const;
    // Components for weights 0..cap, computed concurrently.
    std::vector<std::shared_ptr<const DegreeComponent>> components(Ring ring, unsigned cap) const;

    TruncatedSeries poincare_series(Ring ring, unsigned cap) const;
    std::vector<TorsionEntry> torsion_report(unsigned cap) const;

    // weight is only consulted for the zero polynomial (default 0).
    Coordinates normal_form(const GradedPoly &p, Ring ring, std::optional<unsigned> weight = std::nullopt) const;
    Coordinates product(const GradedPoly &p, const GradedPoly &q, Ring ring) const;
    Coordinates express_xi(unsigned i, Ring ring) const;

    // Basis-coordinate classes only: sum of coefficient * basis monomial.
    // Throws ArgumentError for Smith coordinates or non-integral coefficients.
    GradedPoly representative(const Coordinates &coords) const;
    // Polynomial-style rendering over the basis ("c1^2", "1/2*x1"), or a Smith
    // coordinate listing when smith is set.
    std::string render(const Coordinates &coords) const;

private:
    PresentationSpec m_spec;
    std::shared_ptr<ComponentCache> m_cache;
};

DegreeComponent degree_component(const PresentationSpec &spec, unsigned w, Ring ring);
TruncatedSeries poincare_series(const PresentationSpec &spec, unsigned cap, Ring ring);
// Product of the BU(n) series prod_{i<=n} 1/(1-t^i) with the rational series of Bott(n).
TruncatedSeries leray_hirsch_series(unsigned n, unsigned cap);
std::vector<TorsionEntry> torsion_report(const PresentationSpec &spec, unsigned cap);
Coordinates normal_form(const PresentationSpec &spec, const GradedPoly &p, Ring ring);
Coordinates product(const PresentationSpec &spec, const GradedPoly &p, const GradedPoly &q, Ring ring);
Coordinates express_xi(const PresentationSpec &spec, unsigned i, Ring ring);

} // namespace gaugecoho

#endif
