#include <gaugecoho/presentations.hpp>

#include <algorithm>
#include <future>
#include <sstream>

#include <gaugecoho/component_cache.hpp>
#include <gaugecoho/errors.hpp>
#include <gaugecoho/symfunc.hpp>

namespace gaugecoho
{

Ring Ring::prime_field(std::uint64_t p)
{
    if (!is_prime(p)) {
        throw ArgumentError("modulus " + std::to_string(p) + " is not prime");
    }
    return Ring(Kind::prime_field, p);
}

Ring Ring::from_modulus(std::uint64_t modulus)
{
    return modulus == 0 ? rationals() : prime_field(modulus);
}

std::string Ring::name() const
{
    switch (m_kind) {
        case Kind::integers:
            return "Z";
        case Kind::rationals:
            return "Q";
        case Kind::prime_field:
            return "F_" + std::to_string(m_modulus);
    }
    return "?";
}

PresentationSpec::PresentationSpec(PresentationKind kind, unsigned n, long k, unsigned cap)
    : m_kind(kind), m_n(n), m_k(k), m_cap(cap)
{
    if (n < 1u) {
        throw ArgumentError("n must be >= 1");
    }
    if (cap < 1u) {
        throw ArgumentError("weight cap must be >= 1");
    }
    m_ctx = kind == PresentationKind::gauge ? GeneratorContext::gauge(n, cap) : GeneratorContext::bott(cap);
}

PresentationSpec PresentationSpec::gauge(unsigned n, long k, unsigned weight_cap)
{
    return PresentationSpec(PresentationKind::gauge, n, k, weight_cap);
}

PresentationSpec PresentationSpec::bott(unsigned n, unsigned weight_cap)
{
    return PresentationSpec(PresentationKind::bott, n, 0, weight_cap);
}

PresentationSpec PresentationSpec::with_weight_cap(unsigned cap) const
{
    return PresentationSpec(m_kind, m_n, m_k, cap);
}

GradedPoly PresentationSpec::relation(unsigned i) const
{
    return m_kind == PresentationKind::gauge ? gauge_relation(i, *this) : bott_relation(i, *this);
}

std::string PresentationSpec::key() const
{
    if (m_kind == PresentationKind::bott) {
        return "bott-n" + std::to_string(m_n);
    }
    return "gauge-n" + std::to_string(m_n) + "-k" + std::to_string(m_k);
}

std::string PresentationSpec::describe() const
{
    std::ostringstream os;
    if (m_kind == PresentationKind::gauge) {
        os << "Gauge(n=" << m_n << ", k=" << m_k << ")";
    } else {
        os << "Bott(n=" << m_n << ")";
    }
    os << ", weight cap " << m_cap;
    return os.str();
}

namespace
{

void check_relation_index(unsigned i, const PresentationSpec &spec)
{
    if (i < spec.n()) {
        throw ArgumentError("relation index " + std::to_string(i) + " is below n = " + std::to_string(spec.n()));
    }
    if (i > spec.weight_cap()) {
        throw CapError("relation index " + std::to_string(i) + " exceeds the weight cap "
                       + std::to_string(spec.weight_cap()));
    }
}

} // namespace

GradedPoly gauge_relation(unsigned i, const PresentationSpec &spec)
{
    if (spec.kind() != PresentationKind::gauge) {
        throw ArgumentError("gauge_relation needs a gauge presentation");
    }
    check_relation_index(i, spec);
    const auto &ctx = spec.context();
    // c_0 = 1 and c_m = 0 beyond the rank.
    auto chern = [&](unsigned m) {
        if (m == 0u) {
            return GradedPoly::constant(ctx, 1);
        }
        if (m > spec.n()) {
            return GradedPoly::zero(ctx);
        }
        return GradedPoly::generator(ctx, {Family::c, m});
    };
    GradedPoly h = Integer(spec.k()) * chern(i);
    for (unsigned j = 1; j <= i; ++j) {
        const auto cj = chern(i - j);
        if (cj.is_zero()) {
            continue;
        }
        const auto sj = from_elementary(symfunc::power_sum_in_e(static_cast<int>(j)), ctx, Family::x);
        h += Integer(j % 2u == 0u ? 1 : -1) * (sj * cj);
    }
    return h;
}

GradedPoly bott_relation(unsigned i, const PresentationSpec &spec)
{
    if (spec.kind() != PresentationKind::bott) {
        throw ArgumentError("bott_relation needs a Bott presentation");
    }
    check_relation_index(i, spec);
    return from_elementary(symfunc::power_sum_in_e(static_cast<int>(i)), spec.context(), Family::y);
}

bool DegreeComponent::torsion_free() const
{
    return std::all_of(divisors.begin(), divisors.end(), [](const Integer &d) { return d == 1; });
}

std::vector<Integer> DegreeComponent::torsion() const
{
    std::vector<Integer> t;
    for (const auto &d : divisors) {
        if (d != 1) {
            t.push_back(d);
        }
    }
    return t;
}

std::optional<std::size_t> DegreeComponent::index_of(const Monomial &m) const
{
    const auto it = std::lower_bound(monomials.begin(), monomials.end(), m, MonomialOrder{});
    if (it == monomials.end() || !(*it == m)) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - monomials.begin());
}

DegreeComponent build_degree_component(const PresentationSpec &spec, unsigned w, Ring ring)
{
    if (w > spec.weight_cap()) {
        throw CapError("weight " + std::to_string(w) + " exceeds the weight cap " + std::to_string(spec.weight_cap()));
    }
    const auto &ctx = spec.context();
    DegreeComponent comp;
    comp.weight = w;
    comp.ring = ring;
    comp.monomials = monomials_of_weight(*ctx, w);
    const std::size_t m = comp.monomials.size();

    IntMatrix rel(0, m);
    std::vector<Integer> row(m);
    for (unsigned u = spec.n(); u <= w; ++u) {
        const auto r = spec.relation(u);
        for (const auto &mult : monomials_of_weight(*ctx, w - u)) {
            std::fill(row.begin(), row.end(), Integer(0));
            for (const auto &[t, coeff] : r.terms()) {
                row[*comp.index_of(t * mult)] += coeff;
            }
            rel.append_row(row);
        }
    }

    // Reversed columns put the largest monomials first, so pivots land on them
    // and the retained basis consists of the smallest monomials.
    IntMatrix reversed(rel.rows(), m);
    for (std::size_t i = 0; i < rel.rows(); ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            reversed(i, j) = rel(i, m - 1 - j);
        }
    }
    comp.relation_matrix = std::move(rel);

    std::vector<std::size_t> pivots;
    if (ring.kind() == Ring::Kind::prime_field) {
        comp.mod_echelon = row_reduce_mod(reversed, ring.modulus());
        pivots = comp.mod_echelon.pivot_columns;
    } else {
        auto hnf = hermite_normal_form(reversed, false);
        hnf.H.truncate_rows(hnf.rank);
        comp.echelon = std::move(hnf.H);
        comp.echelon_pivots = hnf.pivot_columns;
        pivots = comp.echelon_pivots;
        if (ring.kind() == Ring::Kind::integers) {
            comp.unit_pivots = true;
            for (std::size_t i = 0; i < pivots.size(); ++i) {
                if (comp.echelon(i, pivots[i]) != 1) {
                    comp.unit_pivots = false;
                }
            }
            if (comp.unit_pivots) {
                comp.divisors.assign(pivots.size(), Integer(1));
            } else {
                // Unit-pivot rows are the only nonzero entries of their pivot columns, so
                // they split off; the Smith form runs on the remaining rows and columns.
                std::vector<bool> unit_col(m, false);
                std::vector<std::size_t> rest_rows;
                for (std::size_t i = 0; i < pivots.size(); ++i) {
                    if (comp.echelon(i, pivots[i]) == 1) {
                        unit_col[pivots[i]] = true;
                        comp.divisors.emplace_back(1);
                    } else {
                        rest_rows.push_back(i);
                    }
                }
                for (std::size_t j = 0; j < m; ++j) {
                    if (!unit_col[j]) {
                        comp.smith_columns.push_back(j);
                    }
                }
                IntMatrix rest(rest_rows.size(), comp.smith_columns.size());
                for (std::size_t i = 0; i < rest_rows.size(); ++i) {
                    for (std::size_t j = 0; j < comp.smith_columns.size(); ++j) {
                        rest(i, j) = comp.echelon(rest_rows[i], comp.smith_columns[j]);
                    }
                }
                auto snf = smith_normal_form(rest, {.left_transform = false, .right_transform = true});
                for (const auto &d : snf.divisors) {
                    if (d != 0) {
                        comp.divisors.push_back(d);
                    }
                }
                comp.smith_right = std::move(snf.V);
                comp.smith_diagonal = std::move(snf.divisors);
            }
        }
    }
    std::vector<bool> is_pivot(m, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    for (std::size_t idx = 0; idx < m; ++idx) {
        if (!is_pivot[m - 1 - idx]) {
            comp.basis.push_back(idx);
        }
    }
    comp.dim = m - pivots.size();
    return comp;
}

bool Coordinates::is_zero() const
{
    return std::all_of(free.begin(), free.end(), [](const Rational &v) { return v == 0; })
           && std::all_of(torsion.begin(), torsion.end(), [](const Integer &v) { return v == 0; });
}

Coordinates normal_form_in(const DegreeComponent &comp, const GradedPoly &p)
{
    const std::size_t m = comp.monomials.size();
    std::vector<Integer> v(m);
    for (const auto &[mono, c] : p.terms()) {
        const auto idx = comp.index_of(mono);
        if (!idx) {
            throw ArgumentError("monomial " + mono.to_string(*p.context()) + " is not of weight "
                                + std::to_string(comp.weight));
        }
        v[m - 1 - *idx] = c;
    }
    Coordinates out;
    out.weight = comp.weight;
    out.ring = comp.ring;
    auto collect = [&](const auto &vec) {
        for (auto b : comp.basis) {
            out.free.emplace_back(vec[m - 1 - b]);
        }
    };

    switch (comp.ring.kind()) {
        case Ring::Kind::prime_field: {
            const auto p_mod = comp.ring.modulus();
            std::vector<std::uint64_t> u(m);
            for (std::size_t j = 0; j < m; ++j) {
                u[j] = mod_floor(v[j], p_mod).get_ui();
            }
            const auto &ech = comp.mod_echelon;
            for (std::size_t i = 0; i < ech.rows.size(); ++i) {
                const auto piv = ech.pivot_columns[i];
                const auto f = u[piv];
                if (f == 0) {
                    continue;
                }
                for (std::size_t j = piv; j < m; ++j) {
                    if (ech.rows[i][j] != 0) {
                        const auto prod = mul_mod(f, ech.rows[i][j], p_mod);
                        u[j] = (u[j] + p_mod - prod) % p_mod;
                    }
                }
            }
            std::vector<Integer> as_int(u.begin(), u.end());
            collect(as_int);
            break;
        }
        case Ring::Kind::rationals: {
            std::vector<Rational> q(v.begin(), v.end());
            for (std::size_t i = 0; i < comp.echelon_pivots.size(); ++i) {
                const auto piv = comp.echelon_pivots[i];
                if (q[piv] == 0) {
                    continue;
                }
                const Rational f = q[piv] / Rational(comp.echelon(i, piv));
                for (std::size_t j = piv; j < m; ++j) {
                    if (comp.echelon(i, j) != 0) {
                        q[j] -= f * comp.echelon(i, j);
                    }
                }
            }
            collect(q);
            break;
        }
        case Ring::Kind::integers: {
            if (comp.unit_pivots) {
                for (std::size_t i = 0; i < comp.echelon_pivots.size(); ++i) {
                    const auto piv = comp.echelon_pivots[i];
                    if (v[piv] == 0) {
                        continue;
                    }
                    const Integer f = v[piv];
                    for (std::size_t j = piv; j < m; ++j) {
                        if (comp.echelon(i, j) != 0) {
                            v[j] -= f * comp.echelon(i, j);
                        }
                    }
                }
                collect(v);
                break;
            }
            out.smith = true;
            for (std::size_t i = 0; i < comp.echelon_pivots.size(); ++i) {
                const auto piv = comp.echelon_pivots[i];
                if (v[piv] == 0 || comp.echelon(i, piv) != 1) {
                    continue;
                }
                const Integer f = v[piv];
                for (std::size_t j = piv; j < m; ++j) {
                    if (comp.echelon(i, j) != 0) {
                        v[j] -= f * comp.echelon(i, j);
                    }
                }
            }
            const std::size_t cols = comp.smith_columns.size();
            std::vector<Integer> w(cols);
            for (std::size_t j = 0; j < cols; ++j) {
                const auto &x = v[comp.smith_columns[j]];
                if (x == 0) {
                    continue;
                }
                for (std::size_t t = 0; t < cols; ++t) {
                    w[t] += x * comp.smith_right(j, t);
                }
            }
            const std::size_t r = std::count_if(comp.smith_diagonal.begin(), comp.smith_diagonal.end(),
                                                [](const Integer &d) { return d != 0; });
            for (std::size_t t = 0; t < r; ++t) {
                const auto &d = comp.smith_diagonal[t];
                if (d != 1) {
                    Integer res;
                    mpz_fdiv_r(res.get_mpz_t(), w[t].get_mpz_t(), d.get_mpz_t());
                    out.torsion.push_back(res);
                    out.torsion_orders.push_back(d);
                }
            }
            for (std::size_t t = r; t < cols; ++t) {
                out.free.emplace_back(w[t]);
            }
            break;
        }
    }
    return out;
}

Presentation::Presentation(PresentationSpec spec, std::shared_ptr<ComponentCache> cache)
    : m_spec(std::move(spec)), m_cache(cache ? std::move(cache) : std::make_shared<ComponentCache>())
{
}

std::shared_ptr<const DegreeComponent> Presentation::component(unsigned w, Ring ring) const
{
    if (w > m_spec.weight_cap()) {
        throw CapError("weight " + std::to_string(w) + " exceeds the weight cap "
                       + std::to_string(m_spec.weight_cap()));
    }
    const auto key = ComponentKey::of(m_spec, w, ring);
    if (auto hit = m_cache->find(key)) {
        return hit;
    }
    auto built = std::make_shared<const DegreeComponent>(build_degree_component(m_spec, w, ring));
    return m_cache->insert(key, std::move(built));
}

std::vector<std::shared_ptr<const DegreeComponent>> Presentation::components(Ring ring, unsigned cap) const
{
    if (cap > m_spec.weight_cap()) {
        throw CapError("weight " + std::to_string(cap) + " exceeds the weight cap "
                       + std::to_string(m_spec.weight_cap()));
    }
    std::vector<std::future<std::shared_ptr<const DegreeComponent>>> jobs;
    // Largest weights first: they dominate the running time.
    for (unsigned w = cap + 1; w-- > 0;) {
        jobs.push_back(std::async(std::launch::async, [this, w, ring] { return component(w, ring); }));
    }
    std::vector<std::shared_ptr<const DegreeComponent>> out(cap + 1u);
    for (unsigned i = 0; i <= cap; ++i) {
        out[cap - i] = jobs[i].get();
    }
    return out;
}

TruncatedSeries Presentation::poincare_series(Ring ring, unsigned cap) const
{
    TruncatedSeries s(cap);
    const auto comps = components(ring, cap);
    for (unsigned w = 0; w <= cap; ++w) {
        s[w] = static_cast<unsigned long>(comps[w]->dim);
    }
    return s;
}

std::vector<TorsionEntry> Presentation::torsion_report(unsigned cap) const
{
    std::vector<TorsionEntry> out;
    const auto comps = components(Ring::integers(), cap);
    for (unsigned w = 0; w <= cap; ++w) {
        auto t = comps[w]->torsion();
        if (!t.empty()) {
            out.push_back({w, std::move(t)});
        }
    }
    return out;
}

Coordinates Presentation::normal_form(const GradedPoly &p, Ring ring, std::optional<unsigned> weight) const
{
    const auto pm = p.context()->modulus();
    if (pm != 0 && pm != ring.modulus()) {
        throw DomainMismatch("polynomial over F_" + std::to_string(pm) + " cannot be reduced over " + ring.name());
    }
    const GradedPoly q = p.recontext(m_spec.context());
    if (!q.is_homogeneous()) {
        throw NotHomogeneous("normal_form needs a homogeneous polynomial; split it by weight first");
    }
    const unsigned w = q.is_zero() ? weight.value_or(0u) : *q.weight();
    if (w > m_spec.weight_cap()) {
        throw CapError("weight " + std::to_string(w) + " exceeds the weight cap "
                       + std::to_string(m_spec.weight_cap()));
    }
    return normal_form_in(*component(w, ring), q);
}

Coordinates Presentation::product(const GradedPoly &p, const GradedPoly &q, Ring ring) const
{
    const auto a = p.recontext(m_spec.context());
    const auto b = q.recontext(m_spec.context());
    if (!a.is_homogeneous() || !b.is_homogeneous()) {
        throw NotHomogeneous("product needs homogeneous factors");
    }
    const unsigned w = a.weight().value_or(0u) + b.weight().value_or(0u);
    if (w > m_spec.weight_cap()) {
        throw CapError("product weight " + std::to_string(w) + " exceeds the weight cap "
                       + std::to_string(m_spec.weight_cap()));
    }
    return normal_form(a * b, ring, w);
}

Coordinates Presentation::express_xi(unsigned i, Ring ring) const
{
    if (m_spec.kind() != PresentationKind::gauge) {
        throw ArgumentError("express_xi needs a gauge presentation");
    }
    if (i < 1u) {
        throw ArgumentError("x-generator index must be >= 1");
    }
    if (i > m_spec.weight_cap()) {
        throw CapError("x" + std::to_string(i) + " exceeds the weight cap " + std::to_string(m_spec.weight_cap()));
    }
    return normal_form(GradedPoly::generator(m_spec.context(), {Family::x, i}), ring);
}

GradedPoly Presentation::representative(const Coordinates &coords) const
{
    if (coords.smith) {
        throw ArgumentError("Smith coordinates have no monomial representative");
    }
    const auto comp = component(coords.weight, coords.ring);
    GradedPoly out(m_spec.context());
    for (std::size_t i = 0; i < coords.free.size(); ++i) {
        const auto &c = coords.free[i];
        if (c.get_den() != 1) {
            throw ArgumentError("coordinate " + c.get_str() + " is not integral");
        }
        out.add_term(comp->monomials[comp->basis[i]], c.get_num());
    }
    return out;
}

std::string Presentation::render(const Coordinates &coords) const
{
    if (coords.smith) {
        std::ostringstream os;
        os << "smith(free: [";
        for (std::size_t i = 0; i < coords.free.size(); ++i) {
            os << (i ? ", " : "") << coords.free[i].get_str();
        }
        os << "], torsion: [";
        for (std::size_t i = 0; i < coords.torsion.size(); ++i) {
            os << (i ? ", " : "") << coords.torsion[i].get_str() << " mod " << coords.torsion_orders[i].get_str();
        }
        os << "])";
        return os.str();
    }
    const auto comp = component(coords.weight, coords.ring);
    const auto &ctx = *m_spec.context();
    std::string out;
    for (std::size_t i = 0; i < coords.free.size(); ++i) {
        const auto &c = coords.free[i];
        if (c == 0) {
            continue;
        }
        const bool neg = c < 0;
        const Rational mag = abs(c);
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        const auto &mono = comp->monomials[comp->basis[i]];
        if (mono.is_one()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono.to_string(ctx);
        } else {
            out += mag.get_str() + "*" + mono.to_string(ctx);
        }
    }
    return out.empty() ? "0" : out;
}

DegreeComponent degree_component(const PresentationSpec &spec, unsigned w, Ring ring)
{
    return build_degree_component(spec, w, ring);
}

TruncatedSeries poincare_series(const PresentationSpec &spec, unsigned cap, Ring ring)
{
    return Presentation(spec).poincare_series(ring, cap);
}

TruncatedSeries leray_hirsch_series(unsigned n, unsigned cap)
{
    auto base = TruncatedSeries::one(cap);
    for (unsigned i = 1; i <= n; ++i) {
        base = base * TruncatedSeries::geometric(i, cap);
    }
    return base * poincare_series(PresentationSpec::bott(n, std::max(cap, 1u)), cap, Ring::rationals());
}

std::vector<TorsionEntry> torsion_report(const PresentationSpec &spec, unsigned cap)
{
    return Presentation(spec).torsion_report(cap);
}

Coordinates normal_form(const PresentationSpec &spec, const GradedPoly &p, Ring ring)
{
    return Presentation(spec).normal_form(p, ring);
}

Coordinates product(const PresentationSpec &spec, const GradedPoly &p, const GradedPoly &q, Ring ring)
{
    return Presentation(spec).product(p, q, ring);
}

Coordinates express_xi(const PresentationSpec &spec, unsigned i, Ring ring)
{
    return Presentation(spec).express_xi(i, ring);
}

} // namespace gaugecoho
