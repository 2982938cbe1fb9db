#include <gaugecoho/suspension.hpp>

#include <mutex>

#include <gaugecoho/errors.hpp>
#include <gaugecoho/symfunc.hpp>

namespace gaugecoho
{

namespace
{

ContextPtr stable_context(unsigned max_index)
{
    std::vector<Generator> gens;
    for (unsigned i = 1; i <= max_index; ++i) {
        gens.push_back({Family::c, i});
        gens.push_back({Family::x, i});
    }
    return GeneratorContext::make(std::move(gens));
}

GradedPoly chern(const ContextPtr &ctx, unsigned m)
{
    if (m == 0u) {
        return GradedPoly::constant(ctx, 1);
    }
    if (!ctx->position({Family::c, m})) {
        throw CapError("c" + std::to_string(m) + " is outside the suspension context");
    }
    return GradedPoly::generator(ctx, {Family::c, m});
}

// s_m with e_t -> x_t.
GradedPoly newton_in_x(unsigned m, const ContextPtr &ctx)
{
    return from_elementary(symfunc::power_sum_in_e(static_cast<int>(m)), ctx, Family::x);
}

GradedPoly drop_c_above(const GradedPoly &p, unsigned n)
{
    const auto &ctx = *p.context();
    GradedPoly out(p.context());
    for (const auto &[mono, coeff] : p.terms()) {
        bool keep = true;
        for (const auto &[pos, e] : mono.factors()) {
            const auto &g = ctx.generator(pos);
            if (g.family == Family::c && g.index > n) {
                keep = false;
                break;
            }
        }
        if (keep) {
            out.add_term(mono, coeff);
        }
    }
    return out;
}

} // namespace

SuspensionOperator::SuspensionOperator(long k, unsigned max_index, std::optional<unsigned> n)
    : m_k(k), m_max(max_index), m_n(n)
{
    if (max_index < 1u) {
        throw ArgumentError("suspension context needs at least c1");
    }
    if (n && *n < 1u) {
        throw ArgumentError("n must be >= 1");
    }
    m_ctx = stable_context(max_index);
}

GradedPoly SuspensionOperator::generator_image(unsigned i) const
{
    if (i < 1u) {
        throw ArgumentError("suspension generator index must be >= 1");
    }
    if (i > m_max + 1u) {
        throw CapError("c" + std::to_string(i) + " exceeds the suspension context (max index "
                       + std::to_string(m_max) + ")");
    }
    {
        std::shared_lock lock(m_mutex);
        if (const auto it = m_images.find(i); it != m_images.end()) {
            return it->second;
        }
    }
    GradedPoly img = Integer(m_k) * chern(m_ctx, i - 1u);
    for (unsigned j = 2; j <= i; ++j) {
        const Integer sign = j % 2u == 0u ? -1 : 1;
        img += sign * (newton_in_x(j - 1u, m_ctx) * chern(m_ctx, i - j));
    }
    std::unique_lock lock(m_mutex);
    return m_images.try_emplace(i, std::move(img)).first->second;
}

GradedPoly SuspensionOperator::apply(const GradedPoly &p) const
{
    if (p.uses_family(Family::x) || p.uses_family(Family::y)) {
        throw ArgumentError("the suspension operator takes polynomials in the c generators only");
    }
    const GradedPoly q = p.recontext(m_ctx);
    GradedPoly out(m_ctx);
    for (const auto &[mono, coeff] : q.terms()) {
        const auto &factors = mono.factors();
        for (std::size_t f = 0; f < factors.size(); ++f) {
            auto rest = factors;
            const auto [pos, e] = factors[f];
            rest[f].second = e - 1u;
            const auto image = generator_image(m_ctx->generator(pos).index);
            out += GradedPoly::monomial(m_ctx, Monomial(*m_ctx, std::move(rest)), coeff * e) * image;
        }
    }
    return out;
}

GradedPoly SuspensionOperator::generator_image_via_coproduct(unsigned i) const
{
    if (i < 1u) {
        throw ArgumentError("suspension generator index must be >= 1");
    }
    GradedPoly out(m_ctx);
    for (unsigned j = 0; j <= i; ++j) {
        // sigma2 of the left factor: 0 on the unit, k on c_1 (the only degree where
        // the sphere contributes), sigma0 otherwise.
        GradedPoly left(m_ctx);
        if (j == 1u) {
            left = GradedPoly::constant(m_ctx, m_k);
        } else if (j >= 2u) {
            left = sigma0_generator(j, m_ctx);
        }
        if (!left.is_zero()) {
            out += left * chern(m_ctx, i - j);
        }
    }
    return out;
}

GradedPoly SuspensionOperator::truncate(const GradedPoly &p) const
{
    return m_n ? project_to_gauge(p, *m_n) : p;
}

std::vector<std::pair<GradedPoly, GradedPoly>> whitney_coproduct(unsigned i, const ContextPtr &ctx)
{
    std::vector<std::pair<GradedPoly, GradedPoly>> out;
    for (unsigned j = 0; j <= i; ++j) {
        out.emplace_back(chern(ctx, j), chern(ctx, i - j));
    }
    return out;
}

GradedPoly sigma0_generator(unsigned m, const ContextPtr &ctx)
{
    if (m < 1u) {
        throw ArgumentError("sigma0 index must be >= 1");
    }
    if (m == 1u) {
        return GradedPoly::zero(ctx);
    }
    const Integer sign = m % 2u == 0u ? -1 : 1;
    return sign * newton_in_x(m - 1u, ctx);
}

GradedPoly loop_restriction(const GradedPoly &p)
{
    return drop_c_above(p, 0);
}

GradedPoly project_to_gauge(const GradedPoly &p, unsigned n)
{
    return drop_c_above(p, n);
}

GradedPoly project_to_gauge(const GradedPoly &p, const PresentationSpec &spec)
{
    if (spec.kind() != PresentationKind::gauge) {
        throw ArgumentError("project_to_gauge needs a gauge presentation");
    }
    return drop_c_above(p, spec.n()).recontext(spec.context());
}

} // namespace gaugecoho
