#include <gaugecoho/random.hpp>

#include <algorithm>

namespace gaugecoho
{

namespace
{

std::vector<Monomial> monomials_over(const ContextPtr &ctx, unsigned w, std::initializer_list<Family> families)
{
    auto all = monomials_of_weight(*ctx, w);
    std::erase_if(all, [&](const Monomial &m) {
        return std::any_of(m.factors().begin(), m.factors().end(), [&](const Monomial::Factor &f) {
            const auto fam = ctx->generator(f.first).family;
            return std::find(families.begin(), families.end(), fam) == families.end();
        });
    });
    return all;
}

} // namespace

GradedPoly random_homogeneous(SeededRng &rng, const ContextPtr &ctx, unsigned w, unsigned max_terms, long bound,
                              std::initializer_list<Family> families)
{
    GradedPoly out(ctx);
    const auto pool = monomials_over(ctx, w, families);
    if (pool.empty() || max_terms == 0u) {
        return out;
    }
    const auto terms = 1u + rng.below(max_terms);
    for (unsigned t = 0; t < terms; ++t) {
        const auto &m = pool[rng.below(pool.size())];
        out.add_term(m, Integer(rng.between(-bound, bound)));
    }
    return out;
}

GradedPoly random_poly(SeededRng &rng, const ContextPtr &ctx, unsigned max_weight, unsigned max_terms, long bound)
{
    GradedPoly out(ctx);
    const auto terms = rng.below(max_terms + 1u);
    for (unsigned t = 0; t < terms; ++t) {
        const auto w = static_cast<unsigned>(rng.below(max_weight + 1u));
        const auto pool = monomials_of_weight(*ctx, w);
        out.add_term(pool[rng.below(pool.size())], Integer(rng.between(-bound, bound)));
    }
    return out;
}

IntMatrix random_matrix(SeededRng &rng, std::size_t rows, std::size_t cols, long bound)
{
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = rng.between(-bound, bound);
        }
    }
    return m;
}

} // namespace gaugecoho
