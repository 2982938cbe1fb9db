#ifndef GAUGECOHO_SUSPENSION_HPP
#define GAUGECOHO_SUSPENSION_HPP

#include <map>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include <gaugecoho/polyring.hpp>
#include <gaugecoho/presentations.hpp>

namespace gaugecoho
{

// Free double suspension on the stable classes c_1..c_N of BU, landing in
// polynomials in c and x. Lowers weight by one.
class SuspensionOperator
{
public:
    static constexpr unsigned default_max_index = 16;

    // n, when given, is the truncation used by truncate().
    explicit SuspensionOperator(long k, unsigned max_index = default_max_index, std::optional<unsigned> n = std::nullopt);

    long k() const noexcept { return m_k; }
    std::optional<unsigned> n() const noexcept { return m_n; }
    unsigned max_index() const noexcept { return m_max; }
    // c_1..c_N, x_1..x_N
    const ContextPtr &context() const noexcept { return m_ctx; }

    // k c_{i-1} + sum_{2<=j<=i} (-1)^{j-1} s_{j-1}(x) c_{i-j}, with c_0 = 1.
    GradedPoly generator_image(unsigned i) const;
    // Derivation extension to polynomials in the c_i.
    GradedPoly apply(const GradedPoly &p) const;
    // Sum over the Whitney coproduct of sigma2(c_j) * c_{i-j}.
    GradedPoly generator_image_via_coproduct(unsigned i) const;
    // Sets c_m to 0 for m > n; identity when no n was given.
    GradedPoly truncate(const GradedPoly &p) const;

private:
    long m_k;
    unsigned m_max;
    std::optional<unsigned> m_n;
    ContextPtr m_ctx;
    mutable std::shared_mutex m_mutex;
    mutable std::map<unsigned, GradedPoly> m_images;
};

// (c_j, c_{i-j}) for 0 <= j <= i, with c_0 = 1.
std::vector<std::pair<GradedPoly, GradedPoly>> whitney_coproduct(unsigned i, const ContextPtr &ctx);

// 0 for m = 1, (-1)^{m-1} s_{m-1}(x) otherwise.
GradedPoly sigma0_generator(unsigned m, const ContextPtr &ctx);

// Sends every c_m to 0 and keeps the x terms.
GradedPoly loop_restriction(const GradedPoly &p);

// c_m -> 0 for m > n, staying in the context of p.
GradedPoly project_to_gauge(const GradedPoly &p, unsigned n);
// Same, then moved into the context of the gauge presentation.
GradedPoly project_to_gauge(const GradedPoly &p, const PresentationSpec &spec);

} // namespace gaugecoho

#endif
