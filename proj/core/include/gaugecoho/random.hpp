#ifndef GAUGECOHO_RANDOM_HPP
#define GAUGECOHO_RANDOM_HPP

#include <cstdint>
#include <random>

#include <gaugecoho/polyring.hpp>
#include <gaugecoho/zlinalg.hpp>

namespace gaugecoho
{

inline constexpr std::uint64_t default_seed = 20240611;

// mt19937_64 with plain modulo mapping, so a seed gives the same stream on every
// standard library (the std distributions are implementation-defined).
class SeededRng
{
public:
    explicit SeededRng(std::uint64_t seed = default_seed) : m_engine(seed) {}

    std::uint64_t next() { return m_engine(); }
    // Uniform-ish in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return m_engine() % bound; }
    // In [lo, hi].
    long between(long lo, long hi)
    {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1u));
    }
    bool coin() { return (m_engine() & 1u) != 0u; }

private:
    std::mt19937_64 m_engine;
};

// Homogeneous polynomial of weight w with up to max_terms terms and coefficients in
// [-bound, bound]; only generators of the listed families are used.
GradedPoly random_homogeneous(SeededRng &rng, const ContextPtr &ctx, unsigned w, unsigned max_terms, long bound,
                              std::initializer_list<Family> families = {Family::c, Family::x, Family::y});

// Mixed-weight polynomial with terms of weight <= max_weight.
GradedPoly random_poly(SeededRng &rng, const ContextPtr &ctx, unsigned max_weight, unsigned max_terms, long bound);

IntMatrix random_matrix(SeededRng &rng, std::size_t rows, std::size_t cols, long bound);

} // namespace gaugecoho

#endif
