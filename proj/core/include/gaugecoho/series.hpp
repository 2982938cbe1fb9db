#ifndef GAUGECOHO_SERIES_HPP
#define GAUGECOHO_SERIES_HPP

#include <string>
#include <vector>

#include <gaugecoho/numbers.hpp>

namespace gaugecoho
{

// Power series in t truncated after t^cap; coefficient w counts weight w.
class TruncatedSeries
{
public:
    explicit TruncatedSeries(unsigned cap) : m_coeffs(cap + 1u) {}
    explicit TruncatedSeries(std::vector<Integer> coeffs);

    static TruncatedSeries one(unsigned cap);
    // 1 / (1 - t^step)
    static TruncatedSeries geometric(unsigned step, unsigned cap);

    unsigned cap() const noexcept { return static_cast<unsigned>(m_coeffs.size() - 1u); }
    const std::vector<Integer> &coefficients() const noexcept { return m_coeffs; }
    Integer &operator[](unsigned w) { return m_coeffs.at(w); }
    const Integer &operator[](unsigned w) const { return m_coeffs.at(w); }

    // Product truncated at the smaller cap.
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

    // "1 + 2t + 4t^2 + O(t^3)"
    std::string to_string() const;

private:
    std::vector<Integer> m_coeffs;
};

} // namespace gaugecoho

#endif
