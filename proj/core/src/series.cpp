#include <gaugecoho/series.hpp>

#include <algorithm>

#include <gaugecoho/errors.hpp>

namespace gaugecoho
{

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs) : m_coeffs(std::move(coeffs))
{
    if (m_coeffs.empty()) {
        throw ArgumentError("a truncated series needs at least the constant coefficient");
    }
}

TruncatedSeries TruncatedSeries::one(unsigned cap)
{
    TruncatedSeries s(cap);
    s.m_coeffs[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::geometric(unsigned step, unsigned cap)
{
    if (step == 0u) {
        throw ArgumentError("1/(1 - t^0) is not a power series");
    }
    TruncatedSeries s(cap);
    for (unsigned w = 0; w <= cap; w += step) {
        s.m_coeffs[w] = 1;
    }
    return s;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const unsigned cap = std::min(a.cap(), b.cap());
    TruncatedSeries r(cap);
    for (unsigned i = 0; i <= cap; ++i) {
        if (a.m_coeffs[i] == 0) {
            continue;
        }
        for (unsigned j = 0; i + j <= cap; ++j) {
            r.m_coeffs[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
        }
    }
    return r;
}

std::string TruncatedSeries::to_string() const
{
    std::string out;
    for (unsigned w = 0; w < m_coeffs.size(); ++w) {
        const auto &c = m_coeffs[w];
        if (c == 0) {
            continue;
        }
        if (!out.empty()) {
            out += c < 0 ? " - " : " + ";
        } else if (c < 0) {
            out += "-";
        }
        const Integer mag = abs(c);
        if (w == 0u) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) {
            out += mag.get_str();
        }
        out += "t";
        if (w > 1u) {
            out += "^" + std::to_string(w);
        }
    }
    if (out.empty()) {
        out = "0";
    }
    return out + " + O(t^" + std::to_string(m_coeffs.size()) + ")";
}

} // namespace gaugecoho
