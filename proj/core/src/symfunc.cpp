#include <gaugecoho/symfunc.hpp>

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <sstream>

#include <gaugecoho/errors.hpp>

namespace gaugecoho::symfunc
{

namespace
{

void require_positive(int i, const char *what)
{
    if (i < 1) {
        throw ArgumentError(std::string(what) + ": index must be >= 1, got " + std::to_string(i));
    }
}

// Power sums in the elementary basis are reused by every caller; the table only grows.
const SymPoly &power_sum_cached(unsigned i)
{
    static std::mutex mutex;
    static std::vector<SymPoly> table{SymPoly(Basis::elementary)};
    std::lock_guard lock(mutex);
    // p_m = sum_{j=1}^{m-1} (-1)^{j-1} e_j p_{m-j} + (-1)^{m-1} m e_m
    for (auto m = static_cast<unsigned>(table.size()); m <= i; ++m) {
        SymPoly pm(Basis::elementary);
        for (unsigned j = 1; j < m; ++j) {
            const Rational sign = (j % 2u == 1u) ? 1 : -1;
            pm += sign * (SymPoly::generator(Basis::elementary, j) * table[m - j]);
        }
        const Rational last = ((m % 2u == 1u) ? 1 : -1) * Rational(m);
        pm += last * SymPoly::generator(Basis::elementary, m);
        table.push_back(std::move(pm));
    }
    return table[i];
}

} // namespace

SymPoly SymPoly::constant(Basis basis, const Rational &c)
{
    SymPoly r(basis);
    r.add_term({}, c);
    return r;
}

SymPoly SymPoly::generator(Basis basis, unsigned index)
{
    if (index == 0u) {
        throw ArgumentError("symmetric generator index must be >= 1");
    }
    SymPoly r(basis);
    Exponents e(index, 0u);
    e[index - 1] = 1;
    r.add_term(e, 1);
    return r;
}

unsigned SymPoly::weight_of(const Exponents &e)
{
    unsigned w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        w += static_cast<unsigned>(i + 1) * e[i];
    }
    return w;
}

bool SymPoly::has_integer_coefficients() const
{
    for (const auto &[e, c] : m_terms) {
        if (c.get_den() != 1) {
            return false;
        }
    }
    return true;
}

std::optional<unsigned> SymPoly::weight() const
{
    std::optional<unsigned> w;
    for (const auto &[e, c] : m_terms) {
        const auto we = weight_of(e);
        if (w && *w != we) {
            return std::nullopt;
        }
        w = we;
    }
    return w;
}

void SymPoly::add_term(const Exponents &e, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

SymPoly &SymPoly::operator+=(const SymPoly &other)
{
    if (other.m_basis != m_basis) {
        throw ArgumentError("cannot add symmetric polynomials in different bases");
    }
    for (const auto &[e, c] : other.m_terms) {
        add_term(e, c);
    }
    return *this;
}

SymPoly &SymPoly::operator-=(const SymPoly &other)
{
    return *this += -other;
}

SymPoly &SymPoly::operator*=(const Rational &c)
{
    if (c == 0) {
        m_terms.clear();
        return *this;
    }
    for (auto &[e, v] : m_terms) {
        v *= c;
    }
    return *this;
}

SymPoly operator*(const SymPoly &a, const SymPoly &b)
{
    if (a.m_basis != b.m_basis) {
        throw ArgumentError("cannot multiply symmetric polynomials in different bases");
    }
    SymPoly r(a.m_basis);
    for (const auto &[ea, ca] : a.m_terms) {
        for (const auto &[eb, cb] : b.m_terms) {
            SymPoly::Exponents e(std::max(ea.size(), eb.size()), 0u);
            for (std::size_t i = 0; i < ea.size(); ++i) {
                e[i] += ea[i];
            }
            for (std::size_t i = 0; i < eb.size(); ++i) {
                e[i] += eb[i];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

SymPoly SymPoly::pow(unsigned e) const
{
    auto r = constant(m_basis, 1);
    for (unsigned i = 0; i < e; ++i) {
        r = r * *this;
    }
    return r;
}

Rational SymPoly::evaluate(std::span<const Rational> values) const
{
    Rational total = 0;
    for (const auto &[e, c] : m_terms) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size() && t != 0; ++i) {
            if (e[i] == 0u) {
                continue;
            }
            const Rational v = i < values.size() ? values[i] : Rational(0);
            for (unsigned k = 0; k < e[i]; ++k) {
                t *= v;
            }
        }
        total += t;
    }
    return total;
}

SymPoly SymPoly::substitute(const std::function<SymPoly(unsigned)> &image, Basis target) const
{
    std::vector<std::optional<SymPoly>> images;
    SymPoly r(target);
    for (const auto &[e, c] : m_terms) {
        auto t = constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0u) {
                continue;
            }
            if (images.size() <= i) {
                images.resize(i + 1);
            }
            if (!images[i]) {
                images[i] = image(static_cast<unsigned>(i + 1));
            }
            t = t * images[i]->pow(e[i]);
        }
        r += t;
    }
    return r;
}

std::string SymPoly::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    const char letter = m_basis == Basis::elementary ? 'e' : 's';
    // Same order as graded polynomials: weight first, then larger exponents on
    // earlier generators.
    std::vector<const Terms::value_type *> order;
    for (const auto &t : m_terms) {
        order.push_back(&t);
    }
    std::sort(order.begin(), order.end(), [](const auto *a, const auto *b) {
        const auto wa = weight_of(a->first);
        const auto wb = weight_of(b->first);
        return wa != wb ? wa < wb : a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto *term : order) {
        const auto &[e, c] = *term;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) {
                os << '-';
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (mag != 1 || e.empty()) {
            os << mag.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0u) {
                continue;
            }
            if (need_star) {
                os << '*';
            }
            os << letter << (i + 1);
            if (e[i] > 1u) {
                os << '^' << e[i];
            }
            need_star = true;
        }
    }
    return os.str();
}

SymPoly power_sum_in_e(int i)
{
    require_positive(i, "power_sum_in_e");
    return power_sum_cached(static_cast<unsigned>(i));
}

SymPoly e_in_power_sums(int i)
{
    require_positive(i, "e_in_power_sums");
    // m e_m = sum_{j=1}^{m} (-1)^{j-1} e_{m-j} p_j, e_0 = 1
    std::vector<SymPoly> e{SymPoly::constant(Basis::power_sum, 1)};
    for (int m = 1; m <= i; ++m) {
        SymPoly em(Basis::power_sum);
        for (int j = 1; j <= m; ++j) {
            const Rational sign = (j % 2 == 1) ? 1 : -1;
            em += sign * (e[static_cast<std::size_t>(m - j)]
                          * SymPoly::generator(Basis::power_sum, static_cast<unsigned>(j)));
        }
        em *= Rational(1, m);
        e.push_back(std::move(em));
    }
    return e.back();
}

bool newton_recurrence_check(int i)
{
    if (i < 1) {
        return false;
    }
    SymPoly lhs = power_sum_in_e(i);
    for (int j = 1; j < i; ++j) {
        const Rational sign = (j % 2 == 1) ? -1 : 1;
        lhs += sign * (SymPoly::generator(Basis::elementary, static_cast<unsigned>(j)) * power_sum_in_e(i - j));
    }
    const Rational last = ((i % 2 == 1) ? -1 : 1) * Rational(i);
    lhs += last * SymPoly::generator(Basis::elementary, static_cast<unsigned>(i));
    return lhs.is_zero();
}

SymPoly chern_character_component(int i)
{
    require_positive(i, "chern_character_component");
    return power_sum_in_e(i) * Rational(Integer(1), factorial(static_cast<unsigned>(i)));
}

} // namespace gaugecoho::symfunc
