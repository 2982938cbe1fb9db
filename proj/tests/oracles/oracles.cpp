#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle
{

namespace
{

void prune(Poly &p)
{
    for (auto it = p.begin(); it != p.end();) {
        it = it->second == 0 ? p.erase(it) : std::next(it);
    }
}

void choose(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t> &)> &visit)
{
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0u);
    if (k > n) {
        return;
    }
    while (true) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

} // namespace

Poly constant(unsigned vars, const mpz_class &c)
{
    Poly p;
    if (c != 0) {
        p[std::vector<unsigned>(vars, 0u)] = c;
    }
    return p;
}

Poly add(const Poly &a, const Poly &b)
{
    Poly r = a;
    for (const auto &[e, c] : b) {
        r[e] += c;
    }
    prune(r);
    return r;
}

Poly mul(const Poly &a, const Poly &b)
{
    Poly r;
    for (const auto &[ea, ca] : a) {
        for (const auto &[eb, cb] : b) {
            std::vector<unsigned> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            r[e] += ca * cb;
        }
    }
    prune(r);
    return r;
}

Poly scale(const Poly &a, const mpz_class &c)
{
    Poly r;
    for (const auto &[e, v] : a) {
        r[e] = v * c;
    }
    prune(r);
    return r;
}

Poly elementary(unsigned vars, unsigned t)
{
    Poly p;
    if (t == 0u) {
        return constant(vars, 1);
    }
    choose(vars, t, [&](const std::vector<std::size_t> &idx) {
        std::vector<unsigned> e(vars, 0u);
        for (auto i : idx) {
            e[i] = 1;
        }
        p[e] += 1;
    });
    return p;
}

Poly power_sum(unsigned vars, unsigned i)
{
    Poly p;
    for (unsigned v = 0; v < vars; ++v) {
        std::vector<unsigned> e(vars, 0u);
        e[v] = i;
        p[e] += 1;
    }
    return p;
}

std::vector<std::vector<unsigned>> partitions(unsigned w, unsigned max_part)
{
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> go = [&](unsigned rest, unsigned cap) {
        if (rest == 0u) {
            out.push_back(cur);
            return;
        }
        for (unsigned part = std::min(rest, cap); part >= 1u; --part) {
            cur.push_back(part);
            go(rest - part, part);
            cur.pop_back();
        }
    };
    go(w, max_part);
    return out;
}

unsigned long count_partitions(unsigned w, unsigned max_part)
{
    return partitions(w, max_part).size();
}

unsigned long count_monomials(unsigned w, const std::vector<unsigned> &weights)
{
    std::function<unsigned long(unsigned, std::size_t)> go = [&](unsigned rest, std::size_t from) -> unsigned long {
        if (rest == 0u) {
            return 1;
        }
        unsigned long total = 0;
        for (std::size_t g = from; g < weights.size(); ++g) {
            if (weights[g] <= rest) {
                total += go(rest - weights[g], g);
            }
        }
        return total;
    };
    return go(w, 0);
}

unsigned long gauge_dimension(unsigned n, unsigned w)
{
    unsigned long total = 0;
    for (unsigned a = 0; a <= w; ++a) {
        total += count_partitions(a, n) * (n >= 2u ? count_partitions(w - a, n - 1u) : (w - a == 0u ? 1u : 0u));
    }
    return total;
}

mpz_class determinant(Matrix m)
{
    // Fraction-free elimination on a copy.
    const std::size_t n = m.size();
    mpz_class sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) {
            ++piv;
        }
        if (piv == n) {
            return 0;
        }
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<mpz_class> elementary_divisors_by_minors(const Matrix &m)
{
    std::vector<mpz_class> out;
    if (m.empty()) {
        return out;
    }
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    mpz_class prev = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        mpz_class g = 0;
        choose(rows, k, [&](const std::vector<std::size_t> &ri) {
            choose(cols, k, [&](const std::vector<std::size_t> &ci) {
                if (g == 1) {
                    return;
                }
                Matrix sub(k, std::vector<mpz_class>(k));
                for (std::size_t a = 0; a < k; ++a) {
                    for (std::size_t b = 0; b < k; ++b) {
                        sub[a][b] = m[ri[a]][ci[b]];
                    }
                }
                mpz_class d = determinant(sub);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            });
        });
        if (g == 0) {
            break;
        }
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

std::vector<mpz_class> bott_torsion(unsigned n, unsigned w)
{
    const unsigned vars = std::max(w, 1u);
    std::vector<Poly> e(w + 1u);
    for (unsigned t = 0; t <= w; ++t) {
        e[t] = elementary(vars, t);
    }
    const auto columns = partitions(w, w);
    Matrix rows;
    for (unsigned u = n; u <= w; ++u) {
        const auto p = power_sum(vars, u);
        for (const auto &mu : partitions(w - u, w - u)) {
            Poly prod = p;
            for (auto part : mu) {
                prod = mul(prod, e[part]);
            }
            std::vector<mpz_class> row;
            for (const auto &lambda : columns) {
                std::vector<unsigned> exps(vars, 0u);
                std::copy(lambda.begin(), lambda.end(), exps.begin());
                const auto it = prod.find(exps);
                row.push_back(it == prod.end() ? mpz_class(0) : it->second);
            }
            rows.push_back(std::move(row));
        }
    }
    std::vector<mpz_class> out;
    for (const auto &d : elementary_divisors_by_minors(rows)) {
        if (d != 1) {
            out.push_back(d);
        }
    }
    return out;
}

} // namespace oracle
