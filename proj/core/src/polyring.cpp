#include <gaugecoho/polyring.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

#include <gaugecoho/errors.hpp>

namespace gaugecoho
{

char family_letter(Family f)
{
    switch (f) {
        case Family::c:
            return 'c';
        case Family::x:
            return 'x';
        case Family::y:
            return 'y';
    }
    return '?';
}

std::string Generator::name() const
{
    return family_letter(family) + std::to_string(index);
}

GeneratorContext::GeneratorContext(std::vector<Generator> generators, std::uint64_t modulus)
    : m_generators(std::move(generators)), m_modulus(modulus)
{
    std::sort(m_generators.begin(), m_generators.end());
    for (std::size_t i = 0; i < m_generators.size(); ++i) {
        if (m_generators[i].index == 0u) {
            throw ArgumentError("generator index must be >= 1");
        }
        if (i > 0 && m_generators[i] == m_generators[i - 1]) {
            throw ArgumentError("duplicate generator " + m_generators[i].name());
        }
    }
    if (modulus != 0 && !is_prime(modulus)) {
        throw ArgumentError("modulus " + std::to_string(modulus) + " is not prime");
    }
}

ContextPtr GeneratorContext::make(std::vector<Generator> generators, std::uint64_t modulus)
{
    return std::make_shared<const GeneratorContext>(std::move(generators), modulus);
}

ContextPtr GeneratorContext::gauge(unsigned n, unsigned x_cap, std::uint64_t modulus)
{
    std::vector<Generator> g;
    for (unsigned i = 1; i <= n; ++i) {
        g.push_back({Family::c, i});
    }
    for (unsigned i = 1; i <= x_cap; ++i) {
        g.push_back({Family::x, i});
    }
    return make(std::move(g), modulus);
}

ContextPtr GeneratorContext::bott(unsigned y_cap, std::uint64_t modulus)
{
    std::vector<Generator> g;
    for (unsigned i = 1; i <= y_cap; ++i) {
        g.push_back({Family::y, i});
    }
    return make(std::move(g), modulus);
}

std::optional<std::size_t> GeneratorContext::position(Generator g) const
{
    const auto it = std::lower_bound(m_generators.begin(), m_generators.end(), g);
    if (it == m_generators.end() || *it != g) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - m_generators.begin());
}

unsigned GeneratorContext::family_cap(Family f) const
{
    unsigned cap = 0;
    for (const auto &g : m_generators) {
        if (g.family == f) {
            cap = std::max(cap, g.index);
        }
    }
    return cap;
}

ContextPtr GeneratorContext::with_modulus(std::uint64_t modulus) const
{
    return make(m_generators, modulus);
}

std::string GeneratorContext::describe() const
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < m_generators.size(); ++i) {
        os << (i ? ", " : "") << m_generators[i].name();
    }
    os << '}';
    if (m_modulus != 0) {
        os << " mod " << m_modulus;
    }
    return os.str();
}

Monomial::Monomial(const GeneratorContext &ctx, std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end());
    for (const auto &[pos, e] : factors) {
        if (pos >= ctx.size()) {
            throw ArgumentError("generator position out of range");
        }
        if (e == 0u) {
            continue;
        }
        if (!m_factors.empty() && m_factors.back().first == pos) {
            m_factors.back().second += e;
        } else {
            m_factors.emplace_back(pos, e);
        }
        m_weight += ctx.generator(pos).weight() * e;
    }
}

std::uint32_t Monomial::exponent(std::uint32_t pos) const
{
    for (const auto &[p, e] : m_factors) {
        if (p == pos) {
            return e;
        }
    }
    return 0;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    Monomial r;
    r.m_weight = a.m_weight + b.m_weight;
    r.m_factors.reserve(a.m_factors.size() + b.m_factors.size());
    auto i = a.m_factors.begin();
    auto j = b.m_factors.begin();
    while (i != a.m_factors.end() || j != b.m_factors.end()) {
        if (j == b.m_factors.end() || (i != a.m_factors.end() && i->first < j->first)) {
            r.m_factors.push_back(*i++);
        } else if (i == a.m_factors.end() || j->first < i->first) {
            r.m_factors.push_back(*j++);
        } else {
            r.m_factors.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return r;
}

std::string Monomial::to_string(const GeneratorContext &ctx) const
{
    if (m_factors.empty()) {
        return "1";
    }
    std::string s;
    for (const auto &[pos, e] : m_factors) {
        if (!s.empty()) {
            s += '*';
        }
        s += ctx.generator(pos).name();
        if (e > 1u) {
            s += '^' + std::to_string(e);
        }
    }
    return s;
}

std::strong_ordering compare(const Monomial &a, const Monomial &b)
{
    if (a.weight() != b.weight()) {
        return a.weight() <=> b.weight();
    }
    const auto &fa = a.factors();
    const auto &fb = b.factors();
    for (std::size_t i = 0;; ++i) {
        const bool end_a = i == fa.size();
        const bool end_b = i == fb.size();
        if (end_a && end_b) {
            return std::strong_ordering::equal;
        }
        // A monomial that runs out has a zero where the other is positive.
        if (end_a) {
            return std::strong_ordering::greater;
        }
        if (end_b) {
            return std::strong_ordering::less;
        }
        if (fa[i].first != fb[i].first) {
            return fa[i].first < fb[i].first ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        if (fa[i].second != fb[i].second) {
            return fa[i].second > fb[i].second ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
}

bool MonomialOrder::operator()(const Monomial &a, const Monomial &b) const
{
    return compare(a, b) == std::strong_ordering::less;
}

GradedPoly::GradedPoly(ContextPtr ctx) : m_ctx(std::move(ctx))
{
    if (!m_ctx) {
        throw ArgumentError("polynomial requires a generator context");
    }
}

GradedPoly GradedPoly::constant(ContextPtr ctx, const Integer &c)
{
    GradedPoly p(std::move(ctx));
    p.add_term(Monomial{}, c);
    return p;
}

GradedPoly GradedPoly::generator(ContextPtr ctx, Generator g)
{
    const auto pos = ctx->position(g);
    if (!pos) {
        throw ContextMismatch("generator " + g.name() + " is not in context " + ctx->describe());
    }
    Monomial m(*ctx, {{static_cast<std::uint32_t>(*pos), 1u}});
    return monomial(std::move(ctx), m);
}

GradedPoly GradedPoly::monomial(ContextPtr ctx, const Monomial &m, const Integer &c)
{
    GradedPoly p(std::move(ctx));
    p.add_term(m, c);
    return p;
}

Integer GradedPoly::coefficient(const Monomial &m) const
{
    const auto it = m_terms.find(m);
    return it == m_terms.end() ? Integer(0) : it->second;
}

bool GradedPoly::is_homogeneous() const
{
    return m_terms.empty() || m_terms.begin()->first.weight() == m_terms.rbegin()->first.weight();
}

std::optional<unsigned> GradedPoly::weight() const
{
    if (m_terms.empty() || !is_homogeneous()) {
        return std::nullopt;
    }
    return m_terms.begin()->first.weight();
}

bool GradedPoly::uses_family(Family f) const
{
    for (const auto &[m, c] : m_terms) {
        for (const auto &[pos, e] : m.factors()) {
            if (m_ctx->generator(pos).family == f) {
                return true;
            }
        }
    }
    return false;
}

void GradedPoly::normalize(Integer &c) const
{
    if (m_ctx->modulus() != 0) {
        c = mod_floor(c, m_ctx->modulus());
    }
}

void GradedPoly::add_term(const Monomial &m, const Integer &c)
{
    Integer v = c;
    normalize(v);
    if (v == 0) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(m, v);
    if (!inserted) {
        it->second += v;
        normalize(it->second);
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

void GradedPoly::check_compatible(const GradedPoly &other) const
{
    if (m_ctx == other.m_ctx) {
        return;
    }
    if (!m_ctx->same_generators(*other.m_ctx)) {
        throw ContextMismatch("operands use different generator contexts: " + m_ctx->describe() + " vs "
                              + other.m_ctx->describe());
    }
    if (m_ctx->modulus() != other.m_ctx->modulus()) {
        throw DomainMismatch("operands use different coefficient rings (modulus " + std::to_string(m_ctx->modulus())
                             + " vs " + std::to_string(other.m_ctx->modulus()) + ")");
    }
}

GradedPoly &GradedPoly::operator+=(const GradedPoly &other)
{
    check_compatible(other);
    for (const auto &[m, c] : other.m_terms) {
        add_term(m, c);
    }
    return *this;
}

GradedPoly &GradedPoly::operator-=(const GradedPoly &other)
{
    check_compatible(other);
    for (const auto &[m, c] : other.m_terms) {
        add_term(m, -c);
    }
    return *this;
}

GradedPoly &GradedPoly::operator*=(const Integer &c)
{
    Terms old;
    old.swap(m_terms);
    for (const auto &[m, v] : old) {
        add_term(m, v * c);
    }
    return *this;
}

GradedPoly GradedPoly::operator-() const
{
    return *this * Integer(-1);
}

GradedPoly operator*(const GradedPoly &a, const GradedPoly &b)
{
    a.check_compatible(b);
    GradedPoly r(a.m_ctx);
    for (const auto &[ma, ca] : a.m_terms) {
        for (const auto &[mb, cb] : b.m_terms) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

GradedPoly GradedPoly::pow(unsigned e) const
{
    GradedPoly r = constant(m_ctx, 1);
    GradedPoly base = *this;
    while (e != 0u) {
        if (e & 1u) {
            r = r * base;
        }
        e >>= 1u;
        if (e != 0u) {
            base = base * base;
        }
    }
    return r;
}

bool operator==(const GradedPoly &a, const GradedPoly &b)
{
    if (a.m_ctx != b.m_ctx && !(*a.m_ctx == *b.m_ctx)) {
        return false;
    }
    return a.m_terms == b.m_terms;
}

GradedPoly GradedPoly::recontext(ContextPtr target) const
{
    if (*target == *m_ctx) {
        GradedPoly r(std::move(target));
        r.m_terms = m_terms;
        return r;
    }
    std::vector<std::optional<std::uint32_t>> map(m_ctx->size());
    GradedPoly r(target);
    for (const auto &[m, c] : m_terms) {
        std::vector<Monomial::Factor> f;
        for (const auto &[pos, e] : m.factors()) {
            if (!map[pos]) {
                const auto &g = m_ctx->generator(pos);
                const auto np = target->position(g);
                if (!np) {
                    throw ContextMismatch("generator " + g.name() + " does not exist in context " + target->describe());
                }
                map[pos] = static_cast<std::uint32_t>(*np);
            }
            f.emplace_back(*map[pos], e);
        }
        r.add_term(Monomial(*target, std::move(f)), c);
    }
    return r;
}

namespace
{

void enumerate(const GeneratorContext &ctx, std::size_t pos, unsigned remaining, std::vector<Monomial::Factor> &acc,
               std::vector<Monomial> &out)
{
    if (remaining == 0u) {
        out.emplace_back(ctx, acc);
        return;
    }
    if (pos == ctx.size()) {
        return;
    }
    const unsigned w = ctx.generator(pos).weight();
    for (unsigned e = remaining / w + 1; e-- > 0;) {
        if (e != 0u) {
            acc.emplace_back(static_cast<std::uint32_t>(pos), e);
        }
        enumerate(ctx, pos + 1, remaining - e * w, acc, out);
        if (e != 0u) {
            acc.pop_back();
        }
    }
}

} // namespace

std::vector<Monomial> monomials_of_weight(const GeneratorContext &ctx, unsigned w)
{
    std::vector<Monomial> out;
    std::vector<Monomial::Factor> acc;
    enumerate(ctx, 0, w, acc, out);
    return out;
}

GradedPoly substitute(const GradedPoly &p, const std::map<Generator, GradedPoly> &assignment)
{
    const auto &ctx = p.context();
    std::vector<std::optional<GradedPoly>> images(ctx->size());
    for (const auto &[g, img] : assignment) {
        const auto pos = ctx->position(g);
        if (!pos) {
            // Nothing in p can use it.
            continue;
        }
        if (!img.context()->same_generators(*ctx)) {
            throw ContextMismatch("image of " + g.name() + " lives in an incompatible context");
        }
        if (img.context()->modulus() != ctx->modulus()) {
            throw DomainMismatch("image of " + g.name() + " uses a different coefficient ring");
        }
        images[*pos] = img;
    }
    // Memoized powers of each image.
    std::map<std::pair<std::uint32_t, std::uint32_t>, GradedPoly> powers;
    GradedPoly r(ctx);
    for (const auto &[m, c] : p.terms()) {
        GradedPoly term = GradedPoly::constant(ctx, c);
        std::vector<Monomial::Factor> kept;
        for (const auto &[pos, e] : m.factors()) {
            if (!images[pos]) {
                kept.emplace_back(pos, e);
                continue;
            }
            auto it = powers.find({pos, e});
            if (it == powers.end()) {
                it = powers.emplace(std::pair{pos, e}, images[pos]->pow(e)).first;
            }
            term = term * it->second;
            if (term.is_zero()) {
                break;
            }
        }
        if (term.is_zero()) {
            continue;
        }
        r += term * GradedPoly::monomial(ctx, Monomial(*ctx, std::move(kept)));
    }
    return r;
}

GradedPoly reduce_mod(const GradedPoly &p, std::uint64_t prime)
{
    if (p.context()->modulus() != 0 && p.context()->modulus() != prime) {
        throw DomainMismatch("cannot reduce an F_" + std::to_string(p.context()->modulus()) + " polynomial mod "
                             + std::to_string(prime));
    }
    GradedPoly r(p.context()->with_modulus(prime));
    for (const auto &[m, c] : p.terms()) {
        r.add_term(m, c);
    }
    return r;
}

GradedPoly from_elementary(const symfunc::SymPoly &s, ContextPtr ctx, Family family)
{
    if (s.basis() != symfunc::Basis::elementary) {
        throw ArgumentError("from_elementary expects a polynomial in the elementary basis");
    }
    GradedPoly r(ctx);
    for (const auto &[e, c] : s.terms()) {
        if (c.get_den() != 1) {
            throw ArgumentError("from_elementary expects integer coefficients, got " + c.get_str());
        }
        std::vector<Monomial::Factor> f;
        for (std::size_t t = 0; t < e.size(); ++t) {
            if (e[t] == 0u) {
                continue;
            }
            const Generator g{family, static_cast<unsigned>(t + 1)};
            const auto pos = ctx->position(g);
            if (!pos) {
                throw ContextMismatch("generator " + g.name() + " is not in context " + ctx->describe());
            }
            f.emplace_back(static_cast<std::uint32_t>(*pos), e[t]);
        }
        r.add_term(Monomial(*ctx, std::move(f)), c.get_num());
    }
    return r;
}

namespace
{

class Parser
{
public:
    Parser(std::string_view text, ContextPtr ctx) : m_text(text), m_ctx(std::move(ctx)) {}

    GradedPoly parse()
    {
        GradedPoly result(m_ctx);
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = get() == '-';
        }
        result += term(negative);
        for (;;) {
            skip_ws();
            if (at_end()) {
                break;
            }
            const char op = peek();
            if (op != '+' && op != '-') {
                fail("expected '+' or '-'");
            }
            get();
            result += term(op == '-');
        }
        return result;
    }

private:
    bool at_end() const { return m_pos >= m_text.size(); }
    char peek() const { return at_end() ? '\0' : m_text[m_pos]; }
    char get() { return m_text[m_pos++]; }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++m_pos;
        }
    }

    [[noreturn]] void fail(const std::string &what) const
    {
        std::string msg = "syntax error: " + what;
        if (!at_end()) {
            msg += std::string(", found '") + peek() + "'";
        } else {
            msg += ", found end of input";
        }
        throw ParseError(ParseError::Kind::syntax, m_pos, msg);
    }

    std::string digits()
    {
        const auto start = m_pos;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++m_pos;
        }
        return std::string(m_text.substr(start, m_pos - start));
    }

    GradedPoly term(bool negative)
    {
        skip_ws();
        Integer coeff = negative ? -1 : 1;
        std::vector<Monomial::Factor> factors;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff *= Integer(digits());
        } else {
            factor(factors);
        }
        for (;;) {
            skip_ws();
            if (peek() != '*') {
                break;
            }
            get();
            skip_ws();
            factor(factors);
        }
        return GradedPoly::monomial(m_ctx, Monomial(*m_ctx, std::move(factors)), coeff);
    }

    void factor(std::vector<Monomial::Factor> &out)
    {
        const auto start = m_pos;
        Family family{};
        switch (peek()) {
            case 'c':
                family = Family::c;
                break;
            case 'x':
                family = Family::x;
                break;
            case 'y':
                family = Family::y;
                break;
            default:
                fail("expected a generator (c, x or y followed by an index) or an integer");
        }
        get();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected generator index");
        }
        const auto idx = digits();
        if (idx.size() > 9) {
            throw ParseError(ParseError::Kind::index_out_of_range, start, "generator index too large");
        }
        const Generator g{family, static_cast<unsigned>(std::stoul(idx))};
        const auto pos = resolve(g, start);
        std::uint32_t e = 1;
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                fail("expected exponent");
            }
            const auto ds = digits();
            if (ds.size() > 6) {
                throw ParseError(ParseError::Kind::syntax, m_pos, "exponent too large");
            }
            e = static_cast<std::uint32_t>(std::stoul(ds));
        }
        out.emplace_back(pos, e);
    }

    std::uint32_t resolve(Generator g, std::size_t at) const
    {
        if (g.index == 0u) {
            throw ParseError(ParseError::Kind::index_out_of_range, at, "generator " + g.name() + " has index 0");
        }
        if (const auto pos = m_ctx->position(g)) {
            return static_cast<std::uint32_t>(*pos);
        }
        const auto cap = m_ctx->family_cap(g.family);
        // c-generators are bounded by the rank n; x and y only by the weight cap.
        if (cap == 0u || g.family == Family::c) {
            throw ParseError(ParseError::Kind::unknown_generator, at,
                             "unknown generator " + g.name() + " in context " + m_ctx->describe());
        }
        throw ParseError(ParseError::Kind::index_out_of_range, at,
                         "generator " + g.name() + " exceeds the cap " + std::to_string(cap));
    }

    std::string_view m_text;
    ContextPtr m_ctx;
    std::size_t m_pos = 0;
};

} // namespace

GradedPoly parse_poly(std::string_view text, ContextPtr ctx)
{
    return Parser(text, std::move(ctx)).parse();
}

std::string render_poly(const GradedPoly &p)
{
    if (p.is_zero()) {
        return "0";
    }
    const auto &ctx = *p.context();
    std::string out;
    bool first = true;
    for (const auto &[m, c] : p.terms()) {
        const bool neg = c < 0;
        const Integer mag = abs(c);
        if (first) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += m.to_string(ctx);
        } else {
            out += mag.get_str() + "*" + m.to_string(ctx);
        }
    }
    return out;
}

} // namespace gaugecoho
