#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include <gaugecoho/component_cache.hpp>
#include <gaugecoho/errors.hpp>
#include <gaugecoho/presentations.hpp>
#include <gaugecoho/suspension.hpp>
#include <gaugecoho/verify.hpp>

namespace gaugecoho::cli
{

namespace
{

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpecFlags {
    unsigned n = 1;
    long k = 0;
    bool bott = false;
    unsigned max_weight = default_weight_cap;
};

struct CommonFlags {
    bool json = false;
    std::optional<std::uint64_t> modulus;
    std::string cache_dir;
};

void add_spec_flags(CLI::App *sub, SpecFlags &f)
{
    sub->add_option("--n", f.n, "Rank n of U(n)")->required()->check(CLI::PositiveNumber);
    sub->add_option("--k", f.k, "Bundle degree k (ignored with --bott)");
    sub->add_flag("--bott", f.bott, "Use Z[y1, y2, ...]/(s_n, s_n+1, ...) instead of the gauge presentation");
    sub->add_option("--max-weight", f.max_weight, "Weight cap D (weight = half the degree)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void add_json_flag(CLI::App *sub, CommonFlags &c)
{
    sub->add_flag("--json", c.json, "Machine-readable output");
}

void add_ring_flags(CLI::App *sub, CommonFlags &c)
{
    sub->add_option("--modulus", c.modulus, "0 for Q, a prime p for F_p");
}

void add_cache_flag(CLI::App *sub, CommonFlags &c)
{
    sub->add_option("--cache-dir", c.cache_dir, "Component cache directory (default: $GAUGE_COHO_CACHE)");
}

std::optional<std::filesystem::path> cache_directory(const CommonFlags &c)
{
    if (!c.cache_dir.empty()) {
        return std::filesystem::path(c.cache_dir);
    }
    if (const char *env = std::getenv("GAUGE_COHO_CACHE"); env != nullptr && *env != '\0') {
        return std::filesystem::path(env);
    }
    return std::nullopt;
}

std::shared_ptr<ComponentCache> make_cache(const CommonFlags &c)
{
    const auto dir = cache_directory(c);
    return dir ? std::make_shared<ComponentCache>(*dir) : std::make_shared<ComponentCache>();
}

Ring checked_ring(std::uint64_t modulus)
{
    if (modulus != 0u && !is_prime(modulus)) {
        throw UsageError("--modulus must be 0 or a prime, got " + std::to_string(modulus));
    }
    return Ring::from_modulus(modulus);
}

PresentationSpec make_spec(const SpecFlags &f)
{
    return f.bott ? PresentationSpec::bott(f.n, f.max_weight) : PresentationSpec::gauge(f.n, f.k, f.max_weight);
}

json spec_json(const PresentationSpec &s)
{
    json j = {{"kind", s.kind() == PresentationKind::gauge ? "gauge" : "bott"}, {"n", s.n()}};
    if (s.kind() == PresentationKind::gauge) {
        j["k"] = s.k();
    }
    j["max_weight"] = s.weight_cap();
    return j;
}

json integers_json(const std::vector<Integer> &v)
{
    json a = json::array();
    for (const auto &x : v) {
        if (x.fits_slong_p()) {
            a.push_back(x.get_si());
        } else {
            a.push_back(x.get_str());
        }
    }
    return a;
}

std::vector<Integer> nontrivial(const std::vector<Integer> &divisors)
{
    std::vector<Integer> out;
    std::copy_if(divisors.begin(), divisors.end(), std::back_inserter(out), [](const Integer &d) { return d != 1; });
    return out;
}

// Summaries for weights 0..D, read from disk where possible, otherwise computed in parallel.
std::vector<ComponentSummary> summaries(const Presentation &pres, Ring ring)
{
    const unsigned D = pres.spec().weight_cap();
    const auto &ctx = *pres.spec().context();
    bool missing = false;
    for (unsigned w = 0; w <= D && !missing; ++w) {
        const auto key = ComponentKey::of(pres.spec(), w, ring);
        missing = !pres.cache()->load_summary(key, monomial_list_hash(monomials_of_weight(ctx, w), ctx));
    }
    if (missing) {
        pres.components(ring, D);
    }
    std::vector<ComponentSummary> out;
    for (unsigned w = 0; w <= D; ++w) {
        out.push_back(cached_summary(pres, w, ring));
    }
    return out;
}

std::vector<std::string> basis_names(const Presentation &pres, const ComponentSummary &s)
{
    const auto &ctx = *pres.spec().context();
    const auto monos = monomials_of_weight(ctx, s.key.weight);
    std::vector<std::string> names;
    for (const auto idx : s.basis) {
        names.push_back(monos.at(idx).to_string(ctx));
    }
    return names;
}

// Degree table. Without a modulus, dims and bases come from Z (equal to Q) and
// divisors list the Z torsion.
json degrees_json(const Presentation &pres, const std::vector<ComponentSummary> &sums)
{
    json degrees = json::array();
    for (const auto &s : sums) {
        degrees.push_back({{"weight", s.key.weight},
                           {"dim", s.dim},
                           {"divisors", integers_json(nontrivial(s.divisors))},
                           {"basis", basis_names(pres, s)}});
    }
    return degrees;
}

std::string join(const std::vector<std::string> &parts, const std::string &sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? sep : "") + parts[i];
    }
    return out;
}

std::string divisor_text(const std::vector<Integer> &ds)
{
    std::vector<std::string> parts;
    for (const auto &d : ds) {
        parts.push_back(d.get_str());
    }
    return "[" + join(parts, ", ") + "]";
}

std::string ring_label(const std::optional<std::uint64_t> &modulus)
{
    return modulus ? Ring::from_modulus(*modulus).name() : "Z and Q";
}

int cmd_present(const SpecFlags &sf, const CommonFlags &cf, std::ostream &out)
{
    const auto spec = make_spec(sf);
    const char letter = spec.kind() == PresentationKind::gauge ? 'h' : 's';
    json rels = json::array();
    std::string text = spec.describe() + "\n";
    for (unsigned i = spec.n(); i <= spec.weight_cap(); ++i) {
        const auto r = render_poly(spec.relation(i));
        const auto name = letter + std::to_string(i);
        rels.push_back({{"name", name}, {"index", i}, {"weight", i}, {"polynomial", r}});
        text += name + " = " + r + "\n";
    }
    if (cf.json) {
        out << json{{"spec", spec_json(spec)}, {"relations", rels}}.dump(2) << '\n';
    } else {
        out << text;
    }
    return exit_ok;
}

int cmd_basis(const SpecFlags &sf, const CommonFlags &cf, std::ostream &out)
{
    const Presentation pres(make_spec(sf), make_cache(cf));
    const Ring ring = cf.modulus ? checked_ring(*cf.modulus) : Ring::integers();
    const auto sums = summaries(pres, ring);
    if (cf.json) {
        out << json{{"spec", spec_json(pres.spec())},
                    {"ring", ring_label(cf.modulus)},
                    {"degrees", degrees_json(pres, sums)}}
                   .dump(2)
            << '\n';
        return exit_ok;
    }
    out << pres.spec().describe() << " over " << ring_label(cf.modulus) << '\n';
    for (const auto &s : sums) {
        const auto names = basis_names(pres, s);
        out << "w=" << s.key.weight << " dim " << s.dim << ": " << join(names, ", ");
        const auto t = nontrivial(s.divisors);
        if (!t.empty()) {
            out << "  torsion " << divisor_text(t);
        }
        out << '\n';
    }
    return exit_ok;
}

// Splits by weight, reduces every part and joins the rendered parts.
int reduce_and_print(const Presentation &pres, const GradedPoly &p, Ring ring, const std::string &input,
                     const CommonFlags &cf, std::ostream &out)
{
    std::map<unsigned, GradedPoly> parts;
    for (const auto &[mono, coeff] : p.terms()) {
        parts.try_emplace(mono.weight(), pres.spec().context()).first->second.add_term(mono, coeff);
    }
    if (parts.empty()) {
        parts.try_emplace(0u, pres.spec().context());
    }
    json comps = json::array();
    std::vector<std::string> rendered;
    for (const auto &[w, part] : parts) {
        const auto coords = pres.normal_form(part, ring, w);
        const auto text = pres.render(coords);
        json free = json::array();
        for (const auto &c : coords.free) {
            free.push_back(c.get_str());
        }
        json torsion = json::array();
        for (std::size_t i = 0; i < coords.torsion.size(); ++i) {
            torsion.push_back({{"residue", coords.torsion[i].get_str()}, {"order", coords.torsion_orders[i].get_str()}});
        }
        json c = {{"weight", w}, {"normal_form", text}, {"smith", coords.smith}, {"coordinates", free},
                  {"torsion", torsion}};
        if (!coords.smith) {
            const auto comp = pres.component(w, ring);
            std::vector<std::string> names;
            for (const auto idx : comp->basis) {
                names.push_back(comp->monomials[idx].to_string(*pres.spec().context()));
            }
            c["basis"] = names;
        }
        comps.push_back(std::move(c));
        if (text != "0") {
            rendered.push_back(text);
        }
    }
    std::string joined;
    for (const auto &r : rendered) {
        if (joined.empty()) {
            joined = r;
        } else if (r.starts_with("-")) {
            joined += " - " + r.substr(1);
        } else {
            joined += " + " + r;
        }
    }
    if (joined.empty()) {
        joined = "0";
    }
    if (cf.json) {
        out << json{{"spec", spec_json(pres.spec())},
                    {"ring", ring.name()},
                    {"input", input},
                    {"normal_form", joined},
                    {"components", comps}}
                   .dump(2)
            << '\n';
    } else {
        out << joined << '\n';
    }
    return exit_ok;
}

Ring reduction_ring(const CommonFlags &cf, bool integral)
{
    if (integral) {
        if (cf.modulus) {
            throw UsageError("--integral and --modulus are mutually exclusive");
        }
        return Ring::integers();
    }
    return checked_ring(cf.modulus.value_or(0u));
}

int cmd_reduce(const SpecFlags &sf, const CommonFlags &cf, bool integral, const std::string &poly, std::ostream &out)
{
    const Presentation pres(make_spec(sf), make_cache(cf));
    const auto ring = reduction_ring(cf, integral);
    return reduce_and_print(pres, parse_poly(poly, pres.spec().context()), ring, poly, cf, out);
}

int cmd_multiply(const SpecFlags &sf, const CommonFlags &cf, bool integral, const std::string &a,
                 const std::string &b, std::ostream &out)
{
    const Presentation pres(make_spec(sf), make_cache(cf));
    const auto ring = reduction_ring(cf, integral);
    const auto &ctx = pres.spec().context();
    const auto p = parse_poly(a, ctx);
    const auto q = parse_poly(b, ctx);
    if (p.is_homogeneous() && q.is_homogeneous()) {
        // Reject cap overflow before forming the product.
        const unsigned w = p.weight().value_or(0u) + q.weight().value_or(0u);
        if (w > pres.spec().weight_cap()) {
            throw CapError("product weight " + std::to_string(w) + " exceeds the weight cap "
                           + std::to_string(pres.spec().weight_cap()));
        }
    }
    return reduce_and_print(pres, p * q, ring, "(" + a + ")*(" + b + ")", cf, out);
}

int cmd_poincare(const SpecFlags &sf, const CommonFlags &cf, std::ostream &out)
{
    const Presentation pres(make_spec(sf), make_cache(cf));
    const auto &spec = pres.spec();
    const Ring ring = cf.modulus ? checked_ring(*cf.modulus) : Ring::rationals();
    const auto sums = summaries(pres, ring);
    TruncatedSeries series(spec.weight_cap());
    for (const auto &s : sums) {
        series[s.key.weight] = static_cast<unsigned long>(s.dim);
    }
    json torsion = json::array();
    std::vector<ComponentSummary> zsums;
    if (!cf.modulus) {
        zsums = summaries(pres, Ring::integers());
        for (const auto &s : zsums) {
            const auto t = nontrivial(s.divisors);
            if (!t.empty()) {
                torsion.push_back({{"weight", s.key.weight}, {"divisors", integers_json(t)}});
            }
        }
    }
    std::optional<TruncatedSeries> oracle;
    if (spec.kind() == PresentationKind::gauge) {
        oracle = leray_hirsch_series(spec.n(), spec.weight_cap());
    }
    if (cf.json) {
        json j = {{"spec", spec_json(spec)},
                  {"ring", ring.name()},
                  {"coefficients", integers_json(series.coefficients())},
                  {"series", series.to_string()},
                  {"degrees", degrees_json(pres, sums)}};
        if (!cf.modulus) {
            j["torsion"] = torsion;
        }
        if (oracle) {
            j["leray_hirsch"] = integers_json(oracle->coefficients());
            j["matches_leray_hirsch"] = *oracle == series;
        }
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    out << "P(t) over " << ring.name() << ": " << series.to_string() << '\n';
    if (oracle) {
        out << "Leray-Hirsch: " << oracle->to_string() << (*oracle == series ? "  (match)" : "  (MISMATCH)") << '\n';
    }
    if (!cf.modulus) {
        if (torsion.empty()) {
            out << "torsion over Z: none\n";
        } else {
            for (const auto &t : torsion) {
                out << "torsion over Z at weight " << t["weight"].get<unsigned>() << ": " << t["divisors"].dump()
                    << '\n';
            }
        }
    }
    return exit_ok;
}

int cmd_suspend(long k, std::optional<unsigned> n, std::optional<unsigned> generator, const std::string &poly,
                const CommonFlags &cf, std::ostream &out)
{
    if (!generator && poly.empty()) {
        throw UsageError("suspend needs a polynomial or --generator");
    }
    if (generator && !poly.empty()) {
        throw UsageError("give either a polynomial or --generator, not both");
    }
    const SuspensionOperator op(k, SuspensionOperator::default_max_index, n);
    GradedPoly image(op.context());
    std::string input;
    if (generator) {
        image = op.generator_image(*generator);
        input = "c" + std::to_string(*generator);
    } else {
        image = op.apply(parse_poly(poly, op.context()));
        input = poly;
    }
    image = op.truncate(image);
    const auto text = render_poly(image);
    if (cf.json) {
        json j = {{"k", k}, {"input", input}, {"image", text}};
        j["n"] = n ? json(*n) : json(nullptr);
        j["weight"] = image.weight() ? json(*image.weight()) : json(nullptr);
        out << j.dump(2) << '\n';
    } else {
        out << text << '\n';
    }
    return exit_ok;
}

template <typename T> std::vector<T> parse_range(const std::string &text, const char *flag)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw UsageError(std::string(flag) + " expects a..b, got '" + text + "'");
    }
    long lo = 0;
    long hi = 0;
    try {
        std::size_t used = 0;
        lo = std::stol(text.substr(0, dots), &used);
        if (used != dots) {
            throw std::invalid_argument("trailing");
        }
        const auto rest = text.substr(dots + 2);
        hi = std::stol(rest, &used);
        if (used != rest.size()) {
            throw std::invalid_argument("trailing");
        }
    } catch (const std::logic_error &) {
        throw UsageError(std::string(flag) + " expects integers a..b, got '" + text + "'");
    }
    std::vector<T> out;
    for (long v = lo; v <= hi; ++v) {
        out.push_back(static_cast<T>(v));
    }
    return out;
}

struct VerifyFlags {
    std::vector<unsigned> n;
    std::vector<long> k;
    std::string n_range;
    std::string k_range;
    std::vector<std::uint64_t> moduli{0, 2, 3};
    unsigned max_weight = default_weight_cap;
    std::uint64_t seed = default_seed;
    unsigned trials = 100;
    bool timing = false;
};

int cmd_verify(const VerifyFlags &vf, CLI::App *sub, const CommonFlags &cf, std::ostream &out)
{
    VerifyOptions opt;
    if (sub->count("--n-range") > 0u) {
        opt.n_values = parse_range<unsigned>(vf.n_range, "--n-range");
    } else if (sub->count("--n") > 0u) {
        opt.n_values = vf.n;
    }
    if (sub->count("--k-range") > 0u) {
        opt.k_values = parse_range<long>(vf.k_range, "--k-range");
    } else if (sub->count("--k") > 0u) {
        opt.k_values = vf.k;
    }
    if (opt.n_values.empty()) {
        throw UsageError("the n range is empty");
    }
    if (opt.k_values.empty()) {
        throw UsageError("the k range is empty");
    }
    if (std::any_of(opt.n_values.begin(), opt.n_values.end(), [](unsigned n) { return n < 1u; })) {
        throw UsageError("n values must be >= 1");
    }
    if (vf.max_weight < 2u) {
        throw UsageError("verify needs --max-weight >= 2");
    }
    for (const auto p : vf.moduli) {
        checked_ring(p);
    }
    opt.moduli = vf.moduli;
    opt.max_weight = vf.max_weight;
    opt.seed = vf.seed;
    opt.trials = vf.trials;

    const auto start = std::chrono::steady_clock::now();
    auto report = verify_suite(opt);
    if (vf.timing) {
        report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    if (cf.json) {
        out << report.to_json().dump(2) << '\n';
    } else {
        out << report.to_text();
    }
    return report.passed() ? exit_ok : exit_domain_error;
}

int cmd_cache(const std::string &action, const CommonFlags &cf, std::ostream &out)
{
    const auto dir = cache_directory(cf);
    if (!dir) {
        throw UsageError("no cache directory: pass --cache-dir or set GAUGE_COHO_CACHE");
    }
    ComponentCache cache(*dir);
    if (action == "path") {
        out << (cf.json ? json{{"directory", dir->string()}}.dump(2) : dir->string()) << '\n';
        return exit_ok;
    }
    if (action == "clear") {
        const auto removed = cache.clear_files();
        if (cf.json) {
            out << json{{"directory", dir->string()}, {"removed", removed}}.dump(2) << '\n';
        } else {
            out << "removed " << removed << " record(s) from " << dir->string() << '\n';
        }
        return exit_ok;
    }
    std::vector<std::string> names;
    for (const auto &f : cache.files()) {
        names.push_back(f.filename().string());
    }
    if (cf.json) {
        out << json{{"directory", dir->string()}, {"format_version", ComponentCache::format_version}, {"files", names}}
                   .dump(2)
            << '\n';
    } else {
        out << dir->string() << ": " << names.size() << " record(s)\n";
        for (const auto &n : names) {
            out << "  " << n << '\n';
        }
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Cohomology rings of gauge groups of U(n)-bundles over S^2", "gauge-coho"};
    app.require_subcommand(1);

    SpecFlags sf;
    CommonFlags cf;
    bool integral = false;
    std::string poly_a;
    std::string poly_b;

    auto *present = app.add_subcommand("present", "Print the relations h_n..h_D (or s_n..s_D)");
    add_spec_flags(present, sf);
    add_json_flag(present, cf);

    auto *basis = app.add_subcommand("basis", "Per-weight basis monomials, dims and torsion");
    add_spec_flags(basis, sf);
    add_ring_flags(basis, cf);
    add_json_flag(basis, cf);
    add_cache_flag(basis, cf);

    auto *reduce = app.add_subcommand("reduce", "Normal form of a polynomial (default over Q)");
    add_spec_flags(reduce, sf);
    add_ring_flags(reduce, cf);
    add_json_flag(reduce, cf);
    reduce->add_flag("--integral", integral, "Reduce over Z (Smith coordinates where needed)");
    reduce->add_option("poly", poly_a, "Polynomial, e.g. \"x2 - c1^2\"")->required();

    auto *multiply = app.add_subcommand("multiply", "Normal form of a product (default over Q)");
    add_spec_flags(multiply, sf);
    add_ring_flags(multiply, cf);
    add_json_flag(multiply, cf);
    multiply->add_flag("--integral", integral, "Reduce over Z (Smith coordinates where needed)");
    multiply->add_option("left", poly_a, "First factor")->required();
    multiply->add_option("right", poly_b, "Second factor")->required();

    auto *poincare = app.add_subcommand("poincare", "Poincare series up to the weight cap");
    add_spec_flags(poincare, sf);
    add_ring_flags(poincare, cf);
    add_json_flag(poincare, cf);
    add_cache_flag(poincare, cf);

    long sus_k = 0;
    std::optional<unsigned> sus_n;
    std::optional<unsigned> sus_generator;
    std::string sus_poly;
    auto *suspend = app.add_subcommand("suspend", "Free double suspension of a polynomial in the c_i");
    suspend->add_option("--k", sus_k, "Component (bundle degree) k");
    suspend->add_option("--n", sus_n, "Set c_m to 0 for m > n in the result")->check(CLI::PositiveNumber);
    suspend->add_option("--generator", sus_generator, "Print the image of c_i instead")->check(CLI::PositiveNumber);
    suspend->add_option("poly", sus_poly, "Polynomial in c1, c2, ...");
    add_json_flag(suspend, cf);

    VerifyFlags vf;
    auto *verify = app.add_subcommand("verify", "Run every invariant check and report");
    verify->add_option("--n", vf.n, "Values of n, comma separated (default 2,3)")->delimiter(',');
    verify->add_option("--k", vf.k, "Values of k, comma separated (default 0,1)")->delimiter(',');
    verify->add_option("--n-range", vf.n_range, "Inclusive range a..b of n")->excludes("--n");
    verify->add_option("--k-range", vf.k_range, "Inclusive range a..b of k")->excludes("--k");
    verify->add_option("--max-weight", vf.max_weight, "Weight cap D")->capture_default_str();
    verify->add_option("--moduli,--modulus", vf.moduli, "0 and/or primes, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    verify->add_option("--seed", vf.seed, "Seed of the randomized checks")->capture_default_str();
    verify->add_option("--trials", vf.trials, "Samples per randomized check")->capture_default_str();
    verify->add_flag("--timing", vf.timing, "Include elapsed time (output is then not reproducible)");
    add_json_flag(verify, cf);

    std::string cache_action = "list";
    auto *cache = app.add_subcommand("cache", "Inspect or clear the component cache");
    cache->add_option("action", cache_action, "list, clear or path")
        ->check(CLI::IsMember({"list", "clear", "path"}))
        ->capture_default_str();
    add_cache_flag(cache, cf);
    add_json_flag(cache, cf);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return exit_usage;
    }

    try {
        if (present->parsed()) {
            return cmd_present(sf, cf, out);
        }
        if (basis->parsed()) {
            return cmd_basis(sf, cf, out);
        }
        if (reduce->parsed()) {
            return cmd_reduce(sf, cf, integral, poly_a, out);
        }
        if (multiply->parsed()) {
            return cmd_multiply(sf, cf, integral, poly_a, poly_b, out);
        }
        if (poincare->parsed()) {
            return cmd_poincare(sf, cf, out);
        }
        if (suspend->parsed()) {
            return cmd_suspend(sus_k, sus_n, sus_generator, sus_poly, cf, out);
        }
        if (verify->parsed()) {
            return cmd_verify(vf, verify, cf, out);
        }
        if (cache->parsed()) {
            return cmd_cache(cache_action, cf, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return exit_usage;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_domain_error;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_domain_error;
    }
    err << "error: no subcommand\n";
    return exit_usage;
}

} // namespace gaugecoho::cli
