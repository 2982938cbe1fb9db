#include <gaugecoho/component_cache.hpp>

#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <gaugecoho/errors.hpp>

namespace gaugecoho
{

namespace
{

constexpr const char *format_tag = "gauge-coho-component";

nlohmann::json integer_to_json(const Integer &v)
{
    if (v.fits_slong_p()) {
        return v.get_si();
    }
    return v.get_str();
}

Integer integer_from_json(const nlohmann::json &j)
{
    if (j.is_string()) {
        return Integer(j.get<std::string>());
    }
    return Integer(j.get<long>());
}

std::string hex64(std::uint64_t v)
{
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

} // namespace

ComponentKey ComponentKey::of(const PresentationSpec &spec, unsigned weight, Ring ring)
{
    return {spec.kind(), spec.n(), spec.k(), weight, ring};
}

std::string ComponentKey::file_stem() const
{
    std::string s = kind == PresentationKind::gauge ? "gauge" : "bott";
    s += "-n" + std::to_string(n);
    if (kind == PresentationKind::gauge) {
        s += "-k" + std::to_string(k);
    }
    return s + "-w" + std::to_string(weight) + "-" + ring.name();
}

std::uint64_t monomial_list_hash(const std::vector<Monomial> &monomials, const GeneratorContext &ctx)
{
    std::uint64_t h = 14695981039346656037ull;
    auto feed = [&h](char ch) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    };
    for (const auto &m : monomials) {
        for (char ch : m.to_string(ctx)) {
            feed(ch);
        }
        feed(',');
    }
    return h;
}

ComponentSummary ComponentSummary::of(const ComponentKey &key, const DegreeComponent &c)
{
    // Monomials are position-encoded; positions of c_i, x_i and y_i do not depend on the cap.
    const auto spec = key.kind == PresentationKind::gauge ? PresentationSpec::gauge(key.n, key.k, std::max(1u, key.weight))
                                                          : PresentationSpec::bott(key.n, std::max(1u, key.weight));
    ComponentSummary s;
    s.key = key;
    s.monomial_hash = monomial_list_hash(c.monomials, *spec.context());
    s.divisors = c.divisors;
    s.basis = c.basis;
    s.dim = c.dim;
    return s;
}

nlohmann::json ComponentSummary::to_json() const
{
    nlohmann::json divs = nlohmann::json::array();
    for (const auto &d : divisors) {
        divs.push_back(integer_to_json(d));
    }
    return {
        {"kind", key.kind == PresentationKind::gauge ? "gauge" : "bott"},
        {"n", key.n},
        {"k", key.k},
        {"weight", key.weight},
        {"ring", key.ring.name()},
        {"modulus", key.ring.modulus()},
        {"monomial_hash", hex64(monomial_hash)},
        {"divisors", divs},
        {"basis", basis},
        {"dim", dim},
    };
}

ComponentSummary ComponentSummary::from_json(const nlohmann::json &j)
{
    ComponentSummary s;
    const auto kind = j.at("kind").get<std::string>();
    if (kind != "gauge" && kind != "bott") {
        throw ArgumentError("unknown presentation kind '" + kind + "'");
    }
    s.key.kind = kind == "gauge" ? PresentationKind::gauge : PresentationKind::bott;
    s.key.n = j.at("n").get<unsigned>();
    s.key.k = j.at("k").get<long>();
    s.key.weight = j.at("weight").get<unsigned>();
    const auto ring = j.at("ring").get<std::string>();
    if (ring == "Z") {
        s.key.ring = Ring::integers();
    } else if (ring == "Q") {
        s.key.ring = Ring::rationals();
    } else {
        s.key.ring = Ring::prime_field(j.at("modulus").get<std::uint64_t>());
    }
    s.monomial_hash = std::stoull(j.at("monomial_hash").get<std::string>(), nullptr, 16);
    for (const auto &d : j.at("divisors")) {
        s.divisors.push_back(integer_from_json(d));
    }
    s.basis = j.at("basis").get<std::vector<std::size_t>>();
    s.dim = j.at("dim").get<std::size_t>();
    return s;
}

ComponentCache::ComponentCache(std::filesystem::path directory) : m_dir(std::move(directory)) {}

std::shared_ptr<const DegreeComponent> ComponentCache::find(const ComponentKey &key) const
{
    std::shared_lock lock(m_mutex);
    const auto it = m_components.find(key);
    return it == m_components.end() ? nullptr : it->second;
}

std::shared_ptr<const DegreeComponent> ComponentCache::insert(const ComponentKey &key,
                                                              std::shared_ptr<const DegreeComponent> component)
{
    std::unique_lock lock(m_mutex);
    const auto [it, inserted] = m_components.try_emplace(key, std::move(component));
    return it->second;
}

std::size_t ComponentCache::memory_size() const
{
    std::shared_lock lock(m_mutex);
    return m_components.size();
}

std::filesystem::path ComponentCache::path_for(const ComponentKey &key) const
{
    return *m_dir / (key.file_stem() + ".json");
}

std::optional<ComponentSummary> ComponentCache::load_summary(const ComponentKey &key,
                                                             std::uint64_t expected_hash) const
{
    if (!m_dir) {
        return std::nullopt;
    }
    std::shared_lock lock(m_mutex);
    std::ifstream in(path_for(key));
    if (!in) {
        return std::nullopt;
    }
    try {
        const auto envelope = nlohmann::json::parse(in);
        if (envelope.at("format") != format_tag || envelope.at("version") != format_version) {
            return std::nullopt;
        }
        auto s = ComponentSummary::from_json(envelope.at("record"));
        if (!(s.key == key) || s.monomial_hash != expected_hash) {
            return std::nullopt;
        }
        return s;
    } catch (const std::exception &) {
        // Unreadable records are treated as misses and rewritten.
        return std::nullopt;
    }
}

void ComponentCache::store_summary(const ComponentSummary &summary)
{
    if (!m_dir) {
        return;
    }
    const nlohmann::json envelope
        = {{"format", format_tag}, {"version", format_version}, {"record", summary.to_json()}};
    std::unique_lock lock(m_mutex);
    std::filesystem::create_directories(*m_dir);
    const auto target = path_for(summary.key);
    auto tmp = target;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream out(tmp);
        if (!out) {
            throw Error("cannot write cache file " + tmp.string());
        }
        out << envelope.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, target);
}

std::vector<std::filesystem::path> ComponentCache::files() const
{
    std::vector<std::filesystem::path> out;
    if (!m_dir || !std::filesystem::is_directory(*m_dir)) {
        return out;
    }
    std::shared_lock lock(m_mutex);
    for (const auto &entry : std::filesystem::directory_iterator(*m_dir)) {
        const auto name = entry.path().filename().string();
        const bool ours = name.starts_with("gauge-") || name.starts_with("bott-");
        if (entry.is_regular_file() && ours && entry.path().extension() == ".json") {
            out.push_back(entry.path());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t ComponentCache::clear_files()
{
    const auto list = files();
    std::unique_lock lock(m_mutex);
    std::size_t removed = 0;
    for (const auto &p : list) {
        removed += std::filesystem::remove(p) ? 1u : 0u;
    }
    return removed;
}

ComponentSummary cached_summary(const Presentation &pres, unsigned w, Ring ring)
{
    if (w > pres.spec().weight_cap()) {
        throw CapError("weight " + std::to_string(w) + " exceeds the weight cap "
                       + std::to_string(pres.spec().weight_cap()));
    }
    const auto key = ComponentKey::of(pres.spec(), w, ring);
    const auto &ctx = *pres.spec().context();
    const auto hash = monomial_list_hash(monomials_of_weight(ctx, w), ctx);
    if (auto hit = pres.cache()->load_summary(key, hash)) {
        return *hit;
    }
    auto s = ComponentSummary::of(key, *pres.component(w, ring));
    pres.cache()->store_summary(s);
    return s;
}

} // namespace gaugecoho
