#ifndef GAUGECOHO_COMPONENT_CACHE_HPP
#define GAUGECOHO_COMPONENT_CACHE_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include <gaugecoho/presentations.hpp>

namespace gaugecoho
{

struct ComponentKey {
    PresentationKind kind = PresentationKind::gauge;
    unsigned n = 1;
    long k = 0;
    unsigned weight = 0;
    Ring ring = Ring::integers();

    static ComponentKey of(const PresentationSpec &spec, unsigned weight, Ring ring);
    std::string file_stem() const;

    friend auto operator<=>(const ComponentKey &, const ComponentKey &) = default;
};

// What the disk cache keeps for one component.
struct ComponentSummary {
    ComponentKey key;
    std::uint64_t monomial_hash = 0;
    std::vector<Integer> divisors;
    std::vector<std::size_t> basis;
    std::size_t dim = 0;

    static ComponentSummary of(const ComponentKey &key, const DegreeComponent &c);
    nlohmann::json to_json() const;
    static ComponentSummary from_json(const nlohmann::json &j);

    friend bool operator==(const ComponentSummary &, const ComponentSummary &) = default;
};

// FNV-1a over the rendered monomial list; detects a changed enumeration order.
std::uint64_t monomial_list_hash(const std::vector<Monomial> &monomials, const GeneratorContext &ctx);

// In-memory component store with optional on-disk summaries. Concurrent readers,
// exclusive writers. Each on-disk record is a JSON envelope
//   {"format": "gauge-coho-component", "version": N, "record": {...}}
// and records with another version are ignored.
class ComponentCache
{
public:
    static constexpr int format_version = 1;

    ComponentCache() = default;
    explicit ComponentCache(std::filesystem::path directory);

    const std::optional<std::filesystem::path> &directory() const noexcept { return m_dir; }

    std::shared_ptr<const DegreeComponent> find(const ComponentKey &key) const;
    // Returns the stored value, which is the existing one if another thread won.
    std::shared_ptr<const DegreeComponent> insert(const ComponentKey &key,
                                                  std::shared_ptr<const DegreeComponent> component);
    std::size_t memory_size() const;

    std::optional<ComponentSummary> load_summary(const ComponentKey &key, std::uint64_t expected_hash) const;
    void store_summary(const ComponentSummary &summary);

    std::vector<std::filesystem::path> files() const;
    // Removes every record file; returns how many were deleted.
    std::size_t clear_files();

private:
    std::filesystem::path path_for(const ComponentKey &key) const;

    std::optional<std::filesystem::path> m_dir;
    mutable std::shared_mutex m_mutex;
    std::map<ComponentKey, std::shared_ptr<const DegreeComponent>> m_components;
};

// Disk summary when the cache directory holds a valid one, otherwise computed
// through the presentation and written back.
ComponentSummary cached_summary(const Presentation &pres, unsigned w, Ring ring);

} // namespace gaugecoho

#endif
