#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bibnet/errors.hpp"

namespace bibnet {

/// Aggregation level of an entity identifier.
enum class Level { author, institute, country, journal, custom };

std::string_view level_name(Level level) noexcept;

/// Inverse of level_name; throws Error on an unknown name.
Level parse_level(std::string_view name);

/// Identifier of a network entity. Identity is the (level, id) pair: the
/// same string at different levels names two distinct entities.
class EntityId {
public:
    /// Throws InvalidEntity when id is empty or contains control characters.
    explicit EntityId(std::string id, Level level = Level::author);

    const std::string& id() const noexcept { return id_; }
    Level level() const noexcept { return level_; }

    // (level, id) is the canonical row order of every matrix built here.
    friend std::strong_ordering operator<=>(const EntityId& a, const EntityId& b) noexcept {
        if (auto c = a.level_ <=> b.level_; c != 0) return c;
        return a.id_ <=> b.id_;
    }
    friend bool operator==(const EntityId& a, const EntityId& b) noexcept {
        return a.level_ == b.level_ && a.id_ == b.id_;
    }

private:
    std::string id_;
    Level level_;
};

struct EntityIdHash {
    std::size_t operator()(const EntityId& e) const noexcept {
        std::size_t h = std::hash<std::string>{}(e.id());
        return h ^ (static_cast<std::size_t>(e.level()) + 0x9e3779b97f4a7c15ULL + (h << 6) +
                    (h >> 2));
    }
};

/// How one paper's unit of credit is assigned to its contributors.
///
/// full counts every contributor with weight 1, so a column of the
/// incidence matrix sums to the number of contributors. Both fractional
/// schemes keep every column sum at exactly 1 (equal split, or weights
/// supplied per record).
enum class CountingScheme { full, fractional_equal, fractional_custom };

inline bool is_fractional(CountingScheme scheme) noexcept {
    return scheme != CountingScheme::full;
}

std::string_view scheme_name(CountingScheme scheme) noexcept;

/// Accepts "full", "fractional" / "fractional-equal", "fractional-custom".
CountingScheme parse_scheme(std::string_view name);

/// Tolerance used everywhere a column or weight vector is compared to 1.
inline constexpr double kUnitSumTolerance = 1e-9;

/// One paper and its ordered contributor list, immutable once constructed.
///
/// credit_override, when present, fixes each contributor's fractional
/// credit; any split rule is acceptable as long as the weights are
/// non-negative and sum to 1.
class PaperRecord {
public:
    PaperRecord(std::string paper_id, std::vector<EntityId> contributors,
                std::optional<std::vector<double>> credit_override = std::nullopt);

    const std::string& paper_id() const noexcept { return paper_id_; }
    const std::vector<EntityId>& contributors() const noexcept { return contributors_; }
    const std::optional<std::vector<double>>& credit_override() const noexcept {
        return credit_override_;
    }

private:
    std::string paper_id_;
    std::vector<EntityId> contributors_;
    std::optional<std::vector<double>> credit_override_;
};

/// Total single-valued mapping from fine entities to coarse groups
/// (author -> institute, institute -> country, author -> journal, ...).
/// Multi-affiliation splitting is out of scope: every entity has exactly
/// one image.
class AggregationMap {
public:
    /// Throws ConflictingMapping when an entity appears with two different
    /// images, LevelMismatch when a pair does not match the declared levels.
    /// Identical duplicate pairs are tolerated.
    AggregationMap(Level from_level, Level to_level,
                   const std::vector<std::pair<EntityId, EntityId>>& pairs);

    Level from_level() const noexcept { return from_; }
    Level to_level() const noexcept { return to_; }
    std::size_t size() const noexcept { return mapping_.size(); }

    /// Image of entity, or nullptr when the map has none.
    const EntityId* find(const EntityId& entity) const;

private:
    Level from_;
    Level to_;
    std::unordered_map<EntityId, EntityId, EntityIdHash> mapping_;
};

/// One incidence-matrix column whose sum strays from 1 beyond the audit
/// tolerance.
struct ColumnViolation {
    std::string paper_id;
    double column_sum = 0.0;
};

/// Result of a conservation audit: the grand totals of A and B = A·Aᵀ, the
/// paper count they must equal, and every column that breaks the unit-sum
/// condition. conserved is true iff there are no violations and
/// |network_mass - expected| <= tolerance * max(1, expected).
struct ConservationReport {
    double incidence_mass = 0.0;
    double network_mass = 0.0;
    std::size_t expected = 0;
    std::vector<ColumnViolation> column_violations;
    bool conserved = false;
    double tolerance = kUnitSumTolerance;
};

}  // namespace bibnet
