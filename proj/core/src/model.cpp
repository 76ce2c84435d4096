#include "bibnet/model.hpp"

#include <cmath>
#include <unordered_set>

namespace bibnet {

namespace {

bool has_control_char(std::string_view s) {
    for (unsigned char c : s) {
        if (c < 0x20 || c == 0x7f) return true;
    }
    return false;
}

}  // namespace

std::string_view level_name(Level level) noexcept {
    switch (level) {
        case Level::author: return "author";
        case Level::institute: return "institute";
        case Level::country: return "country";
        case Level::journal: return "journal";
        case Level::custom: return "custom";
    }
    return "custom";
}

Level parse_level(std::string_view name) {
    if (name == "author") return Level::author;
    if (name == "institute") return Level::institute;
    if (name == "country") return Level::country;
    if (name == "journal") return Level::journal;
    if (name == "custom") return Level::custom;
    throw Error("unknown level '" + std::string(name) +
                "' (expected author|institute|country|journal|custom)");
}

std::string_view scheme_name(CountingScheme scheme) noexcept {
    switch (scheme) {
        case CountingScheme::full: return "full";
        case CountingScheme::fractional_equal: return "fractional";
        case CountingScheme::fractional_custom: return "fractional-custom";
    }
    return "full";
}

CountingScheme parse_scheme(std::string_view name) {
    if (name == "full") return CountingScheme::full;
    if (name == "fractional" || name == "fractional-equal") return CountingScheme::fractional_equal;
    if (name == "fractional-custom") return CountingScheme::fractional_custom;
    throw Error("unknown counting scheme '" + std::string(name) +
                "' (expected full|fractional|fractional-custom)");
}

EntityId::EntityId(std::string id, Level level) : id_(std::move(id)), level_(level) {
    if (id_.empty()) throw InvalidEntity("entity id is empty");
    if (has_control_char(id_))
        throw InvalidEntity("entity id '" + id_ + "' contains control characters");
}

PaperRecord::PaperRecord(std::string paper_id, std::vector<EntityId> contributors,
                         std::optional<std::vector<double>> credit_override)
    : paper_id_(std::move(paper_id)),
      contributors_(std::move(contributors)),
      credit_override_(std::move(credit_override)) {
    if (paper_id_.empty()) throw InvalidRecord("paper id is empty");
    if (has_control_char(paper_id_))
        throw InvalidRecord("paper id '" + paper_id_ + "' contains control characters");
    if (contributors_.empty())
        throw InvalidRecord("paper '" + paper_id_ + "' has no contributors");

    std::unordered_set<EntityId, EntityIdHash> seen;
    seen.reserve(contributors_.size());
    for (const EntityId& e : contributors_) {
        if (!seen.insert(e).second) throw DuplicateContributor(paper_id_, e.id());
    }

    if (credit_override_) {
        const auto& w = *credit_override_;
        if (w.size() != contributors_.size())
            throw InvalidOverride("paper '" + paper_id_ + "' has " + std::to_string(w.size()) +
                                  " weights for " + std::to_string(contributors_.size()) +
                                  " contributors");
        double sum = 0.0;
        for (double x : w) {
            if (!(x >= 0.0) || !std::isfinite(x))
                throw InvalidOverride("paper '" + paper_id_ + "' has a negative or non-finite weight");
            sum += x;
        }
        if (std::abs(sum - 1.0) > kUnitSumTolerance)
            throw InvalidOverride("weights of paper '" + paper_id_ + "' sum to " +
                                  std::to_string(sum) + ", expected 1");
    }
}

AggregationMap::AggregationMap(Level from_level, Level to_level,
                               const std::vector<std::pair<EntityId, EntityId>>& pairs)
    : from_(from_level), to_(to_level) {
    mapping_.reserve(pairs.size());
    for (const auto& [from, to] : pairs) {
        if (from.level() != from_)
            throw LevelMismatch("entity '" + from.id() + "' is not at level " +
                                std::string(level_name(from_)));
        if (to.level() != to_)
            throw LevelMismatch("group '" + to.id() + "' is not at level " +
                                std::string(level_name(to_)));
        auto [it, inserted] = mapping_.emplace(from, to);
        if (!inserted && !(it->second == to)) throw ConflictingMapping(from.id());
    }
}

const EntityId* AggregationMap::find(const EntityId& entity) const {
    auto it = mapping_.find(entity);
    return it == mapping_.end() ? nullptr : &it->second;
}

}  // namespace bibnet
