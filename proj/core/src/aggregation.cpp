#include "bibnet/aggregation.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace bibnet {

IncidenceMatrix aggregate_incidence(const IncidenceMatrix& a, const AggregationMap& map) {
    // Resolve every row up front; totality failures name the entity.
    std::vector<const EntityId*> image_of(a.entity_count());
    std::map<EntityId, std::size_t> group_row;
    for (std::size_t i = 0; i < a.entity_count(); ++i) {
        const EntityId& entity = a.entities()[i];
        if (entity.level() != map.from_level())
            throw LevelMismatch("matrix rows are at level '" +
                                std::string(level_name(entity.level())) +
                                "' but the map aggregates from '" +
                                std::string(level_name(map.from_level())) + "'");
        const EntityId* target = map.find(entity);
        if (target == nullptr) throw UnmappedEntity(entity.id());
        image_of[i] = target;
        group_row.emplace(*target, 0);
    }

    std::vector<EntityId> groups;
    groups.reserve(group_row.size());
    for (auto& [group, index] : group_row) {
        index = groups.size();
        groups.push_back(group);
    }

    std::vector<std::size_t> col_ptr{0};
    std::vector<std::size_t> row_idx;
    std::vector<double> values;

    // Per column: add member credits into their group, in ascending source
    // row order, then emit groups in ascending row order.
    std::map<std::size_t, double> grouped;
    for (std::size_t j = 0; j < a.paper_count(); ++j) {
        grouped.clear();
        const auto col = a.column(j);
        for (std::size_t k = 0; k < col.rows.size(); ++k)
            grouped[group_row.at(*image_of[col.rows[k]])] += col.values[k];
        for (const auto& [row, value] : grouped) {
            row_idx.push_back(row);
            values.push_back(value);
        }
        col_ptr.push_back(row_idx.size());
    }

    return IncidenceMatrix(std::move(groups), a.papers(), std::move(col_ptr), std::move(row_idx),
                           std::move(values), a.scheme());
}

NetworkMatrix aggregate_then_project(const IncidenceMatrix& a, const AggregationMap& map,
                                     NetworkStorage storage) {
    return project(aggregate_incidence(a, map), storage);
}

}  // namespace bibnet
