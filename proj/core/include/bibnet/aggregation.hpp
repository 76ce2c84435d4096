#pragma once

#include "bibnet/incidence.hpp"
#include "bibnet/model.hpp"
#include "bibnet/network.hpp"
#include "bibnet/projection.hpp"

namespace bibnet {

/// Regroups the rows of A by the map (author -> institute, ...). The entry
/// of group g for paper j is the sum of a(i, j) over the members mapped to
/// g, so every column sum is preserved: a column-stochastic matrix stays
/// column-stochastic and conservation carries over to the coarse level.
///
/// Aggregation always happens on A, before projection; the scheme is
/// inherited. Throws UnmappedEntity when a row has no image, LevelMismatch
/// when the map's source level differs from the matrix rows.
IncidenceMatrix aggregate_incidence(const IncidenceMatrix& a, const AggregationMap& map);

/// project(aggregate_incidence(a, map)).
NetworkMatrix aggregate_then_project(const IncidenceMatrix& a, const AggregationMap& map,
                                     NetworkStorage storage = NetworkStorage::automatic);

}  // namespace bibnet
