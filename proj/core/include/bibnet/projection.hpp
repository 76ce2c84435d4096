#pragma once

#include "bibnet/incidence.hpp"
#include "bibnet/model.hpp"
#include "bibnet/network.hpp"

namespace bibnet {

/// Projects the entity-by-paper matrix to the network level: B = A·Aᵀ, so
/// b(i, j) = sum over papers k of a(i, k) * a(j, k). Cost scales with the
/// squared nonzeros per column, not with I²·J: each paper contributes one
/// outer product over its own contributors.
///
/// The floating accumulation order is fixed (columns in order, then row
/// pairs in order), so identical inputs produce bit-identical matrices on
/// either storage layout.
NetworkMatrix project(const IncidenceMatrix& a,
                      NetworkStorage storage = NetworkStorage::automatic);

/// Grand total of B over all I² positions. When every column of A sums to
/// 1 this equals the paper count J; full counting inflates it.
double network_mass(const NetworkMatrix& b);

/// Split of the grand total into diagonal and off-diagonal parts:
/// self_mass + 2 * collaboration_mass == network_mass.
struct MassDecomposition {
    double self_mass = 0.0;           // sum of b(i, i)
    double collaboration_mass = 0.0;  // sum of b(i, j) over i < j
};

MassDecomposition mass_decomposition(const NetworkMatrix& b);

/// Projects A and checks the conservation rule: every column of A must sum
/// to 1, and then the grand total of B equals the paper count J. Violations
/// are reported as data, never thrown.
ConservationReport audit_conservation(const IncidenceMatrix& a,
                                      double tolerance = kUnitSumTolerance);

/// Same audit against an externally supplied B (e.g. a re-imported export,
/// or a network with its diagonal dropped — which breaks conservation).
ConservationReport audit_network(const IncidenceMatrix& a, const NetworkMatrix& b,
                                 double tolerance = kUnitSumTolerance);

}  // namespace bibnet
