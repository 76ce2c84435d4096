#pragma once

#include <vector>

#include "bibnet/incidence.hpp"
#include "bibnet/model.hpp"

namespace bibnet {

/// Credit of each contributor of one record, in contributor order.
/// full -> all 1; fractional_equal -> all 1/k; fractional_custom -> the
/// record's override. Fractional results sum to 1 within 1e-9.
std::vector<double> credit_vector(const PaperRecord& record, CountingScheme scheme);

/// Builds the incidence matrix A for a corpus. Rows are the distinct
/// contributors of all records sorted by (level, id); columns keep record
/// order. Deterministic: identical inputs yield bit-identical matrices.
IncidenceMatrix build_incidence(const std::vector<PaperRecord>& records, CountingScheme scheme);

/// Grand total of A. Equals J (within J * 1e-9) for fractional schemes and
/// the total number of contributor slots for full counting.
double incidence_mass(const IncidenceMatrix& a);

}  // namespace bibnet
