#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bibnet/model.hpp"

namespace bibnet {

/// One column of the incidence matrix: the entities credited for a paper.
struct IncidenceColumn {
    std::span<const std::size_t> rows;  // ascending row indices
    std::span<const double> values;     // matching credits
};

/// The I x J entity-by-paper credit matrix A, column-compressed. a(i, j) is
/// the credit of entity i for paper j; absent entries are zero. Rows are
/// ordered by (level, id), columns keep corpus order. Immutable after
/// construction.
///
/// Construction enforces the scheme invariants: fractional matrices are
/// column-stochastic (every column sums to 1 within 1e-9); full-counting
/// matrices hold positive integer credits (exactly 1 when built from
/// records, group counts after aggregation).
class IncidenceMatrix {
public:
    IncidenceMatrix(std::vector<EntityId> entities, std::vector<std::string> papers,
                    std::vector<std::size_t> col_ptr, std::vector<std::size_t> row_idx,
                    std::vector<double> values, CountingScheme scheme);

    std::size_t entity_count() const noexcept { return entities_.size(); }  // I
    std::size_t paper_count() const noexcept { return papers_.size(); }     // J
    const std::vector<EntityId>& entities() const noexcept { return entities_; }
    const std::vector<std::string>& papers() const noexcept { return papers_; }
    CountingScheme scheme() const noexcept { return scheme_; }
    std::size_t nonzero_count() const noexcept { return values_.size(); }

    IncidenceColumn column(std::size_t j) const;
    double at(std::size_t i, std::size_t j) const;
    double column_sum(std::size_t j) const;
    std::vector<double> row_sums() const;

private:
    std::vector<EntityId> entities_;
    std::vector<std::string> papers_;
    std::vector<std::size_t> col_ptr_;  // size J + 1
    std::vector<std::size_t> row_idx_;
    std::vector<double> values_;
    CountingScheme scheme_;
};

}  // namespace bibnet
