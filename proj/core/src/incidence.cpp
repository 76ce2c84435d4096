#include "bibnet/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace bibnet {

IncidenceMatrix::IncidenceMatrix(std::vector<EntityId> entities, std::vector<std::string> papers,
                                 std::vector<std::size_t> col_ptr,
                                 std::vector<std::size_t> row_idx, std::vector<double> values,
                                 CountingScheme scheme)
    : entities_(std::move(entities)),
      papers_(std::move(papers)),
      col_ptr_(std::move(col_ptr)),
      row_idx_(std::move(row_idx)),
      values_(std::move(values)),
      scheme_(scheme) {
    const std::size_t rows = entities_.size();
    const std::size_t cols = papers_.size();

    if (col_ptr_.size() != cols + 1 || col_ptr_.front() != 0 ||
        col_ptr_.back() != row_idx_.size() || row_idx_.size() != values_.size())
        throw InvalidMatrix("inconsistent column-compressed layout");

    {
        std::unordered_set<EntityId, EntityIdHash> seen;
        seen.reserve(rows);
        for (const EntityId& e : entities_)
            if (!seen.insert(e).second)
                throw InvalidMatrix("duplicate row entity '" + e.id() + "'");
    }
    {
        std::unordered_set<std::string> seen;
        seen.reserve(cols);
        for (const std::string& p : papers_)
            if (!seen.insert(p).second) throw InvalidMatrix("duplicate paper id '" + p + "'");
    }

    for (std::size_t j = 0; j < cols; ++j) {
        if (col_ptr_[j] > col_ptr_[j + 1]) throw InvalidMatrix("column pointers not monotone");
        for (std::size_t k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) {
            if (row_idx_[k] >= rows) throw InvalidMatrix("row index out of range");
            if (k > col_ptr_[j] && row_idx_[k] <= row_idx_[k - 1])
                throw InvalidMatrix("row indices of a column must be strictly increasing");
            const double v = values_[k];
            if (!std::isfinite(v) || v < 0.0)
                throw InvalidMatrix("credit entries must be finite and non-negative");
            if (scheme_ == CountingScheme::full && (v < 1.0 || v != std::floor(v)))
                throw InvalidMatrix("full counting stores positive integer credits");
        }
        if (is_fractional(scheme_)) {
            const double sum = column_sum(j);
            if (std::abs(sum - 1.0) > kUnitSumTolerance)
                throw InvalidMatrix("column '" + papers_[j] + "' sums to " + std::to_string(sum) +
                                    ", expected 1");
        }
    }
}

IncidenceColumn IncidenceMatrix::column(std::size_t j) const {
    const std::size_t lo = col_ptr_[j], hi = col_ptr_[j + 1];
    return {std::span(row_idx_).subspan(lo, hi - lo), std::span(values_).subspan(lo, hi - lo)};
}

double IncidenceMatrix::at(std::size_t i, std::size_t j) const {
    const auto col = column(j);
    auto it = std::lower_bound(col.rows.begin(), col.rows.end(), i);
    if (it == col.rows.end() || *it != i) return 0.0;
    return col.values[static_cast<std::size_t>(it - col.rows.begin())];
}

double IncidenceMatrix::column_sum(std::size_t j) const {
    double sum = 0.0;
    for (double v : column(j).values) sum += v;
    return sum;
}

std::vector<double> IncidenceMatrix::row_sums() const {
    std::vector<double> sums(entities_.size(), 0.0);
    for (std::size_t j = 0; j < papers_.size(); ++j) {
        const auto col = column(j);
        for (std::size_t k = 0; k < col.rows.size(); ++k) sums[col.rows[k]] += col.values[k];
    }
    return sums;
}

}  // namespace bibnet
