#include "bibnet/projection.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "bibnet/counting.hpp"

namespace bibnet {

namespace {

// Dense path: accumulate outer products straight into the packed triangle.
void project_dense(const IncidenceMatrix& a, std::vector<double>& packed) {
    const std::size_t n = a.entity_count();
    packed.assign(n * (n + 1) / 2, 0.0);
    for (std::size_t k = 0; k < a.paper_count(); ++k) {
        const auto col = a.column(k);
        for (std::size_t p = 0; p < col.rows.size(); ++p) {
            const std::size_t i = col.rows[p];
            const double vi = col.values[p];
            const std::size_t base = i * n - i * (i - 1) / 2 - i;
            for (std::size_t q = p; q < col.rows.size(); ++q)
                packed[base + col.rows[q]] += vi * col.values[q];
        }
    }
}

// Sparse path: running sums keyed by (i, j). Keys accumulate in the same
// column-then-row-pair order as the dense path, so the low-order bits match
// it exactly; only the final layout differs.
void project_sparse(const IncidenceMatrix& a, std::vector<std::size_t>& row_ptr,
                    std::vector<std::size_t>& col_idx, std::vector<double>& nz) {
    const std::size_t n = a.entity_count();
    std::unordered_map<std::uint64_t, double> acc;
    for (std::size_t k = 0; k < a.paper_count(); ++k) {
        const auto col = a.column(k);
        for (std::size_t p = 0; p < col.rows.size(); ++p) {
            const double vi = col.values[p];
            const std::uint64_t hi = static_cast<std::uint64_t>(col.rows[p]) << 32;
            for (std::size_t q = p; q < col.rows.size(); ++q)
                acc[hi | static_cast<std::uint64_t>(col.rows[q])] += vi * col.values[q];
        }
    }

    std::vector<std::uint64_t> keys;
    keys.reserve(acc.size());
    for (const auto& [key, value] : acc) keys.push_back(key);
    std::sort(keys.begin(), keys.end());

    row_ptr.assign(n + 1, 0);
    col_idx.clear();
    nz.clear();
    col_idx.reserve(keys.size());
    nz.reserve(keys.size());
    std::size_t row = 0;
    for (const std::uint64_t key : keys) {
        const std::size_t i = static_cast<std::size_t>(key >> 32);
        const std::size_t j = static_cast<std::size_t>(key & 0xffffffffu);
        while (row < i) row_ptr[++row] = col_idx.size();
        col_idx.push_back(j);
        nz.push_back(acc.at(key));
    }
    while (row < n) row_ptr[++row] = col_idx.size();
}

}  // namespace

NetworkMatrix project(const IncidenceMatrix& a, NetworkStorage storage) {
    const std::size_t n = a.entity_count();
    if (n > (std::size_t{1} << 32))
        throw InvalidMatrix("projection supports at most 2^32 entities");

    NetworkMatrix b(a.entities(), a.paper_count());
    b.dense_ = storage == NetworkStorage::dense ||
               (storage == NetworkStorage::automatic && n <= NetworkMatrix::kDenseLimit);
    if (b.dense_)
        project_dense(a, b.packed_);
    else
        project_sparse(a, b.row_ptr_, b.col_idx_, b.nz_);
    return b;
}

double network_mass(const NetworkMatrix& b) {
    const MassDecomposition parts = mass_decomposition(b);
    return parts.self_mass + 2.0 * parts.collaboration_mass;
}

MassDecomposition mass_decomposition(const NetworkMatrix& b) {
    MassDecomposition parts;
    b.for_each_upper([&](std::size_t i, std::size_t j, double v) {
        if (i == j)
            parts.self_mass += v;
        else
            parts.collaboration_mass += v;
    });
    return parts;
}

ConservationReport audit_conservation(const IncidenceMatrix& a, double tolerance) {
    return audit_network(a, project(a), tolerance);
}

ConservationReport audit_network(const IncidenceMatrix& a, const NetworkMatrix& b,
                                 double tolerance) {
    ConservationReport report;
    report.tolerance = tolerance;
    report.expected = a.paper_count();
    report.incidence_mass = incidence_mass(a);
    report.network_mass = network_mass(b);
    for (std::size_t j = 0; j < a.paper_count(); ++j) {
        const double sum = a.column_sum(j);
        if (std::abs(sum - 1.0) > tolerance)
            report.column_violations.push_back({a.papers()[j], sum});
    }
    const double expected = static_cast<double>(report.expected);
    report.conserved = report.column_violations.empty() &&
                       std::abs(report.network_mass - expected) <=
                           tolerance * std::max(1.0, expected);
    return report;
}

}  // namespace bibnet
