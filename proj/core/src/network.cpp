#include "bibnet/network.hpp"

#include <algorithm>
#include <cmath>

namespace bibnet {

NetworkMatrix NetworkMatrix::from_dense(std::vector<EntityId> entities,
                                        const std::vector<double>& row_major,
                                        std::size_t paper_count, NetworkStorage storage) {
    const std::size_t n = entities.size();
    if (row_major.size() != n * n)
        throw InvalidMatrix("dense network input must hold I*I entries");

    for (std::size_t i = 0; i < n; ++i) {
        if (row_major[i * n + i] < 0.0) throw InvalidMatrix("negative diagonal entry");
        for (std::size_t j = i + 1; j < n; ++j) {
            const double upper = row_major[i * n + j];
            const double lower = row_major[j * n + i];
            if (std::abs(upper - lower) > 1e-12)
                throw AsymmetricInput("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                      ") differs from its transpose beyond 1e-12");
            if (upper * upper > row_major[i * n + i] * row_major[j * n + j] + 1e-9)
                throw InvalidMatrix("Cauchy-Schwarz violated at (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
        }
    }

    NetworkMatrix b(std::move(entities), paper_count);
    const bool dense = storage == NetworkStorage::dense ||
                       (storage == NetworkStorage::automatic && n <= kDenseLimit);
    b.dense_ = dense;
    if (dense) {
        b.packed_.resize(n * (n + 1) / 2);
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) b.packed_[k++] = row_major[i * n + j];
    } else {
        b.row_ptr_.assign(n + 1, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                if (row_major[i * n + j] != 0.0) {
                    b.col_idx_.push_back(j);
                    b.nz_.push_back(row_major[i * n + j]);
                }
            }
            b.row_ptr_[i + 1] = b.col_idx_.size();
        }
    }
    return b;
}

double NetworkMatrix::at(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    if (dense_) return packed_[packed_index(i, j, entities_.size())];
    const auto begin = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i]);
    const auto end = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i + 1]);
    auto it = std::lower_bound(begin, end, j);
    if (it == end || *it != j) return 0.0;
    return nz_[static_cast<std::size_t>(it - col_idx_.begin())];
}

std::vector<double> NetworkMatrix::row_sums() const {
    std::vector<double> sums(entities_.size(), 0.0);
    for_each_upper([&](std::size_t i, std::size_t j, double v) {
        sums[i] += v;
        if (i != j) sums[j] += v;
    });
    return sums;
}

}  // namespace bibnet
