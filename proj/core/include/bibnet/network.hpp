#pragma once

#include <cstddef>
#include <vector>

#include "bibnet/incidence.hpp"
#include "bibnet/model.hpp"

namespace bibnet {

/// Storage layout for the network matrix.
enum class NetworkStorage { automatic, dense, sparse };

/// The I x I symmetric co-occurrence matrix B = A·Aᵀ. b(i, j) is the
/// credit-weighted co-participation of entities i and j; the diagonal keeps
/// each entity's self mass, which the conservation identity needs.
///
/// Only the upper triangle (diagonal included) is stored, so b(i, j) and
/// b(j, i) are the same number by construction. Storage is a packed dense
/// triangle up to kDenseLimit entities and row-compressed sparse above,
/// unless a layout is forced; every operation yields bit-identical results
/// on either layout.
class NetworkMatrix {
public:
    static constexpr std::size_t kDenseLimit = 10'000;

    /// Build from a full row-major I x I array, e.g. to re-import an
    /// exported network. Throws AsymmetricInput when the array differs from
    /// its transpose beyond 1e-12, InvalidMatrix on a negative diagonal or
    /// a Cauchy-Schwarz violation (b_ij^2 > b_ii*b_jj + 1e-9) — no valid
    /// projection output can contain either.
    static NetworkMatrix from_dense(std::vector<EntityId> entities,
                                    const std::vector<double>& row_major,
                                    std::size_t paper_count,
                                    NetworkStorage storage = NetworkStorage::automatic);

    std::size_t entity_count() const noexcept { return entities_.size(); }  // I
    std::size_t paper_count() const noexcept { return paper_count_; }       // J
    const std::vector<EntityId>& entities() const noexcept { return entities_; }
    bool is_dense() const noexcept { return dense_; }

    double at(std::size_t i, std::size_t j) const;
    std::vector<double> row_sums() const;

    /// Visit stored upper-triangle entries (i <= j) in row-major order.
    /// The dense layout also visits stored zeros; filter on the value when
    /// only structural nonzeros matter.
    template <typename Visitor>
    void for_each_upper(Visitor&& visit) const {
        const std::size_t n = entities_.size();
        if (dense_) {
            std::size_t k = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) visit(i, j, packed_[k++]);
        } else {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
                    visit(i, col_idx_[k], nz_[k]);
        }
    }

private:
    friend NetworkMatrix project(const IncidenceMatrix&, NetworkStorage);

    NetworkMatrix(std::vector<EntityId> entities, std::size_t paper_count)
        : entities_(std::move(entities)), paper_count_(paper_count) {}

    static std::size_t packed_index(std::size_t i, std::size_t j, std::size_t n) noexcept {
        // upper triangle, row-major: row i starts after i rows of n, n-1, ...
        return i * n - i * (i - 1) / 2 + (j - i);
    }

    std::vector<EntityId> entities_;
    std::size_t paper_count_ = 0;
    bool dense_ = true;
    std::vector<double> packed_;        // dense: n*(n+1)/2 entries
    std::vector<std::size_t> row_ptr_;  // sparse: CSR over the upper triangle
    std::vector<std::size_t> col_idx_;
    std::vector<double> nz_;
};

}  // namespace bibnet
