#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "bibnet/incidence.hpp"
#include "bibnet/model.hpp"

namespace bibnet {

using Rational = boost::multiprecision::cpp_rational;

/// Dense exact-rational matrix backing the brute-force projection oracle.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), values_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> values_;
};

/// Brute-force dense A·Aᵀ in exact rational arithmetic. Independent of the
/// sparse floating-point projection path; when every column of `a` sums to
/// exactly 1, the grand total of the result is exactly the integer J.
RationalMatrix oracle_project(const RationalMatrix& a);

/// Sum of all entries.
Rational rational_mass(const RationalMatrix& m);

/// True iff every column sums to exactly 1.
bool is_column_stochastic(const RationalMatrix& m);

/// Exact-rational incidence matrix for a corpus, with the same row and
/// column ordering as build_incidence. Equal-split credit is the exact 1/k;
/// custom weights convert from their double representation exactly (every
/// finite double is a dyadic rational).
RationalMatrix rational_incidence(const std::vector<PaperRecord>& records, CountingScheme scheme);

/// Entry-exact rational image of a floating-point incidence matrix.
RationalMatrix to_rational(const IncidenceMatrix& a);

}  // namespace bibnet
