#include "bibnet/oracle.hpp"

#include <map>

#include "bibnet/counting.hpp"

namespace bibnet {

RationalMatrix oracle_project(const RationalMatrix& a) {
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    RationalMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k) b.at(i, j) += a.at(i, k) * a.at(j, k);
    return b;
}

Rational rational_mass(const RationalMatrix& m) {
    Rational total = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) total += m.at(i, j);
    return total;
}

bool is_column_stochastic(const RationalMatrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Rational sum = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) sum += m.at(i, j);
        if (sum != 1) return false;
    }
    return true;
}

RationalMatrix rational_incidence(const std::vector<PaperRecord>& records,
                                  CountingScheme scheme) {
    if (records.empty()) throw EmptyRecordList();

    std::map<EntityId, std::size_t> row_of;
    for (const PaperRecord& r : records)
        for (const EntityId& e : r.contributors()) row_of.emplace(e, 0);
    std::size_t next = 0;
    for (auto& [entity, index] : row_of) index = next++;

    RationalMatrix a(row_of.size(), records.size());
    for (std::size_t j = 0; j < records.size(); ++j) {
        const PaperRecord& r = records[j];
        const std::size_t k = r.contributors().size();
        for (std::size_t c = 0; c < k; ++c) {
            const std::size_t i = row_of.at(r.contributors()[c]);
            switch (scheme) {
                case CountingScheme::full: a.at(i, j) = 1; break;
                case CountingScheme::fractional_equal:
                    a.at(i, j) = Rational(1, static_cast<unsigned>(k));
                    break;
                case CountingScheme::fractional_custom: {
                    if (!r.credit_override()) throw MissingOverride(r.paper_id());
                    a.at(i, j) = Rational((*r.credit_override())[c]);
                    break;
                }
            }
        }
    }
    return a;
}

RationalMatrix to_rational(const IncidenceMatrix& a) {
    RationalMatrix out(a.entity_count(), a.paper_count());
    for (std::size_t j = 0; j < a.paper_count(); ++j) {
        const auto col = a.column(j);
        for (std::size_t k = 0; k < col.rows.size(); ++k)
            out.at(col.rows[k], j) = Rational(col.values[k]);
    }
    return out;
}

}  // namespace bibnet
