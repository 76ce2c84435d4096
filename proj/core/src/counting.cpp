#include "bibnet/counting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>
#include <utility>

namespace bibnet {

std::vector<double> credit_vector(const PaperRecord& record, CountingScheme scheme) {
    const std::size_t k = record.contributors().size();
    switch (scheme) {
        case CountingScheme::full:
            return std::vector<double>(k, 1.0);
        case CountingScheme::fractional_equal:
            // 1/k per entry; the division is not post-adjusted to force an
            // exact unit sum, validation at tolerance catches real errors.
            return std::vector<double>(k, 1.0 / static_cast<double>(k));
        case CountingScheme::fractional_custom: {
            if (!record.credit_override()) throw MissingOverride(record.paper_id());
            const auto& w = *record.credit_override();
            if (w.size() != k)
                throw InvalidOverride("paper '" + record.paper_id() +
                                      "' has an override of the wrong length");
            double sum = 0.0;
            for (double x : w) {
                if (!(x >= 0.0) || !std::isfinite(x))
                    throw InvalidOverride("paper '" + record.paper_id() +
                                          "' has a negative or non-finite weight");
                sum += x;
            }
            if (std::abs(sum - 1.0) > kUnitSumTolerance)
                throw InvalidOverride("weights of paper '" + record.paper_id() + "' sum to " +
                                      std::to_string(sum) + ", expected 1");
            return w;
        }
    }
    throw Error("unreachable counting scheme");
}

IncidenceMatrix build_incidence(const std::vector<PaperRecord>& records, CountingScheme scheme) {
    if (records.empty()) throw EmptyRecordList();

    {
        std::unordered_set<std::string> seen;
        seen.reserve(records.size());
        for (const PaperRecord& r : records)
            if (!seen.insert(r.paper_id()).second) throw DuplicatePaperId(r.paper_id());
    }

    // Row order: sorted distinct contributors. std::map keys are already
    // sorted by (level, id).
    std::map<EntityId, std::size_t> row_of;
    for (const PaperRecord& r : records)
        for (const EntityId& e : r.contributors()) row_of.emplace(e, 0);
    std::vector<EntityId> entities;
    entities.reserve(row_of.size());
    for (auto& [entity, index] : row_of) {
        index = entities.size();
        entities.push_back(entity);
    }

    std::vector<std::string> papers;
    papers.reserve(records.size());
    std::vector<std::size_t> col_ptr{0};
    std::vector<std::size_t> row_idx;
    std::vector<double> values;

    std::vector<std::pair<std::size_t, double>> column;
    for (const PaperRecord& r : records) {
        papers.push_back(r.paper_id());
        const std::vector<double> credits = credit_vector(r, scheme);

        column.clear();
        for (std::size_t c = 0; c < r.contributors().size(); ++c)
            column.emplace_back(row_of.at(r.contributors()[c]), credits[c]);
        std::sort(column.begin(), column.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        for (const auto& [row, credit] : column) {
            row_idx.push_back(row);
            values.push_back(credit);
        }
        col_ptr.push_back(row_idx.size());
    }

    return IncidenceMatrix(std::move(entities), std::move(papers), std::move(col_ptr),
                           std::move(row_idx), std::move(values), scheme);
}

double incidence_mass(const IncidenceMatrix& a) {
    double mass = 0.0;
    for (std::size_t j = 0; j < a.paper_count(); ++j)
        for (double v : a.column(j).values) mass += v;
    return mass;
}

}  // namespace bibnet
