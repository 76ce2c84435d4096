#pragma once

#include <istream>
#include <string>
#include <vector>

#include "bibnet/model.hpp"

namespace bibnet {

/// Reads paper records from CSV. Format: a `paper_id,entity_id[,weight]`
/// header, one row per (paper, contributor) pair, rows of one paper
/// contiguous. The optional weight column fills credit_override and is
/// all-or-nothing per paper. Fields are trimmed; standard CSV quoting
/// applies. Records come back in first-appearance order; contributors get
/// `contributor_level` (the file carries no level column).
std::vector<PaperRecord> parse_records_csv(std::istream& in,
                                           Level contributor_level = Level::author);

/// Reads paper records from JSON lines: one object per line with
/// `paper_id` (string), `contributors` (array of strings) and optional
/// `weights` (array of numbers). Produces the same records as the CSV
/// parser for equivalent content.
std::vector<PaperRecord> parse_records_jsonl(std::istream& in,
                                             Level contributor_level = Level::author);

/// Reads an aggregation map from CSV with header `entity_id,group_id`.
/// Duplicate rows with conflicting groups are an error; an empty body is a
/// valid empty map.
AggregationMap parse_aggregation_map(std::istream& in, Level from_level, Level to_level);

/// Inverse of parse_records_csv: weights round-trip exactly.
std::string serialize_records_csv(const std::vector<PaperRecord>& records);

}  // namespace bibnet
