#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bibnet {

/// Base class for every error this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
inline std::string with_line(std::string msg, std::size_t line) {
    if (line > 0) {
        msg += " (line ";
        msg += std::to_string(line);
        msg += ")";
    }
    return msg;
}
}  // namespace detail

/// Input could not be parsed; line() is the 1-based line the problem was
/// detected on (0 when no line applies).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : Error(detail::with_line(msg, line)), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A CSV row with the wrong shape or an unparseable field.
class MalformedRow : public ParseError {
public:
    using ParseError::ParseError;
};

/// A JSONL line that is not a valid record object.
class MalformedLine : public ParseError {
public:
    using ParseError::ParseError;
};

/// Rows of one paper were interrupted by rows of another.
class NonContiguousPaper : public ParseError {
public:
    NonContiguousPaper(std::string paper_id, std::size_t line)
        : ParseError("rows for paper '" + paper_id + "' are not contiguous", line),
          paper_id_(std::move(paper_id)) {}

    const std::string& paper_id() const noexcept { return paper_id_; }

private:
    std::string paper_id_;
};

/// Some rows of a paper carry a weight column and some do not.
class PartialWeights : public ParseError {
public:
    PartialWeights(std::string paper_id, std::size_t line)
        : ParseError("paper '" + paper_id + "' mixes weighted and unweighted rows", line),
          paper_id_(std::move(paper_id)) {}

    const std::string& paper_id() const noexcept { return paper_id_; }

private:
    std::string paper_id_;
};

/// The same contributor appears twice on one paper. Duplicates are a hard
/// error: merging them silently would corrupt the column sum.
class DuplicateContributor : public ParseError {
public:
    DuplicateContributor(std::string paper_id, std::string entity_id, std::size_t line = 0)
        : ParseError("duplicate contributor '" + entity_id + "' on paper '" + paper_id + "'",
                     line),
          paper_id_(std::move(paper_id)),
          entity_id_(std::move(entity_id)) {}

    const std::string& paper_id() const noexcept { return paper_id_; }
    const std::string& entity_id() const noexcept { return entity_id_; }

private:
    std::string paper_id_;
    std::string entity_id_;
};

/// Explicit weights of a paper do not add up to 1.
class WeightSumViolation : public ParseError {
public:
    WeightSumViolation(std::string paper_id, double sum, std::size_t line = 0)
        : ParseError("weights of paper '" + paper_id + "' sum to " + std::to_string(sum) +
                         ", expected 1",
                     line),
          paper_id_(std::move(paper_id)),
          sum_(sum) {}

    const std::string& paper_id() const noexcept { return paper_id_; }
    double sum() const noexcept { return sum_; }

private:
    std::string paper_id_;
    double sum_;
};

/// An entity is mapped to two different groups.
class ConflictingMapping : public ParseError {
public:
    ConflictingMapping(std::string entity_id, std::size_t line = 0)
        : ParseError("entity '" + entity_id + "' is mapped to conflicting groups", line),
          entity_id_(std::move(entity_id)) {}

    const std::string& entity_id() const noexcept { return entity_id_; }

private:
    std::string entity_id_;
};

/// Two records share one paper id.
class DuplicatePaperId : public Error {
public:
    explicit DuplicatePaperId(std::string paper_id, std::size_t line = 0)
        : Error(detail::with_line("duplicate paper id '" + paper_id + "'", line)),
          paper_id_(std::move(paper_id)) {}

    const std::string& paper_id() const noexcept { return paper_id_; }

private:
    std::string paper_id_;
};

/// A corpus with no records cannot produce a matrix.
class EmptyRecordList : public Error {
public:
    EmptyRecordList() : Error("record list is empty") {}
};

/// Custom counting was requested but a record has no weights.
class MissingOverride : public Error {
public:
    explicit MissingOverride(const std::string& paper_id)
        : Error("paper '" + paper_id + "' has no credit override but the scheme requires one") {}
};

/// A credit override violates the unit-sum rule or does not match the
/// contributor list.
class InvalidOverride : public Error {
public:
    using Error::Error;
};

/// An entity identifier violates the model invariants.
class InvalidEntity : public Error {
public:
    using Error::Error;
};

/// A paper record violates the model invariants.
class InvalidRecord : public Error {
public:
    using Error::Error;
};

/// Matrix data violates a structural invariant.
class InvalidMatrix : public Error {
public:
    using Error::Error;
};

/// Dense input claimed to be symmetric differs from its transpose beyond
/// 1e-12.
class AsymmetricInput : public Error {
public:
    using Error::Error;
};

/// An aggregation map has no image for an entity of the source matrix.
class UnmappedEntity : public Error {
public:
    explicit UnmappedEntity(std::string entity_id)
        : Error("no aggregation target for entity '" + entity_id + "'"),
          entity_id_(std::move(entity_id)) {}

    const std::string& entity_id() const noexcept { return entity_id_; }

private:
    std::string entity_id_;
};

/// An aggregation map was applied to a matrix of a different level.
class LevelMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace bibnet
