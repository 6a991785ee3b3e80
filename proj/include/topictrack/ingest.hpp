#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "topictrack/model.hpp"

namespace topictrack {

enum class IssueCode {
  // profile errors
  MissingHeader,
  EmptyProfile,
  DuplicateIndex,
  NonContiguousIndex,
  WeightOutOfRange,
  BadYear,
  EmptyWords,
  DuplicateId,
  EmptyId,
  MalformedWords,
  // matrix errors
  DimensionMismatch,
  ValueOutOfRange,
  ContemporaryNonzero,
  DiagonalNotOne,
  BlankAboveDiagonal,
  // shared
  MalformedCsv,
  MalformedNumber,
  // warnings
  Resorted,
  UnknownColumn,
  LowerTriangleIgnored,
};

std::string_view to_string(IssueCode code);

/// One located finding. Rows are 1-based physical line numbers of the CSV
/// record (the profile header is row 1); columns are 1-based field numbers.
struct ValidationIssue {
  std::size_t row = 0;
  std::size_t column = 0;
  IssueCode code{};
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;

  bool ok() const { return errors.empty(); }
  /// One line per issue: "error row 3, column 4: WeightOutOfRange: ...".
  std::string format() const;
};

/// Thrown when validation produced at least one error.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// A parsed value plus the warnings raised while producing it.
template <typename T>
struct Parsed {
  T value;
  ValidationReport report;
};

/// Parses a topic profile CSV with header `id,index,label,weight,year,words`
/// (any column order, `label` optional). The words cell is a bracketed list of
/// quoted terms, e.g. `['opinion', 'computer', 'lab']`.
///
/// Rows out of (year, index) order are re-sorted with a Resorted warning.
/// Throws ValidationError listing every error found.
Parsed<TemporalTopicProfile> parse_profile(std::string_view csv);

/// Parses an N x N headerless TES matrix in the row/column order of
/// `profile`. Blank cells are allowed strictly below the diagonal; whatever is
/// below the diagonal is discarded. With `lenient`, a nonzero contemporary
/// entry is coerced to 0 and a diagonal entry other than 1 is coerced to 1,
/// each with a warning.
Parsed<TesMatrix> parse_tes(std::string_view csv, const TemporalTopicProfile& profile, bool lenient = false);

/// Upper triangle and diagonal, blanks below, shortest round-trip decimals.
std::string write_tes_csv(const TesMatrix& matrix);

/// Canonical profile CSV (header `id,index,label,weight,year,words`).
std::string write_profile_csv(const TemporalTopicProfile& profile);

}  // namespace topictrack
