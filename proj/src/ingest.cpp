#include "topictrack/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <set>

#include "topictrack/format.hpp"

namespace topictrack {

std::string_view to_string(IssueCode code) {
  switch (code) {
    case IssueCode::MissingHeader: return "MissingHeader";
    case IssueCode::EmptyProfile: return "EmptyProfile";
    case IssueCode::DuplicateIndex: return "DuplicateIndex";
    case IssueCode::NonContiguousIndex: return "NonContiguousIndex";
    case IssueCode::WeightOutOfRange: return "WeightOutOfRange";
    case IssueCode::BadYear: return "BadYear";
    case IssueCode::EmptyWords: return "EmptyWords";
    case IssueCode::DuplicateId: return "DuplicateId";
    case IssueCode::EmptyId: return "EmptyId";
    case IssueCode::MalformedWords: return "MalformedWords";
    case IssueCode::DimensionMismatch: return "DimensionMismatch";
    case IssueCode::ValueOutOfRange: return "ValueOutOfRange";
    case IssueCode::ContemporaryNonzero: return "ContemporaryNonzero";
    case IssueCode::DiagonalNotOne: return "DiagonalNotOne";
    case IssueCode::BlankAboveDiagonal: return "BlankAboveDiagonal";
    case IssueCode::MalformedCsv: return "MalformedCsv";
    case IssueCode::MalformedNumber: return "MalformedNumber";
    case IssueCode::Resorted: return "Resorted";
    case IssueCode::UnknownColumn: return "UnknownColumn";
    case IssueCode::LowerTriangleIgnored: return "LowerTriangleIgnored";
  }
  return "Unknown";
}

std::string ValidationReport::format() const {
  std::string out;
  auto emit = [&out](std::string_view kind, const ValidationIssue& issue) {
    out += kind;
    out += " row " + std::to_string(issue.row) + ", column " + std::to_string(issue.column) + ": ";
    out += to_string(issue.code);
    out += ": " + issue.message + "\n";
  };
  for (const auto& e : errors) emit("error", e);
  for (const auto& w : warnings) emit("warning", w);
  return out;
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error(report.errors.empty() ? std::string("validation failed")
                                               : std::string(to_string(report.errors.front().code)) + " at row " +
                                                     std::to_string(report.errors.front().row) + ", column " +
                                                     std::to_string(report.errors.front().column) + ": " +
                                                     report.errors.front().message),
      report_(std::move(report)) {}

namespace {

struct CsvRecord {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

void add(std::vector<ValidationIssue>& list, std::size_t row, std::size_t column, IssueCode code,
         std::string message) {
  list.push_back({row, column, code, std::move(message)});
}

// RFC 4180 style reader: quoted fields with "" escapes, LF or CRLF endings.
// Blank lines are skipped. Returns false after recording a MalformedCsv error.
bool read_csv(std::string_view text, std::vector<CsvRecord>& records, ValidationReport& report) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::size_t pos = 0;
  std::size_t line = 1;
  const std::size_t size = text.size();

  auto at_eol = [&](std::size_t p) { return p >= size || text[p] == '\n' || text[p] == '\r'; };
  auto consume_eol = [&](std::size_t& p) {
    if (p < size && text[p] == '\r') ++p;
    if (p < size && text[p] == '\n') ++p;
    ++line;
  };

  while (pos < size) {
    CsvRecord record;
    record.line = line;
    bool any_quoted = false;
    for (;;) {
      std::string field;
      if (pos < size && text[pos] == '"') {
        any_quoted = true;
        const std::size_t field_line = line;
        ++pos;
        for (;;) {
          if (pos >= size) {
            add(report.errors, field_line, record.fields.size() + 1, IssueCode::MalformedCsv,
                "unterminated quoted field");
            return false;
          }
          const char c = text[pos];
          if (c == '"') {
            if (pos + 1 < size && text[pos + 1] == '"') {
              field += '"';
              pos += 2;
              continue;
            }
            ++pos;
            break;
          }
          if (c == '\n') ++line;
          field += c;
          ++pos;
        }
        if (!(at_eol(pos) || text[pos] == ',')) {
          add(report.errors, record.line, record.fields.size() + 1, IssueCode::MalformedCsv,
              "unexpected character after closing quote");
          return false;
        }
      } else {
        while (!at_eol(pos) && text[pos] != ',') {
          if (text[pos] == '"') {
            add(report.errors, record.line, record.fields.size() + 1, IssueCode::MalformedCsv,
                "quote inside unquoted field");
            return false;
          }
          field += text[pos++];
        }
      }
      record.fields.push_back(std::move(field));
      if (pos < size && text[pos] == ',') {
        ++pos;
        continue;
      }
      consume_eol(pos);
      break;
    }
    const bool blank_line = record.fields.size() == 1 && record.fields[0].empty() && !any_quoted;
    if (!blank_line) records.push_back(std::move(record));
  }
  return true;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

// Plain decimals only: -?digits[.digits] or -?.digits. No exponent, no inf/nan.
std::optional<double> parse_decimal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  }
  if (digits == 0 || i != s.size()) return std::nullopt;
  double value = 0.0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value, std::chars_format::fixed);
  if (ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::optional<long long> parse_integer(std::string_view s) {
  if (s.empty()) return std::nullopt;
  long long value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  return value;
}

// `['a', 'b']` with single- or double-quoted terms.
std::optional<std::vector<std::string>> parse_words(std::string_view cell) {
  cell = trim(cell);
  if (cell.size() < 2 || cell.front() != '[' || cell.back() != ']') return std::nullopt;
  std::string_view inner = cell.substr(1, cell.size() - 2);
  std::vector<std::string> words;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < inner.size() && (inner[i] == ' ' || inner[i] == '\t')) ++i;
  };
  skip_space();
  if (i == inner.size()) return words;
  for (;;) {
    skip_space();
    if (i >= inner.size() || (inner[i] != '\'' && inner[i] != '"')) return std::nullopt;
    const char quote = inner[i++];
    const std::size_t close = inner.find(quote, i);
    if (close == std::string_view::npos) return std::nullopt;
    words.emplace_back(inner.substr(i, close - i));
    i = close + 1;
    skip_space();
    if (i == inner.size()) return words;
    if (inner[i] != ',') return std::nullopt;
    ++i;
  }
}

constexpr int kMinYear = 1;
constexpr int kMaxYear = 9999;

}  // namespace

Parsed<TemporalTopicProfile> parse_profile(std::string_view csv) {
  ValidationReport report;
  std::vector<CsvRecord> records;
  if (!read_csv(csv, records, report)) throw ValidationError(std::move(report));

  if (records.empty()) {
    add(report.errors, 1, 1, IssueCode::MissingHeader, "input is empty; expected a header row");
    throw ValidationError(std::move(report));
  }

  const CsvRecord& header = records.front();
  std::map<std::string, std::size_t, std::less<>> columns;
  for (std::size_t c = 0; c < header.fields.size(); ++c) {
    std::string name(trim(header.fields[c]));
    if (!columns.emplace(name, c).second)
      add(report.errors, header.line, c + 1, IssueCode::MissingHeader, "duplicate header column '" + name + "'");
    else if (name != "id" && name != "index" && name != "label" && name != "weight" && name != "year" &&
             name != "words")
      add(report.warnings, header.line, c + 1, IssueCode::UnknownColumn, "ignoring column '" + name + "'");
  }
  for (const char* required : {"id", "index", "weight", "year", "words"}) {
    if (!columns.contains(required))
      add(report.errors, header.line, header.fields.size() + 1, IssueCode::MissingHeader,
          std::string("header lacks required column '") + required + "'");
  }
  if (!report.ok()) throw ValidationError(std::move(report));

  const std::size_t id_col = columns.at("id");
  const std::size_t index_col = columns.at("index");
  const std::size_t weight_col = columns.at("weight");
  const std::size_t year_col = columns.at("year");
  const std::size_t words_col = columns.at("words");
  const auto label_it = columns.find("label");
  const std::optional<std::size_t> label_col =
      label_it == columns.end() ? std::nullopt : std::optional<std::size_t>(label_it->second);

  struct Row {
    std::size_t line;
    TopicRecord topic;
  };
  std::vector<Row> rows;
  const std::size_t data_rows = records.size() - 1;

  for (std::size_t r = 1; r < records.size(); ++r) {
    const CsvRecord& rec = records[r];
    const std::size_t line = rec.line;
    if (rec.fields.size() != header.fields.size()) {
      add(report.errors, line, std::min(rec.fields.size(), header.fields.size()) + 1, IssueCode::MalformedCsv,
          "expected " + std::to_string(header.fields.size()) + " fields, found " +
              std::to_string(rec.fields.size()));
      continue;
    }
    const std::size_t errors_before = report.errors.size();
    TopicRecord topic;

    topic.id = std::string(trim(rec.fields[id_col]));
    if (topic.id.empty()) add(report.errors, line, id_col + 1, IssueCode::EmptyId, "id is empty");

    const std::string_view index_text = trim(rec.fields[index_col]);
    if (auto index = parse_integer(index_text)) {
      if (*index < 0 || static_cast<std::size_t>(*index) >= data_rows)
        add(report.errors, line, index_col + 1, IssueCode::NonContiguousIndex,
            "index " + std::string(index_text) + " outside 0.." + std::to_string(data_rows - 1));
      else
        topic.index = static_cast<TopicIndex>(*index);
    } else {
      add(report.errors, line, index_col + 1, IssueCode::MalformedNumber,
          "index '" + std::string(index_text) + "' is not an integer");
    }

    const std::string_view weight_text = trim(rec.fields[weight_col]);
    if (auto weight = parse_decimal(weight_text)) {
      if (*weight < 0.0 || *weight > 1.0)
        add(report.errors, line, weight_col + 1, IssueCode::WeightOutOfRange,
            "weight " + std::string(weight_text) + " outside [0,1]");
      else
        topic.weight = *weight;
    } else {
      add(report.errors, line, weight_col + 1, IssueCode::MalformedNumber,
          "weight '" + std::string(weight_text) + "' is not a decimal number");
    }

    const std::string_view year_text = trim(rec.fields[year_col]);
    auto year = parse_integer(year_text);
    if (!year || *year < kMinYear || *year > kMaxYear)
      add(report.errors, line, year_col + 1, IssueCode::BadYear,
          "year '" + std::string(year_text) + "' is not a calendar year (yyyy)");
    else
      topic.year = static_cast<int>(*year);

    const std::string_view words_text = trim(rec.fields[words_col]);
    if (words_text.empty() || words_text == "[]") {
      add(report.errors, line, words_col + 1, IssueCode::EmptyWords, "words list is empty");
    } else if (auto words = parse_words(words_text)) {
      if (words->empty())
        add(report.errors, line, words_col + 1, IssueCode::EmptyWords, "words list is empty");
      else
        topic.words = std::move(*words);
    } else {
      add(report.errors, line, words_col + 1, IssueCode::MalformedWords,
          "words must look like ['term', 'term', ...]");
    }

    if (label_col) {
      const std::string_view label = trim(rec.fields[*label_col]);
      if (!label.empty()) topic.label = std::string(label);
    }

    if (report.errors.size() == errors_before) rows.push_back({line, std::move(topic)});
  }

  if (data_rows == 0) add(report.errors, header.line + 1, 1, IssueCode::EmptyProfile, "profile must contain at least one topic");

  std::map<TopicIndex, std::size_t> seen_index;
  std::map<std::string, std::size_t, std::less<>> seen_id;
  for (const Row& row : rows) {
    if (auto [it, fresh] = seen_index.emplace(row.topic.index, row.line); !fresh)
      add(report.errors, row.line, index_col + 1, IssueCode::DuplicateIndex,
          "index " + std::to_string(row.topic.index) + " already used on row " + std::to_string(it->second));
    if (auto [it, fresh] = seen_id.emplace(row.topic.id, row.line); !fresh)
      add(report.errors, row.line, id_col + 1, IssueCode::DuplicateId,
          "id '" + row.topic.id + "' already used on row " + std::to_string(it->second));
  }
  if (!report.ok()) throw ValidationError(std::move(report));

  std::vector<TopicRecord> topics;
  topics.reserve(rows.size());
  bool sorted = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) {
      const TopicRecord& a = rows[i - 1].topic;
      const TopicRecord& b = rows[i].topic;
      if (a.year > b.year || (a.year == b.year && a.index > b.index)) sorted = false;
    }
    topics.push_back(std::move(rows[i].topic));
  }
  if (!sorted)
    add(report.warnings, header.line + 1, 1, IssueCode::Resorted, "rows re-sorted ascending by (year, index)");

  return {TemporalTopicProfile(std::move(topics)), std::move(report)};
}

Parsed<TesMatrix> parse_tes(std::string_view csv, const TemporalTopicProfile& profile, bool lenient) {
  ValidationReport report;
  std::vector<CsvRecord> records;
  if (!read_csv(csv, records, report)) throw ValidationError(std::move(report));

  const std::size_t n = profile.size();
  if (records.size() != n) {
    const std::size_t row = records.size() > n ? records[n].line : (records.empty() ? 1 : records.back().line + 1);
    add(report.errors, row, 1, IssueCode::DimensionMismatch,
        "expected " + std::to_string(n) + " rows, found " + std::to_string(records.size()));
  }
  for (const CsvRecord& rec : records) {
    if (rec.fields.size() != n)
      add(report.errors, rec.line, std::min(rec.fields.size(), n) + 1, IssueCode::DimensionMismatch,
          "expected " + std::to_string(n) + " columns, found " + std::to_string(rec.fields.size()));
  }
  if (!report.ok()) throw ValidationError(std::move(report));

  TesMatrix matrix(n);
  bool lower_warned = false;
  for (std::size_t i = 0; i < n; ++i) {
    const CsvRecord& rec = records[i];
    for (std::size_t j = 0; j < n; ++j) {
      const std::string_view cell = trim(rec.fields[j]);
      const std::size_t row = rec.line;
      const std::size_t col = j + 1;
      std::optional<double> value;
      if (!cell.empty()) {
        value = parse_decimal(cell);
        if (!value) {
          add(report.errors, row, col, IssueCode::MalformedNumber, "'" + std::string(cell) + "' is not a decimal number");
          continue;
        }
      }

      if (i > j) {
        if (value && *value != 0.0 && !lower_warned) {
          add(report.warnings, row, col, IssueCode::LowerTriangleIgnored, "values below the diagonal are ignored");
          lower_warned = true;
        }
        continue;
      }

      if (value && (*value < 0.0 || *value > 1.0)) {
        add(report.errors, row, col, IssueCode::ValueOutOfRange, "TES " + std::string(cell) + " outside [0,1]");
        continue;
      }

      if (i == j) {
        if (!value || std::abs(*value - 1.0) > 1e-9) {
          const std::string msg = "diagonal entry is '" + std::string(cell) + "', expected 1";
          if (lenient)
            add(report.warnings, row, col, IssueCode::DiagonalNotOne, msg + "; coerced to 1");
          else
            add(report.errors, row, col, IssueCode::DiagonalNotOne, msg);
        }
        continue;  // diagonal stays exactly 1
      }

      if (!value) {
        add(report.errors, row, col, IssueCode::BlankAboveDiagonal, "blank cell above the diagonal");
        continue;
      }
      if (*value != 0.0 && profile.at_position(i).year == profile.at_position(j).year) {
        const std::string msg = "contemporary topics '" + profile.at_position(i).id + "' and '" +
                                profile.at_position(j).id + "' (year " + std::to_string(profile.at_position(i).year) +
                                ") have TES " + std::string(cell);
        if (lenient)
          add(report.warnings, row, col, IssueCode::ContemporaryNonzero, msg + "; coerced to 0");
        else
          add(report.errors, row, col, IssueCode::ContemporaryNonzero, msg);
        continue;
      }
      matrix(i, j) = *value;
    }
  }
  if (!report.ok()) throw ValidationError(std::move(report));
  return {std::move(matrix), std::move(report)};
}

std::string write_tes_csv(const TesMatrix& matrix) {
  std::string out;
  for (std::size_t i = 0; i < matrix.n(); ++i) {
    for (std::size_t j = 0; j < matrix.n(); ++j) {
      if (j > 0) out += ',';
      if (j >= i) out += format_shortest(matrix(i, j));
    }
    out += '\n';
  }
  return out;
}

namespace {

std::string csv_quote(std::string_view field) {
  const bool needs = field.find_first_of(",\"\r\n") != std::string_view::npos ||
                     (!field.empty() && (field.front() == ' ' || field.back() == ' '));
  if (!needs) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string write_profile_csv(const TemporalTopicProfile& profile) {
  std::string out = "id,index,label,weight,year,words\n";
  for (const TopicRecord& t : profile.topics()) {
    std::string words = "[";
    for (std::size_t k = 0; k < t.words.size(); ++k) {
      if (k > 0) words += ", ";
      const char quote = t.words[k].find('\'') == std::string::npos ? '\'' : '"';
      words += quote + t.words[k] + quote;
    }
    words += ']';
    out += csv_quote(t.id) + ',' + std::to_string(t.index) + ',' + csv_quote(t.label.value_or("")) + ',' +
           format_shortest(t.weight) + ',' + std::to_string(t.year) + ',' + csv_quote(words) + '\n';
  }
  return out;
}

}  // namespace topictrack
