#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "snark/matchings.hpp"
#include "snark/measures.hpp"

namespace snark {

class ReportError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Line-stable "key: value" document; one witness per line.
std::string report_text(const std::string& source, const Graph& g, const MeasureReport& r,
                        const std::vector<AuditLine>& audit);
std::string report_json(const std::string& source, const Graph& g, const MeasureReport& r,
                        const std::vector<AuditLine>& audit);

/// 3-array file:
///   ARRAY
///   checksum <hex>
///   M1 <edges>
///   M2 <edges>
///   M3 <edges>
///   E0 <n> E2 <n> E3 <n>
std::string array_to_text(const Graph& g, const ThreeArray& a);
/// Throws ReportError if the checksum differs, a line is not a perfect
/// matching, the bookkeeping line violates |E0| = |E2| + 2|E3| or disagrees
/// with the matchings.
ThreeArray parse_array(std::string_view text, const Graph& g);

struct CorpusRow {
  std::string file;
  std::optional<MeasureReport> report;
  std::vector<AuditLine> audit;
  std::string error;  // parse or measure failure

  bool failed() const;     // an inequality is violated
  bool undecided() const;  // some value or audit line is not determined
};

std::string corpus_table(const std::vector<CorpusRow>& rows);
std::string corpus_json(const std::vector<CorpusRow>& rows);

}  // namespace snark
