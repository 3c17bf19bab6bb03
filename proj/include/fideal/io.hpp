#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fideal/enumeration.hpp"
#include "fideal/ideal.hpp"

namespace fideal {

/// Text grammar:  n=<int>; <monomial>, <monomial>, ...
/// where a monomial is x<i>*x<j>*... or `1` for the unit. Whitespace is
/// insignificant and lines starting with '#' are comments.
///
/// Record grammar: {"n": 5, "generators": [[1,4],[2,5]], "label": "..."}
struct IdealDocument {
  int n = 0;
  std::vector<std::vector<int>> generators;
  std::optional<std::string> label;
};

struct ParsedIdeal {
  MonomialIdeal ideal;
  std::optional<std::string> label;
  bool reduced = false;  // the input generators were not minimal
};

/// Throws ErrorCode::parse_error with "line:column: message".
IdealDocument parse_text_document(std::string_view text);
IdealDocument parse_record_document(std::string_view text);

/// Chooses the grammar from the first non-blank character ('{' = record).
IdealDocument parse_document(std::string_view text);

ParsedIdeal to_ideal(const IdealDocument& doc, bool allow_unit = false);
ParsedIdeal parse_ideal(std::string_view text, bool allow_unit = false);

std::string render_monomial(const Monomial& m);
std::string render_text(const MonomialIdeal& ideal);
std::string render_record(const MonomialIdeal& ideal,
                          const std::optional<std::string>& label = std::nullopt);

enum class Format { table, records };

/// Census file: a '#' summary header, then one ideal per line.
void write_census(std::ostream& out, const CensusRecord& record, Format format);

struct CensusFile {
  int n = 0;
  std::optional<int> degree;
  std::uint64_t count = 0;
  bool budget_exhausted = false;
  std::vector<MonomialIdeal> ideals;
};

CensusFile read_census(std::string_view text);

}  // namespace fideal
