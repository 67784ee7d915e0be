#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rlat/blp.hpp"
#include "rlat/filters.hpp"
#include "rlat/harness.hpp"

namespace rlat {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Input that is not well-formed algebra JSON (as opposed to a well-formed
/// table that violates an axiom).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"name"?, "size", "labels"?, "join", "mult", "imp"?}. Throws FormatError.
RawTables raw_tables_from_json(const Json& j);
RawTables parse_raw_tables(std::istream& in);

Json algebra_to_json(const Algebra& a);
Json quotient_to_json(const QuotientPresentation& q);
Json indices(ElementSet s);

Json report_to_json(const AnalysisReport& r);
/// Wall times are only written when `timings` is set, so the default
/// output is byte-stable.
Json harness_to_json(const HarnessReport& r, bool timings = false);
Json findings_to_json(const OpenProblemFindings& f);

}  // namespace rlat
