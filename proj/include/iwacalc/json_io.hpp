#ifndef IWACALC_JSON_IO_HPP
#define IWACALC_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include <iwacalc/frobenius.hpp>
#include <iwacalc/iwasawa.hpp>
#include <iwacalc/logmatrix.hpp>
#include <iwacalc/series.hpp>
#include <iwacalc/series_matrix.hpp>

// JSON schemas. Arbitrary-precision values are decimal strings; keys are
// emitted in sorted order so identical values serialize byte-identically.
//
//   series         {"p", "s", "N", "D", "coeffs": [decimal strings]}
//   series matrix  {"g", "denominator_exp", "entries": [[series]], "provenance"?: {"n", "side"}}
//   frobenius      {"p", "g_plus", "g_minus", "C": [[decimal strings]], "N"?, "orientation"?}
//   iwasawa        {"p", "components": {"0": series, ..., "p-2": series}}

namespace iwacalc
{

using json = nlohmann::json;

json to_json(const TruncatedSeries &f);
TruncatedSeries series_from_json(const json &j);

json to_json(const SeriesMatrix &m);
SeriesMatrix series_matrix_from_json(const json &j);

json to_json(const FrobeniusData &fd);
// "N" in the document overrides default_precision.
FrobeniusData frobenius_from_json(const json &j, long default_precision);

json to_json(const IwasawaElement &x);
IwasawaElement iwasawa_from_json(const json &j);

json to_json(const WeierstrassData &w);
json to_json(const CheckReport &r);
json to_json(const ComparisonReport &r);
json to_json(const std::vector<ConvergenceStep> &steps);
json to_json(const EulerExponents &e);

// Parse with SchemaError on malformed text.
json parse_json(const std::string &text);
std::string canonical_dump(const json &j);

} // namespace iwacalc

#endif
