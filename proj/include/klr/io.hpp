#pragma once

// JSON and CSV forms of the library's values.
//
//   LaurentPoly     [[exponent, coefficient], ...] ascending by exponent
//   Multipartition  "2,1|1" (same as the text form)
//   StandardTableau {"shape": "...", "placement": [[row, col, comp], ...]}

#include <string>

#include "json.hpp"

#include "klr/adjustment.hpp"
#include "klr/combinatorics.hpp"
#include "klr/fock.hpp"
#include "klr/laurent.hpp"
#include "klr/specht.hpp"
#include "klr/tableaux.hpp"

namespace klr {

using nlohmann::json;

json laurent_to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const json& j);

json multipartition_to_json(const Multipartition& lambda);
Multipartition multipartition_from_json(const json& j);

json tableau_to_json(const StandardTableau& t);
StandardTableau tableau_from_json(const json& j);

json report_to_json(const SweepReport& report);
json matrix_to_json(const GradedDecompositionMatrix& dec);
json llt_to_json(const LltReport& report);
json remark_to_json(const RemarkAnalysis& analysis);

// Header "lambda,<col>,...", one line per row, entries in text form and
// double-quoted.
std::string matrix_to_csv(const GradedDecompositionMatrix& dec);

}  // namespace klr
