#pragma once

// JSON encodings used by the CLI reports.
//   AlgebraElement: {"tag": "O", "coeffs": [...]}
//   FockOperator / BlockOperator: {"dim": d, "real": [...], "imag": [...]},
//     row-major over the full (flattened) matrix
//   SectorReport: entries plus the F x F lattice

#include "json.hpp"

#include "hjc/block_operator.hpp"
#include "hjc/division_algebra.hpp"
#include "hjc/fock.hpp"
#include "hjc/jc_core.hpp"
#include "hjc/oracle.hpp"

namespace hjc {

using json = nlohmann::json;

json to_json(const AlgebraElement& e);
// Throws std::invalid_argument on a malformed document.
AlgebraElement algebra_element_from_json(const json& j);

json to_json(const FockOperator& op);
json to_json(const BlockOperator& op);
FockOperator fock_operator_from_json(const json& j);

json to_json(const SectorEntry& e);
json to_json(const SectorReport& r, int lattice_levels);

json to_json(const oracle::ResidualReport& r);

}  // namespace hjc
