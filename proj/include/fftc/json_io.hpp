#pragma once

#include <json.hpp>
#include <memory>
#include <string>

#include "fftc/audit.hpp"
#include "fftc/frobform.hpp"
#include "fftc/grring.hpp"

namespace fftc {

using Json = nlohmann::json;

// Scalars serialize through the canonical text grammar; sparse entries omit
// zeros. Field objects look like {"kind": "Q"|"Q(i)"|"Fp", "p": int}.
Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const FieldSpec& f);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, const FieldSpec& f);

// Algebra: {"field", "dim", "basis", "unit", "mult": [[i, j, k, "scalar"]...],
// "parity": [0, 1, ...] (optional)}.
Json algebra_to_json(const Algebra& a);
std::shared_ptr<Algebra> algebra_from_json(const Json& j);

// Module: {"algebra": <inline object or path>, "dim", "action": one sparse
// [[r, c, "scalar"]...] list per algebra basis element, "parity" optional}.
// base_dir resolves a path-valued "algebra" field.
Json module_to_json(const AlgModule& m);
AlgModule module_from_json(const Json& j, const std::string& base_dir);

// Ring: Algebra keys plus "labels", "projectives": {label: [coords...]},
// "dual": {label: label}.
Json ring_to_json(const CommRing& r);
CommRing ring_from_json(const Json& j);

// CentralForm: {"coords": ["scalar", ...]}.
Json central_form_to_json(const CentralForm& f);
CentralForm central_form_from_json(const Json& j, std::shared_ptr<const Algebra> a);

Json dataset_to_json(const ModularDataSet& d);
ModularDataSet dataset_from_json(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace fftc
