#pragma once

#include <string>

#include "json.hpp"
#include "sigform/restricted.hpp"
#include "sigform/signature.hpp"

namespace sigform {

nlohmann::json rat_to_json(const Rat& x);     // integer or "a/b" string
Rat rat_from_json(const nlohmann::json& j);
nlohmann::json qvec_to_json(const QVec& v);
QVec qvec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SignatureResult& r);
nlohmann::json to_json(const FoldedDiagram& d);

/// GroupSpecFile: {"builtin": "GL(4,R)"} or
/// {"builtin": "GL", "params": {"n": 4}} or
/// {"custom": {"rank", "roots", "coroots", "theta", "grading"}} where
/// grading lists "c"/"n" for the theta-fixed roots in the order they appear
/// in the roots array. Errors carry the offending field.
RealFormPtr real_form_from_json(const nlohmann::json& spec);
RealFormPtr real_form_from_file(const std::string& path);

/// Inverse of the custom branch (used for round-trip checks).
nlohmann::json custom_spec_to_json(const RealForm& rf);

}  // namespace sigform
