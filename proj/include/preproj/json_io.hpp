#pragma once

#include <optional>

#include <json.hpp>

#include "preproj/classification.hpp"
#include "preproj/khare.hpp"
#include "preproj/rep.hpp"
#include "preproj/wreath_induction.hpp"

namespace preproj::io {

using json = nlohmann::json;

// Every parser throws ValidationError on schema violations. Layouts are
// documented in docs/formats.md.

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// [re_num, re_den, im_num, im_den]; a string such as "1/2-3i" is accepted on input.
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

json to_json(const DimVector& d);
DimVector dimvector_from_json(const json& j);

json to_json(const Weight& w);
Weight weight_from_json(const json& j);

/// A module file: the module plus the parameters it is meant for.
struct ModuleDocument {
  WreathRep module;
  std::optional<Weight> weight;
  std::optional<Scalar> nu;
};

json to_json(const WreathRep& v, const std::optional<Weight>& weight = {}, const std::optional<Scalar>& nu = {});
ModuleDocument module_from_json(const json& j);

json to_json(const CheckReport& r);
json to_json(const SimpleCertificate& c);
json to_json(const InductionVerdict& v);
json to_json(const VrsModule& m);

}  // namespace preproj::io
