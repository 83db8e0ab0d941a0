#pragma once

#include <json.hpp>

#include "hinges/urchin.hpp"

namespace hinges {

using json = nlohmann::json;

json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j);

json relation_to_json(const LinearRelation& r);
LinearRelation relation_from_json(const json& j);

json hinge_to_json(const Hinge& h);
Hinge hinge_from_json(const json& j);

json weak_hinge_to_json(const WeakHinge& w);
WeakHinge weak_hinge_from_json(const json& j);

json exterior_to_json(const ExteriorOperator& op);
ExteriorOperator exterior_from_json(const json& j);

json glued_to_json(const GluedFamily& f);
GluedFamily glued_from_json(const json& j);

json laurent_matrix_to_json(const LaurentMatrix& g);
LaurentMatrix laurent_matrix_from_json(const json& j);

json exponent_data_to_json(const ExponentData& e);

json rep_operator_to_json(const RepOperator& op, std::size_t space_dim);

json urchin_point_to_json(const UrchinPoint& p);
UrchinPoint urchin_point_from_json(const json& j);

json projection_to_json(const UrchinProjection& p);

Signature parse_signature(const std::string& text);  // "2,1,0"

}  // namespace hinges
