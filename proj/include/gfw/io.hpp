#ifndef GFW_IO_HPP
#define GFW_IO_HPP

#include <json.hpp>
#include <string>

#include "gfw/phase_space.hpp"
#include "gfw/tensor_map.hpp"
#include "gfw/tomography.hpp"

namespace gfw {

using nlohmann::json;

// Field-spec files: {"p", "n", "poly", "ordering": {"strategy", "basis"?}}.
struct FieldConfig {
    Field field;
    Ordering ordering;
};

FieldConfig field_config_from_json(const json& j);
json field_config_to_json(const FieldSpec& spec, const Ordering& ord);

json ordering_to_json(const FieldSpec& spec, const Ordering& ord);
Ordering ordering_from_json(const FieldSpec& spec, const json& j);

json phase_to_json(const UnitPhase& u);

json matrix_to_json(const OperatorMatrix& m, const FieldSpec& spec);
std::string matrix_to_csv(const OperatorMatrix& m);

json state_to_json(const StateVector& s, const FieldSpec& spec);
StateVector state_from_json(const FieldSpec& spec, const Ordering& ord, const json& j);

// Rotation-set files: {"kind": "canonical"|"shifted", "basis"?: [...],
// "signs"?: {...}, "h"?: [elem-string per mu in id order]}. For p = 2 the
// construction basis is emitted so the file pins the set completely.
json rotation_to_json(const RotationSet& rot);
RotationSet rotation_from_json(const FieldSpec& spec, const json& j);

json grid_to_json(const WignerGrid& w, const FieldSpec& spec);
std::string grid_to_csv(const WignerGrid& w, const FieldSpec& spec);

json tensor_state_to_json(const TensorState& t);
TensorState tensor_state_from_json(const FieldSpec& spec, const json& j);

json tomogram_to_json(const Tomogram& t);
Tomogram tomogram_from_json(const FieldSpec& spec, const json& j);

json distinct_report_to_json(const DistinctWignerReport& rep, const FieldSpec& spec);

std::string format_double(double v);

}  // namespace gfw

#endif
