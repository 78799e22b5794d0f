#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "fragmenta/frozen.hpp"
#include "fragmenta/hilbert.hpp"
#include "fragmenta/models.hpp"

namespace fragmenta {

// Schemas (docs/report-schema.md):
//   operator: {"dim": D, "entries": [[row, col, re_num, re_den, im_num, im_den], ...]}
//   vector:   {"dim": D, "entries": [[index,   re_num, re_den, im_num, im_den], ...]}
//   product states are plain digit strings, e.g. "102".
nlohmann::json operator_to_json(const ExactOperator& op);
ExactOperator operator_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const ExactVector& v);
ExactVector vector_from_json(const nlohmann::json& j);

// {"model": "TL", "N": 3, "L": 6, "boundary": "open", "J": [1,1,1,1,1]}
ModelId model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const ModelId& id);

// {"segments": [{"s": "10", "colors": [0,1], "l": 4}], "dimers": 2}
nlohmann::json sector_label_to_json(const SectorLabel& label);
SectorLabel sector_label_from_json(const nlohmann::json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace fragmenta
