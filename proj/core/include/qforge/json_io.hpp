#pragma once

#include "qforge/pipeline.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace qforge {

// Wire formats. Rationals serialize as "p/q" ("p" when q = 1); matrices as
// row-major arrays of rows; arrow order in a quiver file is the canonical
// arrow index order used everywhere.

nlohmann::json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

nlohmann::json representation_to_json(const Representation& v);
Representation representation_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const SubquiverWitness& w);
SubquiverWitness witness_from_json(const nlohmann::json& j);

nlohmann::json pair_to_json(const ExceptionalPair& p);
ExceptionalPair pair_from_json(const nlohmann::json& j);

nlohmann::json cocycles_to_json(const CocycleBasis& b);

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json forge_result_to_json(const ForgeResult& r);
ForgeResult forge_result_from_json(const nlohmann::json& j);

// File helpers; IoError carries the path and the parser's position info.
nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

// Canonical text form used for determinism checks: 2-space indent, keys in
// sorted order, trailing newline.
std::string dump_canonical(const nlohmann::json& j);

} // namespace qforge
