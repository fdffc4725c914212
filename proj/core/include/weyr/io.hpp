#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "weyr/pencil.hpp"
#include "weyr/perturb.hpp"
#include "weyr/relation.hpp"

namespace weyr {

using Json = nlohmann::ordered_json;

/// Comma-separated scalars, e.g. `1/1,0/1,-1/2+1/1*i`.
Vector parse_vector(std::string_view text);
/// Comma-separated scalars or `inf`.
std::vector<ExtendedScalar> parse_points(std::string_view text);

Json to_json(const GaussianRational& z);
Json to_json(const ExtendedScalar& z);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Polynomial& p);
Json to_json(const Subspace& s);
Json to_json(const WeyrTable& t);
Json to_json(const SpectrumReport& s);
Json to_json(const FredholmData& f);
Json to_json(const PerturbationSpec& s);

/// Pencil file: `{n, E: [[scalar,…],…], A: [[…]]}`.
Json pencil_to_json(const OperatorPencil& p);
OperatorPencil pencil_from_json(const Json& j);

/// Relation file: `{dim_x, dim_y, basis: [{x: [...], y: [...]}]}`; canonicalized on load.
Json relation_to_json(const LinearRelation& l);
LinearRelation relation_from_json(const Json& j);

/// Throws ParseError on I/O or JSON syntax errors.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace weyr
