#include "weyr/io.hpp"

#include <fstream>
#include <sstream>

#include "weyr/error.hpp"

namespace weyr {

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

GaussianRational scalar_from_json(const Json& j) {
  if (j.is_string()) return GaussianRational::parse(j.get<std::string>());
  if (j.is_number_integer()) return GaussianRational(j.get<long>());
  throw ParseError("expected a scalar string, got " + j.dump());
}

Vector vector_from_json(const Json& j, std::size_t expected, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  if (j.size() != expected)
    throw ParseError(what + " has " + std::to_string(j.size()) + " entries, expected " + std::to_string(expected));
  Vector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

Matrix matrix_from_json(const Json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) throw ParseError(what + " must be an array of " + std::to_string(n) + " rows");
  std::vector<GaussianRational> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    Vector row = vector_from_json(j[r], n, what + " row " + std::to_string(r));
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return {n, n, std::move(entries)};
}

std::size_t size_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const Json& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
    throw ParseError(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace

Vector parse_vector(std::string_view text) {
  Vector v;
  for (auto item : split_commas(text)) v.push_back(GaussianRational::parse(item));
  return v;
}

std::vector<ExtendedScalar> parse_points(std::string_view text) {
  std::vector<ExtendedScalar> v;
  for (auto item : split_commas(text)) v.push_back(ExtendedScalar::parse(item));
  return v;
}

Json to_json(const GaussianRational& z) { return z.to_string(); }

Json to_json(const ExtendedScalar& z) { return z.to_string(); }

Json to_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.to_string());
  return j;
}

Json to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(to_json(m.row(r)));
  return j;
}

Json to_json(const Polynomial& p) {
  return {{"coeffs", to_json(p.coeffs())}, {"degree", p.degree()}, {"text", p.to_string()}};
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (std::size_t c = 0; c < s.dim(); ++c) basis.push_back(to_json(s.basis().col(c)));
  return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", basis}};
}

Json to_json(const WeyrTable& t) {
  return {{"at", to_json(t.at)}, {"indices", t.indices}, {"root_dims", t.root_dims}};
}

Json to_json(const SpectrumReport& s) {
  Json finite = Json::array();
  for (const auto& e : s.finite_eigenvalues)
    finite.push_back({{"eigenvalue", to_json(e.root)}, {"multiplicity", e.multiplicity}});
  return {{"finite_eigenvalues", finite},
          {"residual", to_json(s.residual)},
          {"has_infinity", s.has_infinity},
          {"infinity_multiplicity", s.infinity_multiplicity}};
}

Json to_json(const FredholmData& f) { return {{"dim_ker", f.dim_ker}, {"codim_ran", f.codim_ran}}; }

Json to_json(const PerturbationSpec& s) {
  Json j = {{"type", to_string(s.kind)}, {"u", to_json(s.u)}};
  if (s.w) j["w"] = to_json(*s.w);
  j["vfunc"] = to_json(s.v_func);
  if (s.w_func) j["wfunc"] = to_json(*s.w_func);
  return j;
}

Json pencil_to_json(const OperatorPencil& p) {
  return {{"n", p.n()}, {"E", to_json(p.e())}, {"A", to_json(p.a())}};
}

OperatorPencil pencil_from_json(const Json& j) {
  try {
    const std::size_t n = size_field(j, "n");
    if (!j.contains("E") || !j.contains("A")) throw ParseError("pencil needs fields 'E' and 'A'");
    return {matrix_from_json(j.at("E"), n, "E"), matrix_from_json(j.at("A"), n, "A")};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid pencil: ") + e.what());
  }
}

Json relation_to_json(const LinearRelation& l) {
  Json basis = Json::array();
  const Matrix top = l.top();
  const Matrix bottom = l.bottom();
  for (std::size_t c = 0; c < l.dim(); ++c) basis.push_back({{"x", to_json(top.col(c))}, {"y", to_json(bottom.col(c))}});
  return {{"dim_x", l.dim_x()}, {"dim_y", l.dim_y()}, {"basis", basis}};
}

LinearRelation relation_from_json(const Json& j) {
  try {
    const std::size_t dx = size_field(j, "dim_x");
    const std::size_t dy = size_field(j, "dim_y");
    if (!j.contains("basis") || !j.at("basis").is_array()) throw ParseError("relation needs an array 'basis'");
    std::vector<std::pair<Vector, Vector>> pairs;
    for (const auto& el : j.at("basis")) {
      if (!el.is_object() || !el.contains("x") || !el.contains("y"))
        throw ParseError("relation basis elements need 'x' and 'y'");
      pairs.emplace_back(vector_from_json(el.at("x"), dx, "x"), vector_from_json(el.at("y"), dy, "y"));
    }
    return LinearRelation::from_span(dx, dy, pairs);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid relation: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace weyr
