#include "pm3/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pm3 {

Complex3 read_tet(std::istream& in) {
  std::vector<Facet> facets;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    // trim trailing whitespace/CR
    while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' ||
                           sv.back() == '\t'))
      sv.remove_suffix(1);
    if (sv.empty() || sv.front() == '#') continue;
    std::istringstream ls{std::string(sv)};
    long v[4];
    if (!(ls >> v[0] >> v[1] >> v[2] >> v[3]))
      throw error("line " + std::to_string(lineno) +
                  ": expected four vertex labels");
    std::string extra;
    if (ls >> extra)
      throw error("line " + std::to_string(lineno) + ": trailing token '" +
                  extra + "'");
    for (long x : v)
      if (x < 0)
        throw error("line " + std::to_string(lineno) +
                    ": negative vertex label");
    try {
      facets.push_back(make_facet(
          static_cast<VertexId>(v[0]), static_cast<VertexId>(v[1]),
          static_cast<VertexId>(v[2]), static_cast<VertexId>(v[3])));
    } catch (const error& e) {
      throw error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (facets.empty()) throw error("no facets in input");
  return Complex3::from_facets(std::move(facets));
}

Complex3 read_tet_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  return read_tet(in);
}

void write_tet(std::ostream& out, const Complex3& K) {
  for (const auto& f : K.facets())
    out << f[0] << ' ' << f[1] << ' ' << f[2] << ' ' << f[3] << '\n';
}

void write_tet_file(const std::string& path, const Complex3& K) {
  std::ofstream out(path);
  if (!out) throw error("cannot open " + path + " for writing");
  write_tet(out, K);
}

Complex3 read_facets_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
    throw error("expected {\"facets\": [[a,b,c,d], ...]}");
  std::vector<Facet> facets;
  int idx = 0;
  for (const auto& row : j["facets"]) {
    ++idx;
    if (!row.is_array() || row.size() != 4)
      throw error("facets[" + std::to_string(idx - 1) +
                  "]: expected four labels");
    long v[4];
    for (int i = 0; i < 4; ++i) {
      if (!row[static_cast<std::size_t>(i)].is_number_integer())
        throw error("facets[" + std::to_string(idx - 1) +
                    "]: non-integer label");
      v[i] = row[static_cast<std::size_t>(i)].get<long>();
      if (v[i] < 0)
        throw error("facets[" + std::to_string(idx - 1) +
                    "]: negative label");
    }
    try {
      facets.push_back(make_facet(
          static_cast<VertexId>(v[0]), static_cast<VertexId>(v[1]),
          static_cast<VertexId>(v[2]), static_cast<VertexId>(v[3])));
    } catch (const error& e) {
      throw error("facets[" + std::to_string(idx - 1) + "]: " + e.what());
    }
  }
  if (facets.empty()) throw error("no facets in input");
  return Complex3::from_facets(std::move(facets));
}

Complex3 read_facets_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  return read_facets_json(in);
}

std::string facets_json(const Complex3& K) {
  nlohmann::ordered_json j;
  auto& arr = j["facets"] = nlohmann::ordered_json::array();
  for (const auto& f : K.facets()) arr.push_back({f[0], f[1], f[2], f[3]});
  return j.dump();
}

Complex3 read_complex_file(const std::string& path) {
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    return read_facets_json_file(path);
  return read_tet_file(path);
}

}  // namespace pm3
