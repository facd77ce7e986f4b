#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "opair/chain/chain_complex.hpp"
#include "opair/combinat/cube_word.hpp"
#include "opair/families/box_realization.hpp"
#include "opair/families/family.hpp"

namespace opair::cli {

using families::Family;

// Faces in export order: by dimension, then by encoding.
struct FaceTable {
  Family family;
  std::size_t n;
  std::vector<std::string> encodings;
  std::vector<std::size_t> dims;
  std::unordered_map<std::string, std::size_t> id;
  std::vector<std::vector<std::size_t>> boundary;

  FaceTable(Family f, std::size_t n_) : family(f), n(n_) {
    const auto graded = families::enumerate_faces(f, n_);
    for (std::size_t k = 0; k < graded.size(); ++k)
      for (const auto& s : graded[k]) {
        id.emplace(s, encodings.size());
        encodings.push_back(s);
        dims.push_back(k);
      }
    boundary.resize(encodings.size());
    for (std::size_t i = 0; i < encodings.size(); ++i) {
      for (const auto& b : families::boundary(f, encodings[i])) boundary[i].push_back(id.at(b));
      std::sort(boundary[i].begin(), boundary[i].end());
    }
  }

  std::size_t top() const { return dims.empty() ? 0 : dims.back(); }

  // Ids of the facets containing each face.
  std::vector<std::vector<std::size_t>> facets() const {
    std::vector<std::vector<std::size_t>> out(encodings.size());
    if (top() == 0) return out;
    for (std::size_t f = 0; f < encodings.size(); ++f) {
      if (dims[f] + 1 != top()) continue;
      std::vector<bool> seen(encodings.size(), false);
      std::vector<std::size_t> stack{f};
      seen[f] = true;
      while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        out[v].push_back(f);
        for (auto c : boundary[v])
          if (!seen[c]) {
            seen[c] = true;
            stack.push_back(c);
          }
      }
    }
    return out;
  }
};

inline nlohmann::json box_json(const families::GeomBox& b) {
  nlohmann::json j = nlohmann::json::array();
  for (auto [lo, hi] : b.sides) j.push_back({lo / 2.0, hi / 2.0});
  return j;
}

inline nlohmann::json export_json(Family f, std::size_t n) {
  const FaceTable table(f, n);
  const auto facets = table.facets();
  nlohmann::json j;
  j["family"] = families::to_string(f);
  j["n"] = n;
  j["ring"] = chain::to_string(chain::Ring::GF2);
  j["faces"] = nlohmann::json::array();
  std::vector<families::FacetSet> labels;
  if (f == Family::Freehedron) {
    families::FreehedronPoset poset(n);
    const auto sets = poset.facet_sets();
    for (const auto& s : table.encodings) labels.push_back(sets[poset.index(s)]);
  }
  for (std::size_t i = 0; i < table.encodings.size(); ++i) {
    nlohmann::json face;
    face["id"] = i;
    face["dim"] = table.dims[i];
    face["encoding"] = table.encodings[i];
    face["facets"] = facets[i];
    if (!labels.empty()) {
      std::vector<std::string> names;
      for (const auto& l : labels[i]) names.push_back(l.str());
      face["facet_labels"] = names;
    }
    j["faces"].push_back(std::move(face));
  }
  j["boundary"] = nlohmann::json::object();
  for (std::size_t i = 0; i < table.encodings.size(); ++i) j["boundary"][std::to_string(i)] = table.boundary[i];
  if (f == Family::Freehedron || f == Family::Cube) {
    nlohmann::json r = nlohmann::json::object();
    if (f == Family::Freehedron) {
      const auto boxes = families::box_realization(n);
      for (std::size_t i = 0; i < table.encodings.size(); ++i)
        r[std::to_string(i)] = box_json(boxes.at(table.encodings[i]));
    } else {
      for (std::size_t i = 0; i < table.encodings.size(); ++i)
        r[std::to_string(i)] = box_json(families::cube_box(combinat::CubeWord::parse(table.encodings[i])));
    }
    j["realization"] = std::move(r);
  }
  return j;
}

// Rebuilds the chain complex from an exported document.
inline chain::ChainComplex import_json(const nlohmann::json& j) {
  const auto& faces = j.at("faces");
  std::vector<std::string> enc(faces.size());
  std::vector<std::size_t> dim(faces.size());
  std::size_t top = 0;
  for (const auto& f : faces) {
    const auto id = f.at("id").get<std::size_t>();
    if (id >= faces.size()) throw std::invalid_argument("import_json: face id out of range");
    enc[id] = f.at("encoding").get<std::string>();
    dim[id] = f.at("dim").get<std::size_t>();
    top = std::max(top, dim[id]);
  }
  std::vector<std::vector<std::string>> basis(faces.empty() ? 0 : top + 1);
  for (std::size_t i = 0; i < enc.size(); ++i) basis[dim[i]].push_back(enc[i]);
  for (auto& b : basis) std::sort(b.begin(), b.end());
  std::unordered_map<std::string, std::vector<std::string>> bd;
  for (const auto& [key, ids] : j.at("boundary").items()) {
    auto& out = bd[enc.at(std::stoul(key))];
    for (const auto& i : ids) out.push_back(enc.at(i.get<std::size_t>()));
  }
  return chain::complex_from_boundary(std::move(basis), [&](std::size_t, const std::string& s) {
    auto it = bd.find(s);
    return it == bd.end() ? std::vector<std::string>{} : it->second;
  });
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace detail

// Hasse diagram, one rank cluster per dimension, edges from a face to its facets.
inline std::string export_dot(Family f, std::size_t n) {
  const FaceTable table(f, n);
  std::ostringstream os;
  os << "digraph \"" << families::to_string(f) << "(" << n << ")\" {\n";
  os << "  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t d = 0; d <= table.top(); ++d) {
    os << "  subgraph cluster_dim" << d << " {\n    label=\"dim " << d << "\";\n    rank=same;\n";
    for (std::size_t i = 0; i < table.encodings.size(); ++i)
      if (table.dims[i] == d) os << "    f" << i << " [label=\"" << detail::dot_escape(table.encodings[i]) << "\"];\n";
    os << "  }\n";
  }
  for (std::size_t i = 0; i < table.encodings.size(); ++i)
    for (auto b : table.boundary[i]) os << "  f" << b << " -> f" << i << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace opair::cli
