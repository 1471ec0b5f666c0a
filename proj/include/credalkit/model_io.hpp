#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "credalkit/belief.hpp"
#include "credalkit/credal.hpp"
#include "credalkit/decision.hpp"
#include "credalkit/errors.hpp"
#include "credalkit/frame.hpp"
#include "credalkit/polynomial.hpp"
#include "credalkit/rational.hpp"

namespace credalkit {

/// A parsed model document: the frame plus any of a mass assignment, a credal
/// set (vertex or polynomial form), and a gamble.
///
/// Documents are a restricted JSON profile: objects, arrays, and strings
/// only. Numbers are written as strings ("1/4", "0.25") and parsed exactly.
///
///   {
///     "frame": ["1", "2", "3", "4"],
///     "mass": {"1": "1/4", "1+2": "1/4", "13": "1/4", "14": "1/4"},
///     "credal": {"kind": "polynomial", "params": ["t"],
///                "box": [["1/2", "1"]],
///                "atoms": ["t^2", "t*(1-t)", "(1-t)*t", "(1-t)^2"]},
///     "gamble": ["-1/4", "1", "1", "-2"]
///   }
///
/// Vertex credal sets use {"kind": "vertices", "vertices": [["1/2","1/2","0"], ...]}.
struct ModelDocument {
  Frame frame;
  std::optional<MassFunction> mass;
  std::optional<std::variant<VertexPolytope, ParametricFamily>> credal;
  std::optional<Gamble> gamble;

  const VertexPolytope* polytope() const {
    return credal ? std::get_if<VertexPolytope>(&*credal) : nullptr;
  }
  const ParametricFamily* family() const {
    return credal ? std::get_if<ParametricFamily>(&*credal) : nullptr;
  }
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                       std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Enforces the restricted profile: no numbers, booleans, or nulls anywhere.
inline void check_profile(const nlohmann::json& j, const std::string& path) {
  using value_t = nlohmann::json::value_t;
  switch (j.type()) {
    case value_t::object:
      for (const auto& [key, value] : j.items()) check_profile(value, path + "/" + key);
      return;
    case value_t::array: {
      std::size_t i = 0;
      for (const auto& value : j) check_profile(value, path + "/" + std::to_string(i++));
      return;
    }
    case value_t::string:
      return;
    default:
      throw ValidationError("document value at " + (path.empty() ? "/" : path) +
                            " must be an object, array, or string");
  }
}

inline const nlohmann::json& expect(const nlohmann::json& j, const char* key,
                                    const char* context) {
  auto it = j.find(key);
  if (it == j.end())
    throw ValidationError(std::string(context) + " requires a \"" + key + "\" entry");
  return *it;
}

inline std::vector<Rational> rational_list(const nlohmann::json& j, const char* context) {
  if (!j.is_array())
    throw ValidationError(std::string(context) + " must be an array of rational strings");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(parse_rational(v.get<std::string>()));
  return out;
}

}  // namespace detail

inline ModelDocument parse_model(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string msg = e.what();
    if (auto pos = msg.find("] "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError(line, col, msg);
  }
  if (!doc.is_object()) throw ValidationError("document root must be an object");
  detail::check_profile(doc, "");

  const auto& frame_json = detail::expect(doc, "frame", "document");
  if (!frame_json.is_array()) throw ValidationError("\"frame\" must be an array of labels");
  std::vector<std::string> labels;
  for (const auto& l : frame_json) labels.push_back(l.get<std::string>());
  Frame frame(std::move(labels));

  ModelDocument out{frame, std::nullopt, std::nullopt, std::nullopt};

  if (auto it = doc.find("mass"); it != doc.end()) {
    if (!it->is_object()) throw ValidationError("\"mass\" must be an object");
    std::map<std::uint32_t, Rational> masses;
    for (const auto& [event, value] : it->items()) {
      const std::uint32_t bits = frame.parse_event(event);
      if (masses.count(bits))
        throw ValidationError("duplicate mass entry for event \"" + event + "\"");
      masses.emplace(bits, parse_rational(value.get<std::string>()));
    }
    out.mass = MassFunction(frame, std::move(masses));
  }

  if (auto it = doc.find("credal"); it != doc.end()) {
    if (!it->is_object()) throw ValidationError("\"credal\" must be an object");
    const std::string kind = detail::expect(*it, "kind", "credal").get<std::string>();
    if (kind == "vertices") {
      const auto& vs = detail::expect(*it, "vertices", "vertex credal set");
      if (!vs.is_array() || vs.empty())
        throw ValidationError("\"vertices\" must be a nonempty array");
      std::vector<Distribution> vertices;
      for (const auto& v : vs)
        vertices.emplace_back(frame, detail::rational_list(v, "vertex"));
      out.credal = VertexPolytope(frame, std::move(vertices));
    } else if (kind == "polynomial") {
      const auto& params_json = detail::expect(*it, "params", "polynomial credal set");
      std::vector<std::string> params;
      for (const auto& p : params_json) params.push_back(p.get<std::string>());
      const auto& box_json = detail::expect(*it, "box", "polynomial credal set");
      std::vector<std::pair<Rational, Rational>> box;
      for (const auto& b : box_json) {
        auto bounds = detail::rational_list(b, "box interval");
        if (bounds.size() != 2)
          throw ValidationError("box interval must be [lo, hi]");
        box.emplace_back(bounds[0], bounds[1]);
      }
      const auto& atoms_json = detail::expect(*it, "atoms", "polynomial credal set");
      std::vector<Polynomial> atoms;
      for (const auto& a : atoms_json)
        atoms.push_back(parse_polynomial(a.get<std::string>(), params));
      out.credal = ParametricFamily(frame, std::move(params), std::move(box),
                                    std::move(atoms));
    } else {
      throw ValidationError("credal kind must be \"vertices\" or \"polynomial\", got \"" +
                            kind + "\"");
    }
  }

  if (auto it = doc.find("gamble"); it != doc.end())
    out.gamble = Gamble(frame, detail::rational_list(*it, "\"gamble\""));

  return out;
}

/// Canonical serialization; parse_model(serialize_model(d)) reconstructs an
/// equal document.
inline std::string serialize_model(const ModelDocument& doc) {
  nlohmann::json j;
  j["frame"] = doc.frame.atoms();
  if (doc.mass) {
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [bits, v] : doc.mass->focal())
      m[doc.frame.format_event(bits)] = to_fraction_string(v);
    j["mass"] = std::move(m);
  }
  if (const VertexPolytope* poly = doc.polytope()) {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : poly->vertices()) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& p : v.probs()) row.push_back(to_fraction_string(p));
      vs.push_back(std::move(row));
    }
    j["credal"] = {{"kind", "vertices"}, {"vertices", std::move(vs)}};
  } else if (const ParametricFamily* fam = doc.family()) {
    nlohmann::json box = nlohmann::json::array();
    for (const auto& [lo, hi] : fam->box())
      box.push_back({to_fraction_string(lo), to_fraction_string(hi)});
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : fam->atom_polynomials())
      atoms.push_back(a.to_string(fam->param_names()));
    j["credal"] = {{"kind", "polynomial"},
                   {"params", fam->param_names()},
                   {"box", std::move(box)},
                   {"atoms", std::move(atoms)}};
  }
  if (doc.gamble) {
    nlohmann::json g = nlohmann::json::array();
    for (const auto& u : doc.gamble->utilities()) g.push_back(to_fraction_string(u));
    j["gamble"] = std::move(g);
  }
  return j.dump(2) + "\n";
}

}  // namespace credalkit
