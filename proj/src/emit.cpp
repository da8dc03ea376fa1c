#include "gk/emit.hpp"

#include <sstream>

namespace gk::emit {

using nlohmann::json;

std::string dot(const gkgraph::PrimeGraph& g) {
  std::ostringstream os;
  os << "graph gk {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    bool isolated = g.degree(i) == 0;
    if (isolated) {
      os << "  \"" << g.vertices[i] << "\";\n";
      continue;
    }
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      if (g.adjacent(i, j)) {
        os << "  \"" << g.vertices[i] << "\" -- \"" << g.vertices[j] << "\";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

namespace {

json int_value(i128 v) {
  if (v >= i128(INT64_MIN) && v <= i128(INT64_MAX)) {
    return json(std::int64_t(v));
  }
  return json(to_string_i128(v));  // beyond 64-bit: decimal string
}

}  // namespace

json to_json(const numtheory::FactoredInteger& f) {
  json factors = json::array();
  for (const auto& [p, e] : f.factors) {
    factors.push_back(json::array({int_value(p), e}));
  }
  return json{{"value", int_value(f.value)}, {"factors", factors}};
}

json to_json(const spectra::Spectrum& s) {
  return json{
      {"all_orders", s.all_orders},
      {"maxima", s.maxima},
      {"source", s.source == spectra::Source::enumerated ? "enumerated" : "closed-form"},
  };
}

json to_json(const gkgraph::PrimeGraph& g) {
  json edges = json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      if (g.adjacent(i, j)) {
        edges.push_back(json::array({g.vertices[i], g.vertices[j]}));
      }
    }
  }
  return json{{"vertices", g.vertices}, {"edges", edges}};
}

json to_json(const gkgraph::DegreePattern& d) {
  return json{{"primes", d.primes}, {"degrees", d.degrees}};
}

json to_json(const gkgraph::DegreePattern& d, const std::string& evidence) {
  json out = to_json(d);
  out["evidence"] = evidence;
  return out;
}

json to_json(const numtheory::DiophantineSolution& s) {
  const char* kind = "catalan";
  if (s.kind == numtheory::DiophantineSolution::Kind::nagell_exceptional) {
    kind = "nagell-exceptional";
  } else if (s.kind == numtheory::DiophantineSolution::Kind::nagell_pell) {
    kind = "nagell-pell";
  }
  return json{{"p", int_value(s.p)}, {"m", s.m},    {"q", int_value(s.q)},
              {"n", s.n},            {"sign", s.sign}, {"kind", kind}};
}

json to_json(const classify::CatalogEntry& row) {
  json out{
      {"family", row.family},
      {"parameter", row.parameter},
      {"primes", row.primes},
      {"degrees", row.degrees},
      {"evidence", row.evidence == classify::Evidence::enumerated ? "enumerated" : "formula"},
  };
  out["order"] = row.order ? to_json(*row.order) : json(nullptr);
  return out;
}

json to_json(const classify::ClassificationCase& c) {
  json params = json::object();
  for (const auto& [k, v] : c.parameters) params[k] = v;
  return json{{"label", classify::to_string(c.label)},
              {"parameters", params},
              {"evidence", c.evidence}};
}

json to_json(const classify::OutPglReport& r) {
  return json{{"n", r.n},
              {"deg3_psl", r.deg3_psl},
              {"deg3_pgl", r.deg3_pgl},
              {"deg3_sigma", r.deg3_sigma},
              {"pass", r.all_pass()}};
}

std::string catalog_lines(const std::vector<classify::CatalogEntry>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) os << to_json(row).dump() << "\n";
  return os.str();
}

std::string equation(const numtheory::DiophantineSolution& s) {
  std::ostringstream os;
  os << to_string_i128(s.p) << "^" << s.m << " - ";
  if (s.kind != numtheory::DiophantineSolution::Kind::catalan) os << "2*";
  os << to_string_i128(s.q) << "^" << s.n << " = " << (s.sign < 0 ? "-1" : "1");
  return os.str();
}

namespace {

std::string row_tag(const classify::CatalogEntry& r) {
  return r.family + "(" + std::to_string(r.parameter) + ")";
}

void render_collisions(std::ostringstream& os, const std::string& title,
                       const std::vector<classify::Collision>& list) {
  os << title << ": " << list.size() << "\n";
  for (const auto& c : list) {
    os << "  " << row_tag(c.a) << " ~ " << row_tag(c.b) << " at (";
    for (std::size_t i = 0; i < c.a.degrees.size(); ++i) {
      if (i) os << ",";
      os << c.a.degrees[i];
    }
    os << ")\n";
  }
}

}  // namespace

std::string render(const classify::CollisionReport& rep) {
  std::ostringstream os;
  os << "collision scan: k_max = " << rep.k_max << ", p_max = " << rep.p_max << "\n";
  render_collisions(os, "b5 cross-family collisions (must be empty)", rep.b5_violations);
  render_collisions(os, "b4 cross-family collisions (tuple-only findings)",
                    rep.b4_collisions);
  render_collisions(os, "(0,0,0) ambiguity class", rep.zero_tuple_class);
  os << "expected b4(n=2) ~ b1 collision found: "
     << (rep.expected_b4n2_b1_found ? "yes" : "no") << "\n";
  render_collisions(os, "same-family tuple repeats", rep.same_family_repeats);
  render_collisions(os, "n=2 informational", rep.k2_informational);
  return os.str();
}

}  // namespace gk::emit
