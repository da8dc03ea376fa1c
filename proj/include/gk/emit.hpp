#pragma once

#include <string>

#include "json.hpp"

#include "gk/classify.hpp"
#include "gk/gkgraph.hpp"
#include "gk/numtheory.hpp"
#include "gk/spectra.hpp"

namespace gk::emit {

/// Undirected DOT with ascending vertices: each vertex emits its edges
/// to larger neighbors, isolated vertices emit a bare node statement.
std::string dot(const gkgraph::PrimeGraph& g);

nlohmann::json to_json(const numtheory::FactoredInteger& f);
nlohmann::json to_json(const spectra::Spectrum& s);
nlohmann::json to_json(const gkgraph::PrimeGraph& g);
nlohmann::json to_json(const gkgraph::DegreePattern& d);
nlohmann::json to_json(const gkgraph::DegreePattern& d, const std::string& evidence);
nlohmann::json to_json(const numtheory::DiophantineSolution& s);
nlohmann::json to_json(const classify::CatalogEntry& row);
nlohmann::json to_json(const classify::ClassificationCase& c);
nlohmann::json to_json(const classify::OutPglReport& r);

/// One CatalogEntry per line (JSON-lines).
std::string catalog_lines(const std::vector<classify::CatalogEntry>& rows);

std::string render(const classify::CollisionReport& rep);

/// Human-readable equation form, e.g. "3^2 - 2^3 = 1".
std::string equation(const numtheory::DiophantineSolution& s);

}  // namespace gk::emit
