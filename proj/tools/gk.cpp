// gk: construct finite groups, compute element-order spectra, prime
// graphs and degree patterns, run the bounded Diophantine scans, and
// drive the verification suite. Outputs are deterministic: identical
// arguments produce identical bytes.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "gk/classify.hpp"
#include "gk/emit.hpp"

using namespace gk;

namespace {

struct FamilyArgs {
  std::string family;
  std::uint64_t q = 0;
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::uint32_t copies = 1;
  std::uint64_t cap = kDefaultEnumCap;
};

void add_family_options(CLI::App* cmd, FamilyArgs& args) {
  cmd->add_option("--family", args.family,
                  "group family: psl2, pgl2, psl34, psigma, fro1, fro2, 2fro, pslext")
      ->required();
  cmd->add_option("--q", args.q, "field size (psl2, pgl2, psigma, pslext)");
  cmd->add_option("--n", args.n, "degree parameter (fro1)");
  cmd->add_option("--m", args.m, "degree parameter (fro2, 2fro)");
  cmd->add_option("--copies", args.copies, "module copies (pslext)");
  cmd->add_option("--cap", args.cap, "enumeration cap")->envname("GK_CAP");
}

std::uint64_t require_q(const FamilyArgs& a) {
  if (a.q == 0) throw DomainError("--q is required for family " + a.family);
  return a.q;
}

groups::GroupTable build_family(const FamilyArgs& a) {
  if (a.family == "psl2") return groups::psl2(require_q(a), a.cap);
  if (a.family == "pgl2") return groups::pgl2(require_q(a), a.cap);
  if (a.family == "psl34") return groups::psl3_4(a.cap);
  if (a.family == "psigma") return groups::psigma_l2(require_q(a), a.cap);
  if (a.family == "fro1") {
    if (a.n == 0) throw DomainError("--n is required for family fro1");
    return classify::build_infi_fro1(a.n, a.cap);
  }
  if (a.family == "fro2") {
    if (a.m == 0) throw DomainError("--m is required for family fro2");
    return classify::build_infi_fro2(a.m, a.cap);
  }
  if (a.family == "2fro") {
    if (a.m == 0) throw DomainError("--m is required for family 2fro");
    return classify::build_infi_2fro(a.m, a.cap).table;
  }
  if (a.family == "pslext") {
    return classify::build_infi_psl(a.copies, std::uint32_t(require_q(a)), a.cap);
  }
  throw DomainError("unknown family: " + a.family);
}

std::uint64_t closed_form_order(const FamilyArgs& a) {
  if (a.family == "psl2") {
    std::uint64_t q = require_q(a);
    return q * (q * q - 1) / (q % 2 == 0 ? 1 : 2);
  }
  if (a.family == "pgl2") {
    std::uint64_t q = require_q(a);
    return q * (q * q - 1);
  }
  return 0;  // no closed form wired for the other families
}

// Spectrum plus order for any family: enumerated when it fits the cap,
// closed-form for psl2/pgl2 beyond it.
struct SpectrumResult {
  spectra::Spectrum spectrum;
  numtheory::FactoredInteger order;
  std::string evidence;
};

SpectrumResult spectrum_for(const FamilyArgs& a) {
  std::uint64_t closed = closed_form_order(a);
  if (closed > 0 && closed > a.cap) {
    auto [p, k] = groups::prime_power(a.q);
    spectra::Family fam = a.family == "psl2" ? spectra::Family::psl2 : spectra::Family::pgl2;
    return {spectra::mu_closed_form(fam, p, k), spectra::order_closed_form(fam, a.q),
            "formula"};
  }
  groups::GroupTable t = build_family(a);
  return {spectra::spectrum_of(t), numtheory::factorize(i128(t.size())), "enumerated"};
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw DomainError("cannot open output file " + out_path);
  f << text;
}

std::string ensure_newline(std::string s) {
  if (s.empty() || s.back() != '\n') s.push_back('\n');
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group spectra, prime graphs, degree patterns"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  FamilyArgs spectrum_args, graph_args, pattern_args, construct_args, classify_args;
  std::string graph_format = "dot";
  std::string scan_format = "text";

  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "element-order spectrum");
  add_family_options(spectrum_cmd, spectrum_args);

  CLI::App* graph_cmd = app.add_subcommand("graph", "prime graph");
  add_family_options(graph_cmd, graph_args);
  graph_cmd->add_option("--format", graph_format, "dot or json");

  CLI::App* pattern_cmd = app.add_subcommand("pattern", "degree pattern");
  add_family_options(pattern_cmd, pattern_args);
  std::string pattern_format = "json";
  pattern_cmd->add_option("--format", pattern_format, "json");

  CLI::App* construct_cmd = app.add_subcommand("construct", "build a group, print a summary");
  add_family_options(construct_cmd, construct_args);

  CLI::App* classify_cmd = app.add_subcommand("classify", "classification case of a group");
  add_family_options(classify_cmd, classify_args);

  std::uint32_t pmax = 50, qmax = 50, mmax = 20, nmax = 20;
  CLI::App* catalan_cmd = app.add_subcommand("scan-catalan", "p^m - q^n = 1 scan");
  catalan_cmd->add_option("--pmax", pmax);
  catalan_cmd->add_option("--qmax", qmax);
  catalan_cmd->add_option("--mmax", mmax);
  catalan_cmd->add_option("--nmax", nmax);
  catalan_cmd->add_option("--format", scan_format, "text or json");

  std::uint32_t npmax = 250, nqmax = 20, nmmax = 10, nnmax = 10;
  CLI::App* nagell_cmd = app.add_subcommand("scan-nagell", "p^m - 2q^n = +-1 scan");
  nagell_cmd->add_option("--pmax", npmax);
  nagell_cmd->add_option("--qmax", nqmax);
  nagell_cmd->add_option("--mmax", nmmax);
  nagell_cmd->add_option("--nmax", nnmax);
  nagell_cmd->add_option("--format", scan_format, "text or json");

  std::uint64_t b3_bound = 1000000;
  CLI::App* b3_cmd = app.add_subcommand("search-b3", "primes with (p -+ 1)/2 a power of 3");
  b3_cmd->add_option("--bound", b3_bound);
  b3_cmd->add_option("--format", scan_format, "text or json");

  std::uint32_t kmax = 10;
  std::uint64_t cat_pmax = 100000;
  std::uint64_t enum_budget = 25000;
  std::uint32_t solvable_nmax = 10;
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "degree-pattern catalog (JSON lines)");
  catalog_cmd->add_option("--kmax", kmax);
  catalog_cmd->add_option("--pmax", cat_pmax);
  catalog_cmd->add_option("--enum-budget", enum_budget,
                          "enumerate rows with group order up to this bound");
  catalog_cmd->add_option("--solvable-nmax", solvable_nmax);

  std::uint32_t col_kmax = 10;
  std::uint64_t col_pmax = 100000;
  CLI::App* collide_cmd = app.add_subcommand("collide", "degree-tuple collision scan");
  collide_cmd->add_option("--kmax", col_kmax);
  collide_cmd->add_option("--pmax", col_pmax);

  std::string suite = "paper";
  std::uint64_t verify_cap = kDefaultEnumCap;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("--suite", suite, "suite name (paper)");
  verify_cmd->add_option("--cap", verify_cap, "enumeration cap")->envname("GK_CAP");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help() << std::flush;
    return 64;
  }

  try {
    if (spectrum_cmd->parsed()) {
      SpectrumResult r = spectrum_for(spectrum_args);
      nlohmann::json j = emit::to_json(r.spectrum);
      j["evidence"] = r.evidence;
      write_output(ensure_newline(j.dump()), out_path);
    } else if (graph_cmd->parsed()) {
      SpectrumResult r = spectrum_for(graph_args);
      gkgraph::PrimeGraph g = gkgraph::graph_from_spectrum(r.order, r.spectrum);
      if (graph_format == "dot") {
        write_output(emit::dot(g), out_path);
      } else if (graph_format == "json") {
        nlohmann::json j = emit::to_json(g);
        j["evidence"] = r.evidence;
        write_output(ensure_newline(j.dump()), out_path);
      } else {
        throw DomainError("graph supports --format dot or json");
      }
    } else if (pattern_cmd->parsed()) {
      if (pattern_format != "json") throw DomainError("pattern supports --format json");
      SpectrumResult r = spectrum_for(pattern_args);
      gkgraph::DegreePattern d =
          gkgraph::degree_pattern(gkgraph::graph_from_spectrum(r.order, r.spectrum));
      write_output(ensure_newline(emit::to_json(d, r.evidence).dump()), out_path);
    } else if (construct_cmd->parsed()) {
      groups::GroupTable t = build_family(construct_args);
      const char* kind = "";
      switch (t.ambient()->kind()) {
        case groups::ElemKind::projective_matrix: kind = "projective_matrix"; break;
        case groups::ElemKind::affine_map: kind = "affine_map"; break;
        case groups::ElemKind::matrix_field_aut: kind = "matrix_field_aut"; break;
        case groups::ElemKind::semidirect_pair: kind = "semidirect_pair"; break;
      }
      nlohmann::json j{{"family", construct_args.family},
                       {"order", t.size()},
                       {"element_kind", kind},
                       {"generators", t.generators().size()},
                       {"ambient", t.ambient()->describe()}};
      write_output(ensure_newline(j.dump()), out_path);
    } else if (classify_cmd->parsed()) {
      classify::ClassificationCase c = classify::classify_table(build_family(classify_args));
      write_output(ensure_newline(emit::to_json(c).dump()), out_path);
    } else if (catalan_cmd->parsed()) {
      auto sols = numtheory::scan_catalan(pmax, qmax, mmax, nmax);
      if (scan_format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& s : sols) j.push_back(emit::to_json(s));
        write_output(ensure_newline(j.dump()), out_path);
      } else {
        std::string text;
        for (const auto& s : sols) text += emit::equation(s) + "\n";
        write_output(text, out_path);
      }
    } else if (nagell_cmd->parsed()) {
      numtheory::NagellScan r = numtheory::scan_nagell(npmax, nqmax, nmmax, nnmax);
      if (scan_format == "json") {
        nlohmann::json j;
        j["exceptional"] = nlohmann::json::array();
        j["pell"] = nlohmann::json::array();
        for (const auto& s : r.exceptional) j["exceptional"].push_back(emit::to_json(s));
        for (const auto& s : r.pell) j["pell"].push_back(emit::to_json(s));
        write_output(ensure_newline(j.dump()), out_path);
      } else {
        std::string text;
        for (const auto& s : r.exceptional) text += "exceptional: " + emit::equation(s) + "\n";
        for (const auto& s : r.pell) text += "pell: " + emit::equation(s) + "\n";
        write_output(text, out_path);
      }
    } else if (b3_cmd->parsed()) {
      auto primes = numtheory::search_b3_primes(b3_bound);
      if (scan_format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& e : primes) {
          j.push_back(nlohmann::json{
              {"p", e.p},
              {"side", e.side == numtheory::B3Side::minus ? "minus" : "plus"},
              {"k", e.k}});
        }
        write_output(ensure_newline(j.dump()), out_path);
      } else {
        std::string text;
        for (const auto& e : primes) {
          text += std::to_string(e.p) + " (" +
                  (e.side == numtheory::B3Side::minus ? "(p-1)/2" : "(p+1)/2") + " = 3^" +
                  std::to_string(e.k) + ")\n";
        }
        write_output(text, out_path);
      }
    } else if (catalog_cmd->parsed()) {
      write_output(
          emit::catalog_lines(classify::catalog_patterns(kmax, cat_pmax, enum_budget,
                                                         solvable_nmax)),
          out_path);
    } else if (collide_cmd->parsed()) {
      write_output(emit::render(classify::collision_scan(col_kmax, col_pmax)), out_path);
    } else if (verify_cmd->parsed()) {
      if (suite != "paper") throw DomainError("unknown suite: " + suite);
      classify::SuiteReport rep = classify::verify_suite(verify_cap);
      write_output(rep.render(), out_path);
      return rep.has_fail() ? 2 : 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
