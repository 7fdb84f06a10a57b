// Command-line front end: load/save the JSON artifacts, run individual
// checks, and run the verification suite. Exit codes: 0 on success, 1 when a
// check fails, 2 on usage or I/O errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crdsa/bitop.hpp"
#include "crdsa/finalg.hpp"
#include "crdsa/fixtures.hpp"
#include "crdsa/json_io.hpp"
#include "crdsa/structure.hpp"
#include "crdsa/ternary.hpp"
#include "crdsa/verify.hpp"

namespace {

using crdsa::json;

// c3 | z3 | c2 | c4 | c3-nocore | c3pow:<n> | c2pow:<n>
crdsa::FiniteAlgebra fixture_algebra(const std::string& name) {
  if (name == "c3") return crdsa::make_c3();
  if (name == "z3") return crdsa::make_z3();
  if (name == "c2") return crdsa::make_c2_lattice();
  if (name == "c4") return crdsa::make_c4_double_p();
  if (name == "c3-nocore") return crdsa::make_c3_nocore();
  for (const std::string prefix : {"c3pow:", "c2pow:"}) {
    if (name.rfind(prefix, 0) == 0) {
      const int n = std::stoi(name.substr(prefix.size()));
      if (n < 1) throw std::invalid_argument("fixture power must be positive");
      return prefix[1] == '3' ? crdsa::make_c3_power(static_cast<std::size_t>(n))
                              : crdsa::make_c2_power(static_cast<std::size_t>(n));
    }
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

// prints to stdout or writes to out_path; returns the exit code
int emit(const json& j, const std::string& out_path) {
  const std::string text = crdsa::canonical_dump(j) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return 2;
  }
  return 0;
}

crdsa::FiniteAlgebra load_algebra(const std::string& fixture, const std::string& file) {
  if (!fixture.empty()) return fixture_algebra(fixture);
  if (!file.empty()) return crdsa::algebra_from_json(read_json_file(file));
  throw std::invalid_argument("either --fixture or --alg is required");
}

std::vector<std::string> element_names(const crdsa::FiniteAlgebra& a) {
  // chain powers get their word names; anything else falls back to indices
  int k = 0;
  for (int size = a.carrier_size(); size > 1 && size % 3 == 0; size /= 3) ++k;
  if (k > 0 && a.carrier_size() == static_cast<int>(crdsa::detail::pow_u64(3, static_cast<std::size_t>(k)))) {
    return crdsa::c3_power_names(static_cast<std::size_t>(k));
  }
  std::vector<std::string> names;
  for (int x = 0; x < a.carrier_size(); ++x) names.push_back(std::to_string(x));
  return names;
}

int run_subalgebras(int power, bool crdsa_only, const std::string& out_path) {
  std::vector<crdsa::SubalgebraInfo> subs;
  if (crdsa_only) {
    subs = crdsa::enumerate_crdsa_subalgebras(static_cast<std::size_t>(power));
  } else {
    auto algebra = crdsa::make_c3_power(static_cast<std::size_t>(power));
    for (const auto& elements : crdsa::enumerate_subalgebras(algebra)) {
      crdsa::SubalgebraInfo info;
      info.elements = elements;
      for (int e : elements) {
        info.words.push_back(
            crdsa::TernaryVector::from_index(static_cast<std::size_t>(power), static_cast<std::uint64_t>(e)).word());
      }
      for (std::size_t size = elements.size(); size > 1; size /= 3) ++info.iso_power;
      auto induced = crdsa::induced_subalgebra(algebra, elements);
      if (!crdsa::is_isomorphic(induced.algebra, crdsa::make_c3_power(static_cast<std::size_t>(std::max(info.iso_power, 1)))).isomorphic) {
        throw std::domain_error("subalgebra is not isomorphic to a chain power");
      }
      subs.push_back(std::move(info));
    }
  }
  return emit(crdsa::subalgebra_report_to_json(static_cast<std::size_t>(power), subs), out_path);
}

int run_primal(const std::string& fixture, const std::string& out_path) {
  crdsa::PrimalityReport report;
  if (fixture == "c3") {
    report = crdsa::check_primal(crdsa::make_c3(), crdsa::c3_malcev_term(), std::nullopt, true);
  } else if (fixture == "c3-nocore") {
    report = crdsa::check_primal(crdsa::make_c3_nocore(), crdsa::c3_malcev_term(), std::nullopt, true);
  } else if (fixture == "z3") {
    report = crdsa::check_primal(crdsa::make_z3(), crdsa::z3_malcev_term(), crdsa::z3_majority_term(), false);
  } else {
    throw std::invalid_argument("primal check supports fixtures c3, z3 and c3-nocore");
  }
  json witnesses = json::object();
  if (report.proper_subuniverse) witnesses["proper_subuniverse"] = *report.proper_subuniverse;
  if (report.automorphism_witness) witnesses["automorphism"] = *report.automorphism_witness;
  if (report.malcev_witness) witnesses["malcev_triple"] = *report.malcev_witness;
  const json j{{"fixture", fixture},
               {"conditions",
                json{{"no_proper_subalgebras", report.no_proper_subalgebras},
                     {"simple", report.simple},
                     {"rigid", report.rigid},
                     {"arithmetical", report.arithmetical()}}},
               {"primal", report.primal()},
               {"witnesses", witnesses}};
  const int code = emit(j, out_path);
  return code != 0 ? code : (report.primal() ? 0 : 1);
}

int run_validate(const std::string& fixture, const std::string& file, const std::string& out_path) {
  auto algebra = load_algebra(fixture, file);
  auto v       = crdsa::validate_crdsa(algebra);
  json j       = crdsa::validation_to_json(v);
  if (!fixture.empty()) j["fixture"] = fixture;
  const int code = emit(j, out_path);
  return code != 0 ? code : (v.pass ? 0 : 1);
}

int run_center(const std::string& fixture, const std::string& file, const std::string& out_path) {
  auto algebra = load_algebra(fixture, file);
  auto c       = crdsa::center(algebra);
  auto names   = element_names(algebra);
  json elems   = json::array();
  for (int e : c.elements) elems.push_back(names[static_cast<std::size_t>(e)]);
  const bool valid = crdsa::validate_boolean(c.algebra).pass;
  const json j{{"elements", elems}, {"size", c.elements.size()}, {"boolean_valid", valid}};
  const int code = emit(j, out_path);
  return code != 0 ? code : (valid ? 0 : 1);
}

int run_embed(int n, const std::string& elements, const std::string& out_path) {
  std::vector<std::uint32_t> masks;
  std::vector<std::string> words;
  std::stringstream ss(elements);
  std::string word;
  while (std::getline(ss, word, ',')) {
    if (word.empty()) continue;
    if (static_cast<int>(word.size()) != n) throw std::invalid_argument("element '" + word + "' has the wrong length");
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i) {
      if (word[static_cast<std::size_t>(i)] == '1') {
        mask |= 1u << i;
      } else if (word[static_cast<std::size_t>(i)] != '0') {
        throw std::invalid_argument("Boolean elements use only 0 and 1");
      }
    }
    masks.push_back(mask);
    words.push_back(word);
  }
  auto e = crdsa::boolean_center_embed(static_cast<std::size_t>(n), masks);
  json center_words = json::array();
  for (std::uint32_t mask : e.center_masks) {
    std::string w(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) w[static_cast<std::size_t>(i)] = '1';
    }
    center_words.push_back(w);
  }
  const bool valid = crdsa::validate_crdsa(e.algebra).pass;
  const json j{{"n", n},
               {"input", words},
               {"subalgebra", e.words},
               {"center", center_words},
               {"center_equals_input", e.center_equals_input},
               {"crdsa_valid", valid}};
  const int code = emit(j, out_path);
  return code != 0 ? code : (e.center_equals_input && valid ? 0 : 1);
}

int run_spectrum(const std::string& fixture, const std::string& file, const std::string& out_path) {
  auto algebra = load_algebra(fixture, file);
  auto spec    = crdsa::spectrum(algebra);
  return emit(crdsa::space_to_json(spec.space), out_path);
}

crdsa::BitopSpace load_space(const std::string& fixture, const std::string& file) {
  if (!fixture.empty()) return crdsa::spectrum(fixture_algebra(fixture)).space;
  if (!file.empty()) return crdsa::space_from_json(read_json_file(file));
  throw std::invalid_argument("either --fixture or --space is required");
}

int run_check_base(const std::string& fixture, const std::string& file, const std::string& out_path) {
  auto space = load_space(fixture, file);
  auto r     = crdsa::check_crdsa_base(space);
  json conditions = json::array();
  for (const auto& c : r.conditions) {
    conditions.push_back(json{{"pass", c.pass}, {"witness", crdsa::detail::set_family_to_json(c.witness, space.ground)}});
  }
  const json j{{"applicable", r.zero_dimensional},
               {"conditions", conditions},
               {"all_pass", r.all_pass},
               {"core_sets", crdsa::detail::set_family_to_json(r.core_sets, space.ground)},
               {"base", crdsa::detail::set_family_to_json(r.base_elements, space.ground)},
               {"base_algebra_valid", r.algebra_validation ? r.algebra_validation->pass : false}};
  const int code = emit(j, out_path);
  return code != 0 ? code : (r.zero_dimensional && r.all_pass ? 0 : 1);
}

int run_check_map(const std::string& space_x, const std::string& space_y, const std::string& map_file,
                  const std::string& out_path) {
  auto from = crdsa::space_from_json(read_json_file(space_x));
  auto to   = crdsa::space_from_json(read_json_file(space_y));
  auto f    = crdsa::point_map_from_json(read_json_file(map_file));
  auto r    = crdsa::check_morphism(f, from, to);
  const char* status = r.status == crdsa::MorphismStatus::evaluated        ? "evaluated"
                       : r.status == crdsa::MorphismStatus::not_bicontinuous ? "not-bicontinuous"
                                                                             : "base-not-crdsa";
  const json j{{"status", status},
               {"bd1_ok", r.bd1_ok},
               {"bd2_ok", r.bd2_ok},
               {"failing_condition", r.failing_condition},
               {"direct_ok", r.direct_ok},
               {"routes_agree", r.routes_agree},
               {"verdict", r.verdict}};
  const int code = emit(j, out_path);
  return code != 0 ? code : (r.status == crdsa::MorphismStatus::evaluated && r.verdict ? 0 : 1);
}

int run_verify(int max_n, const std::string& out_path) {
  auto report = crdsa::run_suite(max_n);
  for (const auto& c : report.checks) {
    std::cerr << (c.pass ? "pass" : "FAIL") << "  " << c.id << "\n";
  }
  const int code = emit(crdsa::report_to_json(report), out_path);
  return code != 0 ? code : (report.all_pass ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for core regular double Stone algebras"};
  app.set_version_flag("--version", crdsa::kToolVersion);
  app.require_subcommand(1);

  std::string out_path, fixture, alg_file, space_file, space_x, space_y, map_file, elements;
  int power = 1, embed_n = 1, max_n = 3;
  bool crdsa_only = false;

  auto* alg = app.add_subcommand("alg", "finite-algebra checks on the built-in fixtures");
  alg->require_subcommand(1);

  auto* subalgebras = alg->add_subcommand("subalgebras", "enumerate the subalgebras of C_3^n");
  subalgebras->add_option("--power", power, "n in C_3^n")->required()->check(CLI::Range(1, 4));
  subalgebras->add_flag("--crdsa-only", crdsa_only, "use the Boolean-subuniverse enumeration route");
  subalgebras->add_option("--out", out_path, "write the JSON report to a file");

  auto* primal = alg->add_subcommand("primal", "run the four-condition primality check");
  primal->add_option("--fixture", fixture, "c3, z3 or c3-nocore")->required();
  primal->add_option("--out", out_path, "write the JSON report to a file");

  auto* validate = alg->add_subcommand("validate", "check the CRDSA axioms");
  validate->add_option("--fixture", fixture, "built-in fixture name");
  validate->add_option("--alg", alg_file, "algebra JSON file");
  validate->add_option("--out", out_path, "write the JSON report to a file");

  auto* center_cmd = alg->add_subcommand("center", "compute the Boolean center");
  center_cmd->add_option("--fixture", fixture, "built-in fixture name");
  center_cmd->add_option("--alg", alg_file, "algebra JSON file");
  center_cmd->add_option("--out", out_path, "write the JSON report to a file");

  auto* embed = app.add_subcommand("embed", "embed a Boolean subuniverse of C_2^n as the center of a CRDSA");
  embed->add_option("--n", embed_n, "cube dimension")->required()->check(CLI::Range(1, 4));
  embed->add_option("--elements", elements, "comma-separated 0/1 words, e.g. 00,11")->required();
  embed->add_option("--out", out_path, "write the JSON report to a file");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "emit the prime-filter spectrum as a bitopological space");
  spectrum_cmd->add_option("--fixture", fixture, "built-in fixture name");
  spectrum_cmd->add_option("--alg", alg_file, "algebra JSON file");
  spectrum_cmd->add_option("--out", out_path, "write the JSON space to a file");

  auto* check_base = app.add_subcommand("check-base", "run the six-condition CRDSA base check");
  check_base->add_option("--space", space_file, "bitopological space JSON file");
  check_base->add_option("--fixture", fixture, "built-in fixture (its spectrum is checked)");
  check_base->add_option("--out", out_path, "write the JSON report to a file");

  auto* check_map = app.add_subcommand("check-map", "check the boundary conditions for a point map");
  check_map->add_option("--space-x", space_x, "source space JSON file")->required();
  check_map->add_option("--space-y", space_y, "target space JSON file")->required();
  check_map->add_option("--map", map_file, "point map JSON file")->required();
  check_map->add_option("--out", out_path, "write the JSON report to a file");

  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  verify->add_option("--max-n", max_n, "exhaustive range, 1 to 3")->check(CLI::Range(1, 3));
  verify->add_option("--out", out_path, "write the JSON report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (subalgebras->parsed()) return run_subalgebras(power, crdsa_only, out_path);
    if (primal->parsed()) return run_primal(fixture, out_path);
    if (validate->parsed()) return run_validate(fixture, alg_file, out_path);
    if (center_cmd->parsed()) return run_center(fixture, alg_file, out_path);
    if (embed->parsed()) return run_embed(embed_n, elements, out_path);
    if (spectrum_cmd->parsed()) return run_spectrum(fixture, alg_file, out_path);
    if (check_base->parsed()) return run_check_base(fixture, space_file, out_path);
    if (check_map->parsed()) return run_check_map(space_x, space_y, map_file, out_path);
    if (verify->parsed()) return run_verify(max_n, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
