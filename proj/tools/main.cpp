// Command-line front end for the rank-2 Littlewood-Richardson evaluator:
// piecewise evaluation, tableau oracle, chamber membership, the 144-element
// linear symmetry group with certificates, orbits, and bulk cross-checks.
//
// Exit codes: 0 success, 1 validation or certification failure, 2 usage.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lr3/chamber_complex.hpp"
#include "lr3/gl3_bridge.hpp"
#include "lr3/lift_verify.hpp"
#include "lr3/lr_oracle.hpp"
#include "lr3/ray_symmetries.hpp"

namespace {

using nlohmann::ordered_json;

constexpr const char* kSchema = "lr3/1";

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

ordered_json header(const char* command) {
  ordered_json doc;
  doc["schema"] = kSchema;
  doc["command"] = command;
  return doc;
}

std::string join_cycles(const lr3::RayPermutation& p) {
  const auto cycles = p.to_cycles();
  if (cycles.empty()) return "()";
  std::string s;
  for (const auto& c : cycles) s += c;
  return s;
}

void print_matrix(const lr3::LinearSymmetry& m) {
  for (const auto& row : m.a) {
    std::cout << "  [";
    for (lr3::Coord v : row) std::cout << " " << v;
    std::cout << " ]\n";
  }
}

int cmd_eval(const std::vector<long long>& lam, const std::vector<long long>& mu,
             const std::vector<long long>& nu, const std::string& format) {
  const lr3::ChamberComplex cc = lr3::load_complex();
  const lr3::LRPoint p{lam[0], lam[1], mu[0], mu[1], nu[0], nu[1]};
  const lr3::Coord balanced_nu3 = lr3::nu3(p);
  const bool weight_ok = nu[2] == balanced_nu3;
  const lr3::Coord value = weight_ok ? cc.evaluate_C(p) : 0;
  if (format == "json") {
    ordered_json doc = header("eval");
    doc["lambda"] = lam;
    doc["mu"] = mu;
    doc["nu"] = nu;
    doc["value"] = value;
    if (!weight_ok)
      doc["warning"] = "weight mismatch: |lambda| + |mu| != |nu|, nu3 should be " +
                       std::to_string(balanced_nu3);
    emit(doc);
  } else {
    if (!weight_ok)
      std::cerr << "warning: weight mismatch, |lambda| + |mu| != |nu| (nu3 should be "
                << balanced_nu3 << ")\n";
    std::cout << value << "\n";
  }
  return 0;
}

int cmd_oracle(const std::vector<long long>& lam, const std::vector<long long>& mu,
               const std::vector<long long>& nu, const std::string& format) {
  const lr3::Partition pl(lam), pm(mu), pn(nu);
  const long long value = lr3::lr_coefficient(pl, pm, pn);
  if (format == "json") {
    ordered_json doc = header("oracle");
    doc["lambda"] = pl.parts();
    doc["mu"] = pm.parts();
    doc["nu"] = pn.parts();
    doc["value"] = value;
    emit(doc);
  } else {
    std::cout << value << "\n";
  }
  return 0;
}

int cmd_chamber(const std::vector<long long>& coords, const std::string& format) {
  const lr3::ChamberComplex cc = lr3::load_complex();
  lr3::LRPoint p{};
  for (std::size_t i = 0; i < 6; ++i) p[i] = coords[i];
  const std::vector<std::string> ids = cc.chambers_containing(p);
  if (format == "json") {
    ordered_json doc = header("chamber");
    doc["point"] = p;
    doc["chambers"] = ids;
    emit(doc);
  } else {
    std::cout << ids.size() << " chambers\n";
    for (const std::string& id : ids) std::cout << id << "\n";
  }
  return 0;
}

int cmd_symmetries(const std::string& format) {
  const lr3::ChamberComplex cc = lr3::load_complex();
  lr3::SymmetryGroupReport rep;
  try {
    rep = lr3::full_symmetry_group(cc);
  } catch (const std::exception& e) {
    std::cerr << "certification failed: " << e.what() << "\n";
    return 1;
  }
  const lr3::KnownSymmetries known = lr3::known_symmetries();
  if (format == "json") {
    ordered_json doc = header("symmetries");
    doc["order"] = rep.order();
    doc["known_subgroup_order"] = rep.known_subgroup_order;
    doc["generated_by_known"] = rep.known_generate;
    doc["closed_under_product"] = rep.closed_under_product;
    doc["transitive"] = rep.transitive_on_chambers;
    auto orbit = ordered_json::array();
    for (int idx : rep.chamber_orbit) orbit.push_back(cc.chambers()[static_cast<std::size_t>(idx)].id);
    doc["chamber_orbit"] = std::move(orbit);
    doc["generators"]["S"] = lr3::matrix_to_json(known.S);
    doc["generators"]["T"] = lr3::matrix_to_json(known.T);
    doc["generators"]["U"] = lr3::matrix_to_json(known.U);
    doc["generators"]["X"] = lr3::matrix_to_json(known.X);
    auto elements = ordered_json::array();
    for (std::size_t i = 0; i < rep.order(); ++i) {
      ordered_json e = lr3::certificate_to_json(rep.certificates[i], cc);
      e["ray_permutation"] = lr3::permutation_to_json(rep.permutations[i]);
      elements.push_back(std::move(e));
    }
    doc["elements"] = std::move(elements);
    emit(doc);
  } else {
    std::size_t valid = 0;
    for (const auto& cert : rep.certificates) valid += cert.valid();
    std::cout << "order: " << rep.order() << "\n";
    std::cout << "certificates valid: " << valid << "/" << rep.order() << "\n";
    std::cout << "known subgroup order: " << rep.known_subgroup_order << "\n";
    std::cout << "generated by lifts of s, t, u, x: " << (rep.known_generate ? "yes" : "no")
              << "\n";
    std::cout << "closed under product: " << (rep.closed_under_product ? "yes" : "no") << "\n";
    std::cout << "transitive: " << (rep.transitive_on_chambers ? "yes" : "no") << " ("
              << rep.chamber_orbit.size() << "/" << lr3::ChamberComplex::kChamberCount << ")\n";
    std::cout << "chamber orbit of k1:";
    for (int idx : rep.chamber_orbit)
      std::cout << " " << cc.chambers()[static_cast<std::size_t>(idx)].id;
    std::cout << "\n";
    std::cout << "S =\n";
    print_matrix(known.S);
    std::cout << "T =\n";
    print_matrix(known.T);
    std::cout << "U =\n";
    print_matrix(known.U);
    std::cout << "X =\n";
    print_matrix(known.X);
    std::cout << "elements:\n";
    for (std::size_t i = 0; i < rep.order(); ++i) {
      const auto& cert = rep.certificates[i];
      std::size_t checks = 0;
      for (bool ok : cert.polynomial_checks) checks += ok;
      std::cout << "  " << (i + 1) << ": " << join_cycles(rep.permutations[i]) << " " << checks
                << "/18 " << (cert.valid() ? "valid" : "INVALID") << "\n";
    }
  }
  return 0;
}

int cmd_verify_map(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return 2;
  }
  ordered_json doc;
  lr3::LinearSymmetry f;
  try {
    in >> doc;
    f = lr3::matrix_from_json(doc);
  } catch (const std::exception& e) {
    std::cerr << "not a 6x6 integer matrix document: " << e.what() << "\n";
    return 2;
  }

  const lr3::ChamberComplex cc = lr3::load_complex();
  std::string reason;
  lr3::SymmetryCertificate cert;
  bool certified = false;
  try {
    cert = lr3::certify_symmetry(f, cc);
    certified = true;
    if (!cert.valid()) {
      reason = "polynomial identity fails on";
      for (const std::string& id : cert.failing_chambers(cc)) reason += " " + id;
    }
  } catch (const lr3::NotUnimodular& e) {
    reason = std::string("NotUnimodular: ") + e.what();
  } catch (const lr3::NotChamberMap& e) {
    reason = std::string("NotChamberMap: ") + e.what();
  }
  const bool valid = certified && cert.valid();

  if (format == "json") {
    ordered_json out = header("verify-map");
    out["matrix"] = lr3::matrix_to_json(f);
    out["valid"] = valid;
    if (valid) {
      out["certificate"] = lr3::certificate_to_json(cert, cc);
    } else {
      out["reason"] = reason;
    }
    emit(out);
  } else {
    if (valid) {
      std::cout << "valid: the map is a symmetry of C (18/18 polynomial identities)\n";
      std::cout << "chamber permutation:";
      for (int idx : cert.chamber_permutation)
        std::cout << " " << cc.chambers()[static_cast<std::size_t>(idx)].id;
      std::cout << "\n";
    } else {
      std::cout << "invalid: " << reason << "\n";
    }
  }
  return valid ? 0 : 1;
}

int cmd_orbit(const std::vector<long long>& coords, const std::string& format) {
  const lr3::ChamberComplex cc = lr3::load_complex();
  const lr3::SymmetryGroupReport rep = lr3::full_symmetry_group(cc);
  lr3::LRPoint p{};
  for (std::size_t i = 0; i < 6; ++i) p[i] = coords[i];
  const std::vector<lr3::LRPoint> orbit = lr3::orbit_of_triple(p, rep.elements);
  if (format == "json") {
    ordered_json doc = header("orbit");
    doc["point"] = p;
    doc["size"] = orbit.size();
    doc["orbit"] = orbit;
    emit(doc);
  } else {
    std::cout << "orbit size: " << orbit.size() << "\n";
    for (const lr3::LRPoint& q : orbit) {
      for (std::size_t i = 0; i < 6; ++i) std::cout << (i ? " " : "") << q[i];
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_cross_validate(long long bound, const std::string& format) {
  const lr3::ChamberComplex cc = lr3::load_complex();
  lr3::ChamberComplex::Report rep;
  try {
    rep = cc.cross_validate(bound);
  } catch (const lr3::ValidationFailure& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return 1;
  }
  if (format == "json") {
    ordered_json doc = header("cross-validate");
    doc["bound"] = bound;
    doc["points"] = rep.points_checked;
    doc["mismatches"] = rep.mismatches;
    emit(doc);
  } else {
    std::cout << rep.points_checked << " points, " << rep.mismatches << " mismatches\n";
  }
  return 0;
}

int cmd_check_gl3(long long bound, const std::string& format) {
  lr3::Gl3Report rep;
  try {
    rep = lr3::check_gl3_generator(bound);
  } catch (const lr3::ValidationFailure& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return 1;
  }
  if (format == "json") {
    ordered_json doc = header("check-gl3");
    doc["bound"] = bound;
    doc["triples"] = rep.triples_checked;
    doc["mismatches"] = rep.mismatches;
    emit(doc);
  } else {
    std::cout << rep.triples_checked << " triples, " << rep.mismatches << " mismatches\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact evaluator and symmetry certifier for the rank-2 "
      "Littlewood-Richardson function C on Z^6"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::vector<long long> lam2, mu2, nu3v;
  CLI::App* eval = app.add_subcommand(
      "eval", "evaluate C at a triple (lambda: 2 parts, mu: 2 parts, nu: 3 parts)");
  eval->add_option("lambda", lam2, "two parts of lambda")
      ->expected(2)
      ->allow_extra_args(false)
      ->required();
  eval->add_option("mu", mu2, "two parts of mu")
      ->expected(2)
      ->allow_extra_args(false)
      ->required();
  eval->add_option("nu", nu3v, "three parts of nu")->expected(3)->required();

  std::vector<long long> olam, omu, onu;
  CLI::App* oracle =
      app.add_subcommand("oracle", "count Littlewood-Richardson tableaux directly");
  oracle->add_option("--lam", olam, "parts of lambda (omit for the empty partition)");
  oracle->add_option("--mu", omu, "parts of mu");
  oracle->add_option("--nu", onu, "parts of nu");

  std::vector<long long> chamber_point;
  CLI::App* chamber =
      app.add_subcommand("chamber", "list the chambers whose closed cone contains a point");
  chamber->add_option("point", chamber_point, "six coordinates (l1 l2 m1 m2 n1 n2)")
      ->expected(6)
      ->required();

  CLI::App* symmetries = app.add_subcommand(
      "symmetries", "compute and certify the full linear symmetry group of C");

  std::string map_path;
  CLI::App* verify_map =
      app.add_subcommand("verify-map", "certify a 6x6 integer matrix as a symmetry of C");
  verify_map->add_option("file", map_path, "JSON file holding 6 rows of 6 integers")
      ->required();

  std::vector<long long> orbit_point;
  CLI::App* orbit = app.add_subcommand("orbit", "orbit of a point under the symmetry group");
  orbit->add_option("point", orbit_point, "six coordinates (l1 l2 m1 m2 n1 n2)")
      ->expected(6)
      ->required();

  long long cv_bound = 4;
  CLI::App* cross_validate = app.add_subcommand(
      "cross-validate", "compare the piecewise formulas against the tableau count on a box");
  cross_validate->add_option("--bound", cv_bound, "sweep [0,bound]^6")
      ->capture_default_str();

  long long gl3_bound = 3;
  CLI::App* check_gl3 = app.add_subcommand(
      "check-gl3", "property-check the extra 3-row symmetry generator against the oracle");
  check_gl3->add_option("--bound", gl3_bound, "sweep all 3-row partitions with parts <= bound")
      ->capture_default_str();

  for (CLI::App* sub : {eval, oracle, chamber, symmetries, verify_map, orbit, cross_validate,
                        check_gl3})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(eval)) return cmd_eval(lam2, mu2, nu3v, format);
    if (app.got_subcommand(oracle)) return cmd_oracle(olam, omu, onu, format);
    if (app.got_subcommand(chamber)) return cmd_chamber(chamber_point, format);
    if (app.got_subcommand(symmetries)) return cmd_symmetries(format);
    if (app.got_subcommand(verify_map)) return cmd_verify_map(map_path, format);
    if (app.got_subcommand(orbit)) return cmd_orbit(orbit_point, format);
    if (app.got_subcommand(cross_validate)) return cmd_cross_validate(cv_bound, format);
    if (app.got_subcommand(check_gl3)) return cmd_check_gl3(gl3_bound, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
