// Command-line front end. Exit codes: 0 all checks pass, 1 validation failure,
// 2 input error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cx1/catalog.hpp"
#include "cx1/chardata.hpp"
#include "cx1/classify.hpp"
#include "cx1/errors.hpp"
#include "cx1/json_io.hpp"
#include "cx1/quasitoric.hpp"
#include "cx1/sponge.hpp"
#include "cx1/weights.hpp"

namespace {

using namespace cx1;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Outcome {
  std::string command;
  std::vector<std::string> inputs;
  Report report;
  Json output;  // optional payload (chardata, comparison, catalog entry)
  std::string text_output;  // extra text for --format text
};

std::string join_ints(const std::vector<std::size_t>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "]";
}

std::string join_integers(const std::vector<Integer>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].get_str();
  return s + "]";
}

void add_homology(Report& r, const SpongeComplex& s) {
  HomologyResult h = homology(s);
  std::string torsion;
  for (std::size_t d = 0; d < h.torsion.size(); ++d)
    if (!h.torsion[d].empty()) torsion += " H_" + std::to_string(d) + " torsion " + join_integers(h.torsion[d]);
  r.pass("homology", "betti " + join_ints(h.betti) + (torsion.empty() ? ", torsion-free" : torsion));
}

void check_stars(Report& r, const SpongeComplex& s) {
  bool ok = true;
  for (const auto& c : s.complex.cells()) {
    StarResult sr = face_star(s, c.id);
    if (!sr.isomorphic) {
      ok = false;
      r.fail("stars", "star of " + c.id + ": " + sr.reason);
    }
  }
  if (ok) r.pass("stars", "every star matches its local model");
}

Report chardata_report(const CharacteristicData& cd) {
  Report r = validate_sponge(cd.sponge);
  if (!r.ok()) return r;
  check_stars(r, cd.sponge);
  Report mu = validate_mu(cd);
  r.append(mu);
  if (!mu.ok()) return r;
  if (compatibility_check(cd)) r.pass("compatibility", "mu primitive and Euler signs in {+1,-1}");
  else r.fail("compatibility", "malformed mu or Euler signs");
  Report cocycle = cocycle_check(cd);
  r.append(cocycle);
  try {
    EulerCycle ec = assemble_euler_cycle(cd);
    std::string note = ec.determines_e_uniquely ? "; local data determine e" : "";
    if (ec.is_cycle) r.pass("euler-cycle", "sigma is a cycle" + note);
    else r.fail("euler-cycle", "sigma has nonzero boundary");
  } catch (const ValidationError& e) {
    r.fail("euler-cycle", e.what());
  }
  std::size_t types = orbit_types(cd).size();
  r.pass("orbit-types", std::to_string(types) + " orbit types including the free stratum");
  return r;
}

Outcome validate_weights(const std::string& path) {
  Outcome o{"validate-weights", {path}, {}, {}, {}};
  WeightSystem ws = weight_system_from_json(read_json_file(path));
  Report& r = o.report;
  r.pass("shape", std::to_string(ws.n) + " weights in Z^" + std::to_string(ws.n - 1));
  auto ct = cofactor_coefficients(ws);
  if (!is_general_position(ws)) {
    r.fail("general-position", "cofactors " + to_string(ct) + " include zero");
    return o;
  }
  r.pass("general-position", "cofactors " + to_string(ct));
  CramerCoefficients cc = cramer_coefficients(ws);
  r.pass("cramer", "c=" + to_string(cc.c) + ", gcd " + cc.c_gcd.get_str());
  bool strict = is_strictly_appropriate(ws);
  if (strict) r.pass("strictly-appropriate", "strict=true");
  else r.fail("strictly-appropriate", "strict=false, c=" + to_string(cc.c));
  for (std::size_t i = 0; i < ws.n; ++i) {
    StabilizerStructure st = stabilizer_structure(ws, {i});
    r.pass("stabilizer", "{" + std::to_string(i + 1) + "}: torus rank " + std::to_string(st.torus_rank) +
                             ", finite part " + join_integers(st.finite_orders));
  }
  return o;
}

Outcome validate_sponge_cmd(const std::string& path) {
  Outcome o{"validate-sponge", {path}, {}, {}, {}};
  SpongeComplex s = sponge_from_json(read_json_file(path));
  o.report = validate_sponge(s);
  if (o.report.ok()) {
    check_stars(o.report, s);
    add_homology(o.report, s);
  }
  return o;
}

Outcome validate_chardata_cmd(const std::string& path) {
  Outcome o{"validate-chardata", {path}, {}, {}, {}};
  o.report = chardata_report(chardata_from_json(read_json_file(path)));
  return o;
}

Outcome homology_cmd(const std::string& path) {
  Outcome o{"homology", {path}, {}, {}, {}};
  Json j = read_json_file(path);
  SpongeComplex s = j.contains("sponge") ? chardata_from_json(j).sponge : sponge_from_json(j);
  Report v = validate_sponge(s);
  for (const auto& f : v.findings())
    if (f.check == "incidence" || f.check == "boundary-squared") {
      if (f.passed) o.report.pass(f.check, f.detail);
      else o.report.fail(f.check, f.detail);
    }
  if (o.report.ok()) add_homology(o.report, s);
  return o;
}

Outcome reduce_cmd(const std::string& polytope, const std::string& lambda, const std::string& alpha,
                   const std::string& output) {
  Outcome o{"reduce", {polytope, lambda, alpha}, {}, {}, {}};
  SimplePolytope P = polytope_from_json(read_json_file(polytope));
  CharacteristicFunction l = lambda_from_json(read_json_file(lambda));
  Report pr = validate_polytope(P);
  o.report.append(pr);
  if (!pr.ok()) return o;
  Report star = validate_star(P, l);
  o.report.append(star);
  if (!star.ok()) return o;
  IntVector a = int_vector_from_csv(alpha);
  CharacteristicData cd = reduce(P, l, make_subtorus(a));
  o.report.append(chardata_report(cd));
  Json j = to_json(cd);
  if (!output.empty()) {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw InputError("cannot write " + output);
    out << dump_canonical(j);
    o.text_output = "characteristic data written to " + output + "\n";
  } else {
    o.output = j;
    o.text_output = dump_canonical(j);
  }
  return o;
}

Outcome compare_cmd(const std::string& a, const std::string& b) {
  Outcome o{"compare", {a, b}, {}, {}, {}};
  CharacteristicData cd1 = chardata_from_json(read_json_file(a));
  CharacteristicData cd2 = chardata_from_json(read_json_file(b));
  Comparison c = compare(cd1, cd2);
  o.output = to_json(c);
  const std::string detail = to_string(c.verdict) + (c.certificate.empty() ? "" : ": " + c.certificate) +
                             " (relative to cellular equivalence)";
  if (c.verdict == Verdict::equivalent) {
    o.report.pass("compare", detail);
    o.report.append(verify_witness(cd1, cd2, *c.witness));
  } else {
    o.report.fail("compare", detail);
  }
  return o;
}

Outcome catalog_cmd(const std::string& name, bool list, const std::string& export_path) {
  Outcome o{"catalog", {}, {}, {}, {}};
  if (list || name.empty()) {
    for (const auto& n : catalog_names()) o.text_output += n + "\n";
    o.output = catalog_names();
    o.report.pass("list", std::to_string(catalog_names().size()) + " built-in entries");
    return o;
  }
  o.inputs.push_back(name);
  CatalogEntry e = load(name);
  o.report = verify(e);
  if (!export_path.empty()) {
    std::ofstream out(export_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + export_path);
    out << dump_canonical(to_json(e));
  }
  return o;
}

void emit(const Outcome& o, const std::string& format, const std::string& report_path) {
  if (format == "json") {
    Json j;
    j["command"] = o.command;
    j["inputs"] = o.inputs;
    j["results"] = results_json(o.report);
    if (!o.output.is_null()) j["output"] = o.output;
    if (report_path.empty()) {
      std::cout << dump_canonical(j);
    } else {
      std::ofstream out(report_path, std::ios::binary);
      if (!out) throw InputError("cannot write " + report_path);
      out << dump_canonical(j);
    }
    return;
  }
  for (const auto& f : o.report.findings())
    std::cout << (f.passed ? "PASS " : "FAIL ") << f.check << ": " << f.detail << "\n";
  std::cout << o.command << ": " << o.report.findings().size() - o.report.failures() << " passed, "
            << o.report.failures() << " failed\n";
  std::cout << o.text_output;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complexity-one torus actions: weights, sponges, characteristic data"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string report_path;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--report", report_path, "Write the JSON report to this file instead of stdout");

  std::string file1, file2, polytope, lambda, alpha, output, name, export_path;
  bool list = false;

  auto* vw = app.add_subcommand("validate-weights", "Check a weight system");
  vw->add_option("weights", file1, "Weight system JSON")->required();
  auto* vs = app.add_subcommand("validate-sponge", "Check a sponge complex");
  vs->add_option("sponge", file1, "Sponge JSON")->required();
  auto* vc = app.add_subcommand("validate-chardata", "Check characteristic data");
  vc->add_option("chardata", file1, "Characteristic data JSON")->required();
  auto* rd = app.add_subcommand("reduce", "Restrict a quasitoric action to a subtorus");
  rd->add_option("--polytope", polytope, "Polytope JSON")->required();
  rd->add_option("--lambda", lambda, "Characteristic function JSON")->required();
  rd->add_option("--alpha", alpha, "Subtorus character, e.g. 1,1,-1")->required();
  rd->add_option("--output", output, "Write the characteristic data here");
  auto* cp = app.add_subcommand("compare", "Decide equivalence of two characteristic data files");
  cp->add_option("first", file1, "Characteristic data JSON")->required();
  cp->add_option("second", file2, "Characteristic data JSON")->required();
  auto* hm = app.add_subcommand("homology", "Integral homology of a sponge");
  hm->add_option("input", file1, "Sponge or characteristic data JSON")->required();
  auto* ct = app.add_subcommand("catalog", "Verify a built-in example");
  ct->add_option("name", name, "Entry name");
  ct->add_flag("--list", list, "List entry names");
  ct->add_option("--export", export_path, "Write the entry as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    Outcome o;
    if (*vw) o = validate_weights(file1);
    else if (*vs) o = validate_sponge_cmd(file1);
    else if (*vc) o = validate_chardata_cmd(file1);
    else if (*rd) o = reduce_cmd(polytope, lambda, alpha, output);
    else if (*cp) o = compare_cmd(file1, file2);
    else if (*hm) o = homology_cmd(file1);
    else o = catalog_cmd(name, list, export_path);
    emit(o, format, report_path);
    return o.report.ok() ? kPass : kFail;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const LookupError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DimensionMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kFail;
  }
}
