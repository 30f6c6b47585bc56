// plesken: build Plesken Lie algebras of finite groups, compute their
// second cohomology and covers, and check / lift / descend projective
// representations. Reports are a single JSON document on stdout; derived
// files are written beside the inputs unless --out-dir is given.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "plesken/cohomology.hpp"
#include "plesken/extension.hpp"
#include "plesken/group.hpp"
#include "plesken/lie_algebra.hpp"
#include "plesken/matrix_rep.hpp"
#include "plesken/plesken.hpp"
#include "plesken/representation.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace plesken;

namespace {

class StageTimer {
public:
  void start(const std::string& stage) {
    stage_ = stage;
    begin_ = std::chrono::steady_clock::now();
  }
  void stop() {
    const auto end = std::chrono::steady_clock::now();
    timings_[stage_] =
        std::chrono::duration_cast<std::chrono::microseconds>(end - begin_).count() / 1000.0;
  }
  json to_json() const { return timings_; }

private:
  std::string stage_;
  std::chrono::steady_clock::time_point begin_;
  json timings_ = json::object();
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot write file: " + path.string());
  out << content;
}

std::size_t max_order() {
  if (const char* env = std::getenv("PLESKEN_MAX_ORDER")) {
    const long v = std::atol(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 200;
}

void check_order_cap(const FiniteGroup& g) {
  const std::size_t cap = max_order();
  if (g.order() > cap)
    throw validation_error("group order " + std::to_string(g.order()) +
                           " exceeds PLESKEN_MAX_ORDER = " + std::to_string(cap));
}

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == ':' || c == ',' || c == '/' || c == '\\') c = '_';
  return s;
}

fs::path output_dir(const std::string& out_dir, const std::string& beside_file) {
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    return out_dir;
  }
  if (!beside_file.empty()) {
    const fs::path parent = fs::path(beside_file).parent_path();
    return parent.empty() ? fs::path(".") : parent;
  }
  return ".";
}

std::string stem_of(const std::string& file) { return fs::path(file).stem().string(); }

json algebra_summary(const LieAlgebra& l) {
  json r;
  r["dim"] = l.dim();
  r["abelian"] = l.is_abelian();
  r["center_dim"] = center(l).cols();
  r["derived_dim"] = derived_subalgebra(l).cols();
  r["killing_rank"] = rank(killing_form(l));
  return r;
}

struct RepCommand {
  std::string rep_file;
  std::string algebra_file;
  std::string extension_file;
  std::vector<std::string> catalog_files;
  std::string out_dir;
  std::size_t jobs = 1;
};

int run_build(const std::string& builtin_spec, const std::string& cayley_file,
              const std::string& matrep_file, const std::string& mode,
              const std::string& subgroup, const std::string& out_dir, std::string name) {
  StageTimer timer;
  json report;
  report["command"] = "build";
  json inputs;

  timer.start("parse");
  std::optional<FiniteGroup> group;
  std::optional<MatrixRepresentation> matrices;
  if (!builtin_spec.empty()) {
    inputs["builtin"] = builtin_spec;
    if (builtin_spec.rfind("heisenberg:", 0) == 0 && mode == "matrix") {
      const std::size_t prime = std::stoul(builtin_spec.substr(std::string("heisenberg:").size()));
      const auto sub = heisenberg_subgroups(prime);
      inputs["subgroup"] = subgroup;
      if (subgroup == "G")
        matrices = sub.G;
      else if (subgroup == "H")
        matrices = sub.H;
      else if (subgroup == "full" || subgroup.empty())
        matrices = sub.full;
      else
        throw validation_error("unknown --subgroup '" + subgroup + "' (expected G, H or full)");
      if (name.empty())
        name = sanitize(builtin_spec) + "_" + (subgroup.empty() ? "full" : subgroup);
    } else {
      group = FiniteGroup::builtin(builtin_spec);
      if (name.empty()) name = sanitize(builtin_spec);
    }
  } else if (!cayley_file.empty()) {
    inputs["cayley"] = cayley_file;
    group = parse_cayley(read_file(cayley_file), stem_of(cayley_file));
    if (name.empty()) name = stem_of(cayley_file);
  } else if (!matrep_file.empty()) {
    inputs["matrep"] = matrep_file;
    matrices = parse_matrep(read_file(matrep_file), stem_of(matrep_file));
    if (name.empty()) name = stem_of(matrep_file);
  } else {
    throw validation_error("build: one of --builtin, --cayley, --matrep is required");
  }
  inputs["mode"] = mode;
  timer.stop();

  timer.start("construct");
  AlgebraPtr algebra;
  json results;
  if (mode == "abstract") {
    if (!group) {
      if (!matrices) throw validation_error("build: no group source");
      group = *matrices->group; // abstract structure of a matrix source
    }
    check_order_cap(*group);
    const auto p = plesken_from_group(*group);
    algebra = p.algebra;
    results["group_order"] = group->order();
    results["involution_count"] = group->involution_count();
  } else if (mode == "matrix") {
    if (!matrices) throw validation_error("build: --mode matrix needs a matrix source");
    check_order_cap(*matrices->group);
    const auto p = plesken_from_matrices(*matrices);
    algebra = p.algebra;
    results["group_order"] = matrices->group->order();
    results["involution_count"] = matrices->group->involution_count();
    results["degree"] = matrices->degree;
  } else {
    throw validation_error("build: unknown --mode '" + mode + "'");
  }
  algebra->validate();
  results.update(algebra_summary(*algebra));
  timer.stop();

  timer.start("write");
  const fs::path dir = output_dir(out_dir, cayley_file.empty() ? matrep_file : cayley_file);
  const fs::path algebra_path = dir / (name + ".liealg");
  write_file(algebra_path, render_liealg(*algebra));
  results["files"] = {{"algebra", algebra_path.string()}};
  timer.stop();

  report["inputs"] = inputs;
  report["results"] = results;
  report["timing_ms"] = timer.to_json();
  std::cout << report.dump(2) << "\n";
  return 0;
}

int run_cohomology(const std::string& algebra_file, const std::string& out_dir) {
  StageTimer timer;
  json report;
  report["command"] = "cohomology";
  report["inputs"] = {{"algebra", algebra_file}};

  timer.start("parse");
  const auto algebra = make_algebra(parse_liealg(read_file(algebra_file)));
  timer.stop();

  timer.start("compute");
  const auto basis = h2(algebra);
  timer.stop();

  timer.start("write");
  const fs::path dir = output_dir(out_dir, algebra_file);
  const std::string stem = stem_of(algebra_file);
  json files = json::array();
  for (std::size_t t = 0; t < basis.representatives.size(); ++t) {
    const fs::path path = dir / (stem + ".h2_" + std::to_string(t) + ".cocycle");
    write_file(path, render_cocycle(basis.representatives[t]));
    files.push_back(path.string());
  }
  timer.stop();

  report["results"] = {{"dim", algebra->dim()},
                       {"z2_dim", basis.z2_dim},
                       {"b2_dim", basis.b2_dim},
                       {"h2_dim", basis.h2_dim},
                       {"files", {{"representatives", files}}}};
  report["timing_ms"] = timer.to_json();
  std::cout << report.dump(2) << "\n";
  return 0;
}

int run_cover(const std::string& algebra_file, const std::string& out_dir) {
  StageTimer timer;
  json report;
  report["command"] = "cover";
  report["inputs"] = {{"algebra", algebra_file}};

  timer.start("parse");
  const auto algebra = make_algebra(parse_liealg(read_file(algebra_file)));
  timer.stop();

  timer.start("compute");
  const auto cover = build_cover(algebra);
  const std::size_t n = algebra->dim();
  timer.stop();

  timer.start("write");
  const fs::path dir = output_dir(out_dir, algebra_file);
  const fs::path path = dir / (stem_of(algebra_file) + ".cover.ext");
  write_file(path, render_extension(cover.extension));
  timer.stop();

  report["results"] = {{"base_dim", n},
                       {"h2_dim", cover.multiplier.h2_dim},
                       {"kernel_dim", cover.extension.kernel_dim()},
                       {"total_dim", cover.extension.total->dim()},
                       {"kernel_in_derived", true},
                       {"lemma_bound", n * (n + 1) / 2},
                       {"bound_satisfied", cover.extension.total->dim() <= n * (n + 1) / 2},
                       {"bound_saturated", cover.extension.total->dim() == n * (n + 1) / 2},
                       {"files", {{"extension", path.string()}}}};
  report["timing_ms"] = timer.to_json();
  std::cout << report.dump(2) << "\n";
  return 0;
}

json rational_vector(const std::vector<Rat>& v) {
  json r = json::array();
  for (const Rat& x : v) r.push_back(format_rational(x));
  return r;
}

int run_rep_check(const RepCommand& cmd) {
  StageTimer timer;
  json report;
  report["command"] = "rep check";
  report["inputs"] = {{"rep", cmd.rep_file}, {"algebra", cmd.algebra_file}};

  timer.start("parse");
  const auto algebra = make_algebra(parse_liealg(read_file(cmd.algebra_file)));
  const auto parsed = parse_rep(read_file(cmd.rep_file), algebra);
  timer.stop();

  timer.start("check");
  json results;
  int exit_code = 0;
  try {
    if (parsed.mu)
      ProjectiveRep::make(algebra, parsed.images, *parsed.mu);
    else
      LinearRep::make(algebra, parsed.images);
    results["pass"] = true;
    results["kind"] = parsed.mu ? "projective" : "linear";
  } catch (const validation_error& e) {
    results["pass"] = false;
    results["error"] = e.what();
    exit_code = 2;
  }
  timer.stop();

  report["results"] = results;
  report["timing_ms"] = timer.to_json();
  std::cout << report.dump(2) << "\n";
  return exit_code;
}

int run_rep_extract(const RepCommand& cmd) {
  StageTimer timer;
  json report;
  report["command"] = "rep extract";
  report["inputs"] = {{"rep", cmd.rep_file}, {"algebra", cmd.algebra_file}};

  timer.start("parse");
  const auto algebra = make_algebra(parse_liealg(read_file(cmd.algebra_file)));
  const auto parsed = parse_rep(read_file(cmd.rep_file), algebra);
  timer.stop();

  timer.start("compute");
  const auto rep = extract_cocycle(algebra, parsed.images);
  timer.stop();

  timer.start("write");
  const fs::path dir = output_dir(cmd.out_dir, cmd.rep_file);
  const fs::path path = dir / (stem_of(cmd.rep_file) + ".mu.cocycle");
  write_file(path, render_cocycle(rep.mu));
  timer.stop();

  report["results"] = {{"degree", rep.degree},
                       {"mu_is_zero", rep.mu.is_zero()},
                       {"files", {{"mu", path.string()}}}};
  report["timing_ms"] = timer.to_json();
  std::cout << report.dump(2) << "\n";
  return 0;
}

int run_rep_linearize(const RepCommand& cmd) {
  StageTimer timer;
  json report;
  report["command"] = "rep linearize";
  report["inputs"] = {{"rep", cmd.rep_file}, {"algebra", cmd.algebra_file}};

  timer.start("parse");
  const auto algebra = make_algebra(parse_liealg(read_file(cmd.algebra_file)));
  const auto parsed = parse_rep(read_file(cmd.rep_file), algebra);
  timer.stop();

  timer.start("compute");
  const ProjectiveRep rep = parsed.mu ? ProjectiveRep::make(algebra, parsed.images, *parsed.mu)
                                      : extract_cocycle(algebra, parsed.images);
  const LinearRep linear = linearize(rep);
  timer.stop();

  timer.start("write");
  const fs::path dir = output_dir(cmd.out_dir, cmd.rep_file);
  const fs::path path = dir / (stem_of(cmd.rep_file) + ".linear.rep");
  write_file(path, render_rep(linear));
  timer.stop();

  report["results"] = {{"degree", linear.degree},
                       {"pass", validate_linear(*algebra, linear.images).ok},
                       {"files", {{"linear", path.string()}}}};
  report["timing_ms"] = timer.to_json();
  std::cout << report.dump(2) << "\n";
  return 0;
}

int run_rep_irreducible(const RepCommand& cmd) {
  StageTimer timer;
  json report;
  report["command"] = "rep irreducible";
  report["inputs"] = {{"rep", cmd.rep_file}, {"algebra", cmd.algebra_file}};

  timer.start("parse");
  const auto algebra = make_algebra(parse_liealg(read_file(cmd.algebra_file)));
  const auto parsed = parse_rep(read_file(cmd.rep_file), algebra);
  timer.stop();

  timer.start("compute");
  const std::size_t degree = parsed.images.empty() ? 1 : parsed.images.front().rows();
  const auto cert = irreducible(algebra, parsed.images, degree);
  timer.stop();

  report["results"] = {{"degree", degree},
                       {"irreducible", cert.irreducible},
                       {"spin_dim", cert.spin_dim},
                       {"commutant_dim", cert.commutant_dim}};
  report["timing_ms"] = timer.to_json();
  std::cout << report.dump(2) << "\n";
  return 0;
}

int run_rep_lift(const RepCommand& cmd) {
  StageTimer timer;
  json report;
  report["command"] = "rep lift";
  report["inputs"] = {{"rep", cmd.rep_file}, {"extension", cmd.extension_file}};

  timer.start("parse");
  const auto extension = parse_extension(read_file(cmd.extension_file));
  const auto parsed = parse_rep(read_file(cmd.rep_file), extension.base);
  timer.stop();

  timer.start("compute");
  const ProjectiveRep rep = parsed.mu
                                ? ProjectiveRep::make(extension.base, parsed.images, *parsed.mu)
                                : extract_cocycle(extension.base, parsed.images);
  const auto cover = cover_from_extension(extension, h2(extension.base));
  const auto lifted = lift_to_cover(rep, cover);
  timer.stop();

  timer.start("write");
  const fs::path dir = output_dir(cmd.out_dir, cmd.rep_file);
  const fs::path path = dir / (stem_of(cmd.rep_file) + ".lift.rep");
  write_file(path, render_rep(lifted.gamma));
  timer.stop();

  report["results"] = {{"degree", lifted.gamma.degree},
                       {"total_dim", lifted.gamma.algebra->dim()},
                       {"chi", rational_vector(lifted.chi)},
                       {"shift", rational_vector(lifted.applied_shift.values())},
                       {"files", {{"lift", path.string()}}}};
  report["timing_ms"] = timer.to_json();
  std::cout << report.dump(2) << "\n";
  return 0;
}

int run_rep_descend(const RepCommand& cmd) {
  StageTimer timer;
  json report;
  report["command"] = "rep descend";
  report["inputs"] = {{"rep", cmd.rep_file}, {"extension", cmd.extension_file}};

  timer.start("parse");
  const auto extension = parse_extension(read_file(cmd.extension_file));
  const auto parsed = parse_rep(read_file(cmd.rep_file), extension.total);
  timer.stop();

  timer.start("compute");
  const auto gamma = LinearRep::make(extension.total, parsed.images);
  const auto descent = descend_from_cover(gamma, extension);
  const auto coords = class_coordinates(descent.rep.mu, h2(extension.base));
  timer.stop();

  timer.start("write");
  const fs::path dir = output_dir(cmd.out_dir, cmd.rep_file);
  const fs::path path = dir / (stem_of(cmd.rep_file) + ".descend.rep");
  write_file(path, render_rep(descent.rep));
  timer.stop();

  report["results"] = {{"degree", descent.rep.degree},
                       {"base_dim", extension.base->dim()},
                       {"chi", rational_vector(descent.chi)},
                       {"mu_class", rational_vector(coords)},
                       {"files", {{"descend", path.string()}}}};
  report["timing_ms"] = timer.to_json();
  std::cout << report.dump(2) << "\n";
  return 0;
}

int run_rep_bijection(const RepCommand& cmd) {
  StageTimer timer;
  json report;
  report["command"] = "rep bijection";
  json inputs;
  inputs["extension"] = cmd.extension_file;
  inputs["catalog"] = cmd.catalog_files;
  report["inputs"] = inputs;

  timer.start("parse");
  const auto extension = parse_extension(read_file(cmd.extension_file));
  std::vector<LinearRep> catalog;
  for (const auto& file : cmd.catalog_files) {
    const auto parsed = parse_rep(read_file(file), extension.total);
    catalog.push_back(LinearRep::make(extension.total, parsed.images));
  }
  timer.stop();

  timer.start("compute");
  const auto cover = cover_from_extension(extension, h2(extension.base));
  const auto result = irr_bijection_check(cover, catalog, cmd.jobs);
  timer.stop();

  json entries = json::array();
  for (const auto& entry : result.entries) {
    entries.push_back({{"index", entry.index},
                       {"degree", entry.degree},
                       {"mu_class", rational_vector(entry.mu_class)},
                       {"mu_is_coboundary", entry.mu_is_coboundary},
                       {"descended_irreducible", entry.descended_irreducible},
                       {"matched_catalog_index", entry.matched_catalog_index},
                       {"lift_equivalent", entry.lift_equivalent}});
  }
  json collisions = json::array();
  for (const auto& group : result.class_collisions) collisions.push_back(group);
  report["results"] = {{"h2_dim", cover.multiplier.h2_dim},
                       {"entries", entries},
                       {"class_collisions", collisions},
                       {"all_descents_coboundary", result.all_descents_coboundary},
                       {"notes", result.notes}};
  report["timing_ms"] = timer.to_json();
  std::cout << report.dump(2) << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plesken Lie algebras: construction, cohomology, covers and "
               "projective representations over exact rationals"};
  app.require_subcommand(1);

  // build
  std::string builtin_spec, cayley_file, matrep_file, mode = "abstract", subgroup, name;
  std::string out_dir;
  auto* build = app.add_subcommand("build", "construct a Plesken Lie algebra from a group");
  auto* opt_builtin = build->add_option("--builtin", builtin_spec,
                                        "builtin family, e.g. cyclic:6, dihedral:4, symmetric:4, "
                                        "quaternion8, heisenberg:3, elementary-abelian:3,2");
  auto* opt_cayley = build->add_option("--cayley", cayley_file, "cayley v1 table file");
  auto* opt_matrep = build->add_option("--matrep", matrep_file, "matrep v1 matrix images file");
  opt_builtin->excludes(opt_cayley)->excludes(opt_matrep);
  opt_cayley->excludes(opt_matrep);
  build->add_option("--mode", mode, "abstract (group algebra span) or matrix (image span)")
      ->check(CLI::IsMember({"abstract", "matrix"}));
  build->add_option("--subgroup", subgroup, "heisenberg matrix source: G, H or full");
  build->add_option("--name", name, "output file stem");
  build->add_option("--out-dir", out_dir, "output directory");

  // cohomology
  std::string algebra_file;
  auto* cohomology_cmd =
      app.add_subcommand("cohomology", "second cohomology of an algebra with trivial coefficients");
  cohomology_cmd->add_option("algebra", algebra_file, "liealg v1 file")->required();
  cohomology_cmd->add_option("--out-dir", out_dir, "output directory");

  // cover
  auto* cover_cmd = app.add_subcommand("cover", "canonical cover of an algebra");
  cover_cmd->add_option("algebra", algebra_file, "liealg v1 file")->required();
  cover_cmd->add_option("--out-dir", out_dir, "output directory");

  // rep
  RepCommand rep_cmd;
  auto* rep = app.add_subcommand("rep", "representation operations");
  rep->require_subcommand(1);
  const auto add_rep_common = [&](CLI::App* sub, bool needs_algebra, bool needs_extension) {
    sub->add_option("--rep", rep_cmd.rep_file, "rep v1 file")->required();
    if (needs_algebra)
      sub->add_option("--algebra", rep_cmd.algebra_file, "liealg v1 file")->required();
    if (needs_extension)
      sub->add_option("--extension", rep_cmd.extension_file, "extension dump file")->required();
    sub->add_option("--out-dir", rep_cmd.out_dir, "output directory");
  };
  auto* rep_check = rep->add_subcommand("check", "validate a representation file");
  add_rep_common(rep_check, true, false);
  auto* rep_extract = rep->add_subcommand("extract", "extract the cocycle of candidate images");
  add_rep_common(rep_extract, true, false);
  auto* rep_linearize = rep->add_subcommand("linearize", "shift a projective rep to a linear one");
  add_rep_common(rep_linearize, true, false);
  auto* rep_irred = rep->add_subcommand("irreducible", "Burnside irreducibility certificate");
  add_rep_common(rep_irred, true, false);
  auto* rep_lift = rep->add_subcommand("lift", "lift a projective rep through a cover");
  add_rep_common(rep_lift, false, true);
  auto* rep_descend = rep->add_subcommand("descend", "descend a linear rep of the total algebra");
  add_rep_common(rep_descend, false, true);
  auto* rep_bijection =
      rep->add_subcommand("bijection", "descent/lift round trip over a catalog of irreducibles");
  rep_bijection->add_option("--extension", rep_cmd.extension_file, "extension dump file")
      ->required();
  rep_bijection->add_option("--catalog", rep_cmd.catalog_files, "rep v1 files over the total")
      ->required()
      ->expected(-1);
  rep_bijection->add_option("--jobs", rep_cmd.jobs, "parallel workers for catalog entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (build->parsed())
      return run_build(builtin_spec, cayley_file, matrep_file, mode, subgroup, out_dir, name);
    if (cohomology_cmd->parsed()) return run_cohomology(algebra_file, out_dir);
    if (cover_cmd->parsed()) return run_cover(algebra_file, out_dir);
    if (rep->parsed()) {
      rep_cmd.out_dir = rep_cmd.out_dir.empty() ? out_dir : rep_cmd.out_dir;
      if (rep_check->parsed()) return run_rep_check(rep_cmd);
      if (rep_extract->parsed()) return run_rep_extract(rep_cmd);
      if (rep_linearize->parsed()) return run_rep_linearize(rep_cmd);
      if (rep_irred->parsed()) return run_rep_irreducible(rep_cmd);
      if (rep_lift->parsed()) return run_rep_lift(rep_cmd);
      if (rep_descend->parsed()) return run_rep_descend(rep_cmd);
      if (rep_bijection->parsed()) return run_rep_bijection(rep_cmd);
    }
    std::cerr << "no subcommand\n";
    return 3;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
