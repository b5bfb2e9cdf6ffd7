#include <cerrno>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "coxlab/error.hpp"
#include "coxlab/ideal_lattice.hpp"
#include "coxlab/partition.hpp"
#include "coxlab/poset.hpp"
#include "coxlab/rootsys.hpp"
#include "coxlab/verify.hpp"

namespace {

using namespace coxlab;

// exit codes
constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct VerifyFlags {
  std::size_t max_size = 1000;
  std::size_t order_cap = 20000;
  std::size_t k_max = 0;  // 0: default bound
  bool skip_exactness = false;
  bool json = false;
};

VerifyOptions to_options(const VerifyFlags& f) {
  VerifyOptions o;
  o.max_size = f.max_size;
  o.order_cap = f.order_cap;
  o.skip_exactness = f.skip_exactness;
  if (f.k_max) o.k_max = f.k_max;
  return o;
}

void add_verify_flags(CLI::App* cmd, VerifyFlags& f) {
  cmd->add_option("--max-size", f.max_size, "lattice size up to which the full invariant suite runs")
      ->capture_default_str();
  cmd->add_option("--order-cap", f.order_cap, "largest lattice whose order is computed")->capture_default_str();
  cmd->add_option("--k-max", f.k_max, "search bound for the order (default 4 * lattice size)");
  cmd->add_flag("--skip-exactness", f.skip_exactness, "skip the homology checks");
  cmd->add_flag("--json", f.json, "print the report as JSON");
}

int emit(const VerificationReport& r, bool json) {
  if (json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << to_text(r);
  return r.passed() ? kPass : kCheckFailed;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing: " + std::strerror(errno));
  out << text;
  out.close();
  if (!out) throw Error("write to " + path + " failed: " + std::strerror(errno));
}

char parse_type(const std::string& s) {
  if (s.size() != 1 || std::string("ABCDE").find(s[0]) == std::string::npos)
    throw InvalidArgument("root system type must be one of A, B, C, D, E, got '" + s + "'");
  return s[0];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter transformations of ideal lattices of grid and cominuscule posets"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);

  VerifyFlags grid_flags;
  int gm = 0, gn = 0;
  auto* vgrid = verify->add_subcommand("grid", "grid poset P_{m,n}");
  vgrid->add_option("--m", gm, "rows")->required()->check(CLI::PositiveNumber);
  vgrid->add_option("--n", gn, "columns")->required()->check(CLI::PositiveNumber);
  add_verify_flags(vgrid, grid_flags);

  VerifyFlags cm_flags;
  std::string ctype;
  int crank = 0, croot = 0;
  auto* vcm = verify->add_subcommand("cominuscule", "cominuscule poset of a root system");
  vcm->add_option("--type", ctype, "A, B, C, D or E")->required();
  vcm->add_option("--rank", crank, "rank")->required()->check(CLI::PositiveNumber);
  vcm->add_option("--root", croot, "simple root index, 1-based")->required()->check(CLI::PositiveNumber);
  add_verify_flags(vcm, cm_flags);

  // orbit
  int om = 0, on = 0;
  std::string alpha_text;
  bool orbit_json = false;
  auto* orbit = app.add_subcommand("orbit", "tau-orbit of an enhanced partition");
  orbit->add_option("--m", om, "rows")->required()->check(CLI::PositiveNumber);
  orbit->add_option("--n", on, "columns")->required()->check(CLI::PositiveNumber);
  orbit->add_option("--alpha", alpha_text, "enhanced partition, e.g. \"(|1,1,2,3,3|)\"")->required();
  orbit->add_flag("--json", orbit_json, "print JSON");

  // export
  auto* exp = app.add_subcommand("export", "write a DOT diagram or a JSON report");
  exp->require_subcommand(1);
  std::string format = "dot", out_path, which = "lattice";
  auto add_export_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
    cmd->add_option("--out", out_path, "output file")->required();
    cmd->add_option("--poset", which, "for dot: lattice, base or both")
        ->check(CLI::IsMember({"lattice", "base", "both"}))
        ->capture_default_str();
  };
  int em = 0, en = 0;
  auto* egrid = exp->add_subcommand("grid", "grid poset P_{m,n}");
  egrid->add_option("m", em, "rows")->required()->check(CLI::PositiveNumber);
  egrid->add_option("n", en, "columns")->required()->check(CLI::PositiveNumber);
  add_export_flags(egrid);
  std::string etype;
  int erank = 0, eroot = 0;
  auto* ecm = exp->add_subcommand("cominuscule", "cominuscule poset");
  ecm->add_option("type", etype, "A, B, C, D or E")->required();
  ecm->add_option("rank", erank, "rank")->required()->check(CLI::PositiveNumber);
  ecm->add_option("root", eroot, "simple root index")->required()->check(CLI::PositiveNumber);
  add_export_flags(ecm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help and version print and exit 0; every other parse failure is usage
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (vgrid->parsed()) return emit(verify_grid(gm, gn, to_options(grid_flags)), grid_flags.json);
    if (vcm->parsed())
      return emit(verify_cominuscule(parse_type(ctype), crank, croot, to_options(cm_flags)), cm_flags.json);

    if (orbit->parsed()) {
      const auto alpha = parse_enhanced(alpha_text, on);
      const auto trace = orbit_trace(om, on, alpha);
      if (orbit_json)
        std::cout << to_json(trace).dump(2) << "\n";
      else
        std::cout << to_text(trace);
      return trace.closes ? kPass : kCheckFailed;
    }

    if (egrid->parsed() || ecm->parsed()) {
      const bool is_grid = egrid->parsed();
      if (format == "json") {
        const auto r = is_grid ? verify_grid(em, en) : verify_cominuscule(parse_type(etype), erank, eroot);
        write_file(out_path, to_json(r).dump(2) + "\n");
        return r.passed() ? kPass : kCheckFailed;
      }
      Poset base = is_grid ? grid(em, en) : cominuscule_poset(build_root_system(parse_type(etype), erank), eroot).poset;
      std::string text;
      if (which != "lattice") text += to_dot(base, "base");
      if (which != "base") {
        const IdealLattice lattice(base);
        if (!text.empty()) text += "\n";
        text += to_dot(lattice.lattice(), "lattice");
      }
      write_file(out_path, text);
      return kPass;
    }
  } catch (const ParseError& e) {
    std::cerr << "coxlab: parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "coxlab: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "coxlab: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
