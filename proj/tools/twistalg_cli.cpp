// Command-line front end: present, verify, frobenius and oracle on a problem file.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "twistalg/problem_file.hpp"
#include "twistalg/report.hpp"

namespace {

using namespace twistalg;

struct Options {
  std::string file;
  std::string dot_path;
  std::string json_path;
  std::string level = "quick";
  std::string fault = "none";
  std::uint64_t seed = 0;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ValidationError, "cannot write " + path);
  out << content;
}

// Exit status 0 iff every verdict passed; otherwise the first failure is named.
int finish(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.passed) {
      std::cerr << "first failing check: " << c.name << " [" << to_string(c.code) << "]\n";
      return 1;
    }
  return 0;
}

ProblemSpec load(const Options& o) {
  ProblemSpec spec = load_problem(o.file);
  spec.seed = o.seed;
  return spec;
}

Pipeline build(const Options& o) {
  Pipeline pl = run_pipeline(load(o), parse_fault(o.fault));
  if (!pl.fault_applied)
    throw Error(Errc::ValidationError, "fault " + o.fault + " has nothing to act on in this problem");
  return pl;
}

int cmd_present(const Options& o) {
  const Pipeline pl = build(o);
  PresentationReport r{&pl, o.seed, verify_all(pl, Level::Quick, o.seed), std::nullopt};
  std::cout << report_text(r);
  if (!o.json_path.empty()) write_file(o.json_path, report_json(r));
  if (!o.dot_path.empty()) write_file(o.dot_path, quiver_dot(pl.q));
  return finish(r.verdicts);
}

int cmd_verify(const Options& o) {
  const Level level = o.level == "full" ? Level::Full : Level::Quick;
  const Pipeline pl = build(o);
  PresentationReport r{&pl, o.seed, verify_all(pl, level, o.seed), std::nullopt};
  std::cout << report_text(r);
  if (!o.json_path.empty()) write_file(o.json_path, report_json(r));
  return finish(r.verdicts);
}

int cmd_frobenius(const Options& o) {
  const Fault fault = parse_fault(o.fault);
  const Pipeline pl = build(o);
  FrobeniusSummary fs;
  fs.witness = build_twist_isomorphism(pl.in, pl.ta, fault);
  fs.checks = verify_twist(pl.in, pl.ta, fs.witness);
  PresentationReport r{&pl, o.seed, {}, fs};
  std::cout << report_text(r);
  if (!o.json_path.empty()) write_file(o.json_path, report_json(r));
  return finish(fs.checks);
}

int cmd_oracle(const Options& o) {
  const Pipeline pl = build(o);
  const OracleReport rep = run_oracle(pl);
  std::cout << oracle_text(rep);
  if (!o.json_path.empty()) write_file(o.json_path, oracle_json(rep));
  if (rep.passed()) return 0;
  for (const auto& c : rep.checks)
    if (c.asserted && !c.passed) std::cerr << "first failing check: " << c.name << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quiver presentations of twisted group algebras k_alpha(P x| L)"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> faults{"none", "q-perturbation", "drop-power", "corrupt-beta"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("FILE", o.file, "problem file")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", o.seed, "seed for randomized choices")->capture_default_str();
    sub->add_option("--inject-fault", o.fault, "test hook: break one ingredient on purpose")
        ->check(CLI::IsMember(faults))
        ->capture_default_str();
    sub->add_option("--json", o.json_path, "also write the report as JSON");
  };

  auto* present = app.add_subcommand("present", "compute and print the quiver presentation");
  add_common(present);
  present->add_option("--dot", o.dot_path, "write the quiver in Graphviz DOT");
  auto* verify = app.add_subcommand("verify", "check the presentation inside the twisted group algebra");
  add_common(verify);
  verify->add_option("--level", o.level, "quick samples the character checks, full runs all of them")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  auto* frob = app.add_subcommand("frobenius", "build and check the p^2 Frobenius twist isomorphism");
  add_common(frob);
  auto* oracle = app.add_subcommand("oracle", "independent structure-constant checks");
  add_common(oracle);

  CLI11_PARSE(app, argc, argv);
  try {
    if (present->parsed()) return cmd_present(o);
    if (verify->parsed()) return cmd_verify(o);
    if (frob->parsed()) return cmd_frobenius(o);
    return cmd_oracle(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
