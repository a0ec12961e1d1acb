// qhn: Harder-Narasimhan and Kempf filtrations of quiver representations
// over prime fields, plus the curve-side calculators.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qhn/io.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qhn::InvalidArgument("cannot open problem file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harder-Narasimhan and Kempf filtrations of quiver representations over F_p"};
  app.require_subcommand(1);

  std::string format = "text";
  std::uint64_t budget = qhn::EnumerationOptions{}.budget;
  bool heuristic_prune = false;
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", budget, "Maximum number of candidate subspace tuples to enumerate");
  app.add_flag("--timing", timing, "Append wall-clock timing to the report");

  std::string problem_path;
  auto add_problem_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("problem", problem_path, "Problem file (JSON)")->required();
    return sub;
  };
  add_problem_command("hn", "Harder-Narasimhan filtration with property check");
  auto* kempf = add_problem_command("kempf", "Kempf filtration, optimal weights and score");
  kempf->add_flag("--heuristic-prune", heuristic_prune,
                  "Only explore chains with strictly decreasing quotient slopes");
  add_problem_command("verify", "Compare the Kempf and Harder-Narasimhan filtrations");
  add_problem_command("semistable", "Semistability via slopes and via the numerical criterion");
  add_problem_command("enumerate", "List subrepresentation dimension vectors");

  std::string blocks;
  auto* p1 = app.add_subcommand("p1", "HN filtration of a split bundle on P^1");
  p1->add_option("--blocks", blocks, "degree:multiplicity list, degrees strictly decreasing, e.g. 2:1,0:1,-1:1")
      ->required();

  std::string candidates, tau = "1";
  long long deg_e = 0, s = 1;
  auto* rank2 = app.add_subcommand("rank2", "Best line subbundle of a rank 2 tensor from candidate (deg, eps) data");
  rank2->add_option("--candidates", candidates, "degL:epsL list, e.g. 1:0,0:2")->required();
  rank2->add_option("--deg-e", deg_e, "deg E")->required();
  rank2->add_option("--s", s, "tensor order s")->required();
  rank2->add_option("--tau", tau, "tau as p/q")->required();

  std::string v;
  auto* rank3 = app.add_subcommand("rank3", "Optimal weights of a rank 3 tensor filtration");
  rank3->add_option("--v", v, "v1,v2,v3 with v1+v2+v3 = 0")->required();
  rank3->add_option("--tau", tau, "tau as p/q")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qhn::io::kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const qhn::io::RunOptions options{budget, heuristic_prune};
    const std::string command = app.get_subcommands().front()->get_name();
    qhn::io::Outcome outcome;
    if (command == "p1") {
      outcome = qhn::io::cmd_p1(blocks);
    } else if (command == "rank2") {
      outcome = qhn::io::cmd_rank2(candidates, deg_e, s, tau);
    } else if (command == "rank3") {
      outcome = qhn::io::cmd_rank3(v, tau);
    } else {
      const qhn::io::Problem problem = qhn::io::parse_problem_text(read_file(problem_path));
      outcome = qhn::io::run_problem_command(command, problem, options);
    }
    if (timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      outcome.report["timing_ms"] =
          std::chrono::duration<double, std::milli>(elapsed).count();
    }
    if (format == "json") {
      std::cout << outcome.report.dump(2) << "\n";
    } else {
      std::cout << qhn::io::render_text(outcome.report);
      if (timing) std::cout << "time: " << outcome.report["timing_ms"].get<double>() << " ms\n";
    }
    return outcome.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qhn::io::exit_code_for(e);
  }
}
