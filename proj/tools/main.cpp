#include <cstdio>
#include <iostream>

#include "CLI11.hpp"

#include "canonical_json.hpp"
#include "commands.hpp"
#include "problem.hpp"

namespace {

void add_problem_flags(CLI::App* cmd, cli::Options& o) {
  cmd->add_option("--file", o.file, "problem file (JSON)");
  cmd->add_option("--tol", o.tol, "tolerance, overrides options.tolerance");
  cmd->add_option("--variant", o.variant, "frame operator variant")
      ->check(CLI::IsMember({"literal", "jsa"}));
  cmd->add_option("--projection", o.projection,
                  "member projections used for bounds")
      ->check(CLI::IsMember({"ambient", "j-orthogonal"}));
}

nlohmann::json error_report(const std::string& command, const std::string& kind,
                            const std::string& where, const std::string& what) {
  return {{"tool", {{"name", "krein-frames"}, {"version", kf_version()}}},
          {"command", command},
          {"error", {{"kind", kind}, {"where", where}, {"message", what}}},
          {"diagnostics", nlohmann::json::array({where + ": " + what})}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for J-fusion frames in finite-dimensional Krein spaces",
               "krein-frames"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kf_version()));
  cli::Options o;

  auto* classify = app.add_subcommand("classify", "classify every subspace of a problem file");
  add_problem_flags(classify, o);

  auto* analyze = app.add_subcommand("analyze", "analyze the weighted family as a J-fusion frame");
  add_problem_flags(analyze, o);

  auto* check = app.add_subcommand("check", "run one theorem check");
  add_problem_flags(check, o);
  check->add_option("--which", o.which, "check to run")
      ->required()
      ->check(CLI::IsMember({"onb", "union", "sum", "identity", "bessel", "douglas", "dual"}));
  check->add_option("--subset", o.subset, "member indices for identity")->delimiter(',');
  check->add_option("--vector", o.vector, "test vector for identity")->delimiter(',');
  check->add_option("--trials", o.trials, "random identity trials");
  check->add_option("--seed", o.seed, "seed for random trials");
  check->add_option("--a", o.a_file, "operator file for douglas (a)");
  check->add_option("--b", o.b_file, "operator file for douglas (b)");

  auto* random = app.add_subcommand("random", "emit a random problem file");
  random->add_option("--signs", o.signs, "diagonal of J, e.g. 1,1,-1")->delimiter(',');
  random->add_option("--dimension", o.dimension, "must equal the number of signs");
  random->add_option("--members", o.members, "positive,negative member counts")
      ->delimiter(',')
      ->required();
  random->add_option("--dims", o.dims, "member dimensions, positives first")->delimiter(',');
  random->add_option("--seed", o.seed, "generator seed");
  random->add_option("--boost", o.boost, "largest rapidity of J-unitary boosts");
  random->add_option("--tol", o.tol, "tolerance written to the file");
  random->add_option("--variant", o.variant, "variant written to the file")
      ->check(CLI::IsMember({"literal", "jsa"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitInvalid;
  }
  o.subset_set = check->count("--subset") > 0;

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  try {
    cli::Outcome out;
    if (chosen == classify) out = cli::cmd_classify(o);
    else if (chosen == analyze) out = cli::cmd_analyze(o);
    else if (chosen == check) out = cli::cmd_check(o);
    else out = cli::cmd_random(o);
    std::cout << cli::canonical_dump(out.report);
    if (!out.summary.empty()) std::cerr << out.summary << "\n";
    return out.exit_code;
  } catch (const cli::InvalidInput& e) {
    std::cout << cli::canonical_dump(error_report(command, "invalid_input", e.where, e.what()));
    std::cerr << "krein-frames: " << e.where << ": " << e.what() << "\n";
    return cli::kExitInvalid;
  } catch (const cli::LibraryError& e) {
    // Failures inside the library on validated input are treated as invalid
    // input: the request could not be evaluated as posed.
    std::cout << cli::canonical_dump(
        error_report(command, kf_status_name(e.status), "library", e.what()));
    std::cerr << "krein-frames: " << e.what() << "\n";
    return cli::kExitInvalid;
  }
}
