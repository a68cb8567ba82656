#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "galscaf/job.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::optional<std::int64_t> cap;
  std::optional<std::int64_t> seed;
  std::string format = "json";
  int threads = 1;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "job config file (JSON)")
      ->required();
  cmd->add_option("--cap", args.cap, "override the working precision cap");
  cmd->add_option("--seed", args.seed, "override the sampling seed");
  cmd->add_option("--format", args.format, "output format: json | text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--threads", args.threads, "threads for verification sweeps")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", args.out_path, "write the certificate to a file");
}

int run(const std::string& task, const CommonArgs& args) {
  std::ifstream in(args.config_path);
  if (!in) {
    std::cerr << "error: cannot open config " << args.config_path << "\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  try {
    galscaf::JobConfig cfg = galscaf::JobConfig::from_string(buf.str());
    if (cfg.task != task) {
      std::cerr << "error: config task \"" << cfg.task
                << "\" does not match subcommand \"" << task << "\"\n";
      return 1;
    }
    if (args.cap) cfg.cap = *args.cap;
    if (args.seed) cfg.seed = static_cast<std::uint64_t>(*args.seed);
    galscaf::RunOptions opts;
    opts.threads = args.threads;
    const nlohmann::json cert = galscaf::run_job(cfg, opts);
    const std::string payload = galscaf::emit_certificate(cert, args.format);
    if (!args.out_path.empty()) {
      std::ofstream out(args.out_path, std::ios::binary);
      out << payload;
    } else {
      std::cout << payload;
    }
    return 0;
  } catch (const galscaf::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const galscaf::PrecisionCeiling& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const galscaf::ImportedFactViolation& e) {
    std::cerr << "internal assertion: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact local-field computations: ramification data, diagrams, "
               "semistability certificates and scaffold verification"};
  app.require_subcommand(1);

  const char* tasks[] = {"analyze",         "diagram",   "scaffold-verify",
                         "scaffold-build",  "roundtrip", "falsify"};
  const char* descs[] = {
      "ramification breaks, different, index of inseparability, digit tables",
      "diagram and (semi)stability verdict for a given xi in K[G]",
      "certify the precision of a claimed scaffold",
      "build a scaffold from a semistable witness",
      "candidate scaffold -> witness -> rebuilt scaffold, with promotion",
      "search for a counterexample to the valuation-shift criterion"};

  CommonArgs args[6];
  for (int i = 0; i < 6; ++i) {
    CLI::App* cmd = app.add_subcommand(tasks[i], descs[i]);
    add_common(cmd, args[i]);
  }

  CLI11_PARSE(app, argc, argv);

  for (int i = 0; i < 6; ++i) {
    if (app.get_subcommand(static_cast<std::size_t>(i))->parsed())
      return run(tasks[i], args[i]);
  }
  std::cerr << "error: no subcommand\n";
  return 1;
}
