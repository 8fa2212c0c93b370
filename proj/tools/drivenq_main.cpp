#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "drivenq/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"drivenq: driven-particle quantization scheme comparison"};
  std::string config_path;
  std::string out_dir;
  std::vector<std::string> schemes;
  bool strict = false;
  bool audit = false;
  bool no_extend = false;
  app.add_option("--config", config_path, "scenario JSON document")->check(CLI::ExistingFile);
  app.add_option("--out-dir", out_dir, "output directory (default $DRIVENQ_OUT_ROOT/drivenq_out)");
  app.add_option("--scheme", schemes, "hamiltonian, S1, S2 or S3; repeatable, replaces the config list");
  app.add_flag("--strict", strict, "run oracle and invariant checks, exit 3 on failure");
  app.add_flag("--audit", audit, "include the printed-vs-derived audit table");
  app.add_flag("--no-extend", no_extend, "abort instead of widening an insufficient grid");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? drivenq::kExitOk : drivenq::kExitConfig;
  }

  drivenq::ScenarioConfig config;
  try {
    std::string document;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "io error: cannot read " << config_path << '\n';
        return drivenq::kExitIo;
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      document = buf.str();
    }
    config = drivenq::parse_config(document);
    if (!schemes.empty()) {
      config.schemes.clear();
      for (const auto& s : schemes) {
        const auto id = drivenq::scheme_from_string(s);
        if (!config.has(id)) config.schemes.push_back(id);
      }
    }
    if (strict) config.strict = true;
  } catch (const drivenq::InvalidArgument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return drivenq::kExitConfig;
  }

  drivenq::RunOptions options;
  options.out_dir = out_dir;
  options.audit = audit;
  options.allow_grid_extension = !no_extend;
  const int status = drivenq::run_scenario(config, options, std::cerr);
  if (status == drivenq::kExitOk || status == drivenq::kExitStrictFailure)
    std::cout << drivenq::resolve_out_dir(options).string() << '\n';
  return status;
}
