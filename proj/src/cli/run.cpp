#include <exception>
#include <ostream>

#include "CLI11.hpp"
#include "embedkit/cli.hpp"
#include "embedkit/errors.hpp"

namespace embedkit::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-dual embeddings of complete graphs and their surface codes", "embedkit"};
  app.require_subcommand(1);

  CommandOptions options;
  std::string format = "text";
  std::string out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", options.cap, "Largest weight searched for the minimum distance (0 = skip)");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", options.budget, "Maximum rotation systems examined by the search");
  };

  std::string spec;
  std::string map_path;
  std::string hx_path;
  std::string hz_path;
  int r = 0;
  int s = 0;

  auto* generate = app.add_subcommand("generate", "Generate a family member's rotation system");
  generate->add_option("spec", spec, "class1:r=<int> | class2:s=<int> | class3:r=<int>,s=<int> | class4:r=<int>,s=<int>")
      ->required();
  generate->add_option("--out", out_path, "Rotation-system output file");
  add_cap(generate);
  add_budget(generate);
  add_common(generate);

  auto* verify = app.add_subcommand("verify", "Trace a rotation-system file and check the embedding and code");
  verify->add_option("map", map_path, "Rotation-system file")->required();
  add_cap(verify);
  add_common(verify);

  auto* code = app.add_subcommand("code", "Write H_X, H_Z and the parameter line for a map");
  code->add_option("map", map_path, "Rotation-system file")->required();
  code->add_option("--out", out_path, "Output prefix")->required();
  add_cap(code);
  add_common(code);

  auto* distance = app.add_subcommand("distance", "Minimum distance of a CSS code given as two matrix files");
  distance->add_option("hx", hx_path, "H_X matrix file")->required();
  distance->add_option("hz", hz_path, "H_Z matrix file")->required();
  add_cap(distance);
  add_common(distance);

  auto* params = app.add_subcommand("params", "Predicted [[n,k,d]] of a family member");
  params->add_option("spec", spec, "Family spec")->required();
  add_common(params);

  auto* search = app.add_subcommand("search", "Search for a self-dual orientable embedding of K_{r,s}");
  search->add_option("r", r, "First part size")->required();
  search->add_option("s", s, "Second part size")->required();
  search->add_option("--out", out_path, "Rotation-system output file");
  add_cap(search);
  add_budget(search);
  add_common(search);

  std::vector<const char*> argv{"embedkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code_from_cli = app.exit(e, out, err);
    return code_from_cli == 0 ? kSuccess : kUsageError;
  }

  try {
    options.threads = threads_from_env();
    RunReport report;
    if (*generate) report = cmd_generate(spec, out_path, options);
    else if (*verify) report = cmd_verify(map_path, options);
    else if (*code) report = cmd_code(map_path, out_path, options);
    else if (*distance) report = cmd_distance(hx_path, hz_path, options);
    else if (*params) report = cmd_params(spec);
    else report = cmd_search(r, s, out_path, options);

    if (format == "machine") out << report.to_json() << "\n";
    else if (*params) out << report.notes.front() << "\n";
    else out << report.to_text();
    return report.exit_code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const NonexistenceError& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
}

}  // namespace embedkit::cli
