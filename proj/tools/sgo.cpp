#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "sgo/cli.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return sgo::read_file(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hereditary strongly graded orders over Z and Z[i]"};
  app.require_subcommand(1);
  bool json = false;
  sgo::RunOptions opts;
  std::string file;
  std::string name;
  app.add_flag("--json", json, "print the JSON report only");
  app.add_flag("--timings", opts.timings, "include wall-clock timings in the report");

  auto* check = app.add_subcommand("check", "hereditary verdict for a graded order");
  check->add_option("input", file, "graded-order JSON file, - for stdin")->required();
  auto* picent = app.add_subcommand("picent", "central Picard group of a tiled order");
  picent->add_option("input", file, "order JSON file")->required();
  auto* classify = app.add_subcommand("classify", "Picent classes and Inn of the components");
  classify->add_option("input", file, "graded-order JSON file")->required();
  auto* oracle = app.add_subcommand("oracle-check", "compare the brute-force oracle with the engine");
  oracle->add_option("input", file, "graded-order JSON file")->required();
  oracle->add_option("--place", opts.place, "place label, e.g. 1+2i");
  auto* example = app.add_subcommand("example", "reproduce a worked example");
  example->add_option("name", name, "nonbasic, outer or semiprime")->required();
  example->add_option("--d", opts.d, "number of copies for semiprime")->capture_default_str();

  for (auto* sub : {check, picent, classify, oracle, example}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  sgo::RunReport r;
  try {
    if (*example) {
      r = sgo::cmd_example(name, opts);
    } else {
      const std::string input = slurp(file);
      if (*check) r = sgo::cmd_check(input, opts);
      else if (*picent) r = sgo::cmd_picent(input, opts);
      else if (*classify) r = sgo::cmd_classify(input, opts);
      else r = sgo::cmd_oracle_check(input, opts);
    }
  } catch (const sgo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (json) std::cout << r.json.dump(2) << "\n";
  else std::cout << r.text;
  return r.exit_code;
}
