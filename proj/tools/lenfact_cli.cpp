#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lenfact/lenfact.h"

namespace {

std::optional<std::string> slurp(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact factorization invariants of finitely generated monoids"};
  app.set_version_flag("--version", std::string(lf_version()));

  std::string command;
  std::string input_path;
  std::optional<std::int64_t> bound;
  std::string strategy = "all";
  std::string format = "text";
  std::string out_path;
  std::optional<std::string> element;

  app.add_option("command", command, "classify | factorize | lengths | betti | catenary | pure | decompose | krull | paper-suite")
      ->required()
      ->check(CLI::IsMember({"classify", "factorize", "lengths", "betti", "catenary", "pure", "decompose", "krull",
                             "paper-suite"}));
  app.add_option("input", input_path, "input JSON document ('-' for stdin)");
  app.add_option("--bound", bound, "sweep bound (default: 4 x max atom grading)")->check(CLI::NonNegativeNumber);
  app.add_option("--strategy", strategy, "lattice | brute | all")->check(CLI::IsMember({"lattice", "brute", "all"}));
  app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--element", element, "element as JSON: 8, [1,2], \"3/2\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::string input;
  if (command != "paper-suite") {
    if (input_path.empty()) {
      std::cerr << "lenfact: " << command << " needs an input document\n";
      return 1;
    }
    auto text = slurp(input_path);
    if (!text) {
      std::cerr << "lenfact: cannot read " << input_path << "\n";
      return 1;
    }
    input = std::move(*text);
  }

  lf_options opt;
  lf_options_init(&opt);
  if (bound) opt.bound = *bound;
  opt.strategy = strategy.c_str();
  opt.format = format.c_str();
  if (element) opt.element = element->c_str();

  lf_report* report = nullptr;
  if (lf_run(command.c_str(), input.c_str(), &opt, &report) != LF_OK) {
    std::cerr << "lenfact: " << lf_last_error() << "\n";
    return 1;
  }
  int code = lf_report_exit_code(report);
  const char* text = lf_report_text(report);
  if (out_path.empty()) {
    std::fputs(text, stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!(out << text)) {
      std::cerr << "lenfact: cannot write " << out_path << "\n";
      code = 1;
    }
  }
  lf_report_free(report);
  return code;
}
