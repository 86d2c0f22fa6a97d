#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ssc/laws.hpp"
#include "ssc/script.hpp"

namespace {

int run_file(const std::string& path, const ssc::ScriptOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << path << ": cannot open file\n";
    return 2;
  }
  std::ostringstream text;
  text << in.rdbuf();
  ssc::Script script;
  try {
    script = ssc::parse_script(text.str(), options);
  } catch (const ssc::ScriptError& e) {
    std::cerr << path << ":" << e.loc().line << ":" << e.loc().column << ": error: " << e.message() << "\n";
    return 2;
  }
  const ssc::ExecResult result = ssc::execute(script, options);
  std::cout << result.out;
  if (!result.err.empty()) std::cerr << path << ":" << result.err;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed subschemes of glued affine schemes over QQ"};
  app.name("subscheme-calc");
  app.require_subcommand(1);

  ssc::ScriptOptions script_options;
  std::string file;
  std::string order = "grevlex";
  auto* run = app.add_subcommand("run", "Execute a .ssc script");
  run->add_option("file", file, "Script file")->required();
  run->add_flag("--cocycle-check", script_options.cocycle_check, "Also check the cocycle condition on triple overlaps");
  run->add_option("--order", order, "Monomial order for every ring")
      ->check(CLI::IsMember({"lex", "grevlex"}));

  ssc::LawOptions law_options;
  std::string module = "all";
  auto* laws = app.add_subcommand("laws", "Run the property suites");
  laws->add_option("--seed", law_options.seed, "Seed for randomized suites");
  laws->add_option("--max-n", law_options.max_n, "Largest modulus for the Z/n and Spec Z sweeps")
      ->check(CLI::PositiveNumber);
  laws->add_option("--module", module, "One of polyring, groebner, algebra, scheme, subscheme, oracle, all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*run) {
      script_options.order = order == "lex" ? ssc::MonomialOrder::lex() : ssc::MonomialOrder::grevlex();
      return run_file(file, script_options);
    }
    const ssc::Report report = ssc::run_laws(module, law_options);
    std::cout << report.to_string();
    return report.ok() ? 0 : 1;
  } catch (const ssc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
