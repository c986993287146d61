// necsig: signatures of finite-index subgroups of NEC groups.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nec/hoare.hpp"
#include "nec/io.hpp"
#include "nec/lowindex.hpp"

namespace {

enum ExitCode { ok = 0, validation_failure = 1, parse_error = 2, inconsistent = 3 };

int cmd_validate(std::string const& file) {
  auto const action = nec::load_action_file(file);
  auto const report = nec::validate_action(action);
  std::cout << nec::render_validation(report, action);
  return report.ok() ? ok : validation_failure;
}

int cmd_signature(std::string const& file, bool trace, std::string const& format,
                  bool allow_invalid, std::optional<int> orbit_point) {
  auto action = nec::load_action_file(file);
  if (orbit_point) action = nec::restrict_to_orbit(action, *orbit_point);
  auto const check = nec::validate_action(action);
  if (!check.ok() &&
      !(allow_invalid && check.only_long_relation_fails(action.presentation()))) {
    std::cerr << nec::render_validation(check, action);
    if (!check.transitive) {
      std::cerr << "hint: use --restrict-to-orbit to analyse one orbit\n";
    }
    return validation_failure;
  }
  nec::PipelineOptions options;
  options.allow_invalid_relators = allow_invalid;
  auto const report = nec::subgroup_signature(action, options);
  if (report.unverified_input) {
    std::cerr << "warning: unverified input, long relation fails\n";
  }
  std::cout << (format == "machine" ? nec::render_machine(report)
                                    : nec::render_text(report, trace));
  return ok;
}

std::string assignment(nec::CosetAction const& action) {
  std::string s;
  auto const& gens = action.presentation().generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    s += (g ? " " : "") + gens[g].name + "=" +
         nec::format_cycles(action.image(static_cast<int>(g)));
  }
  return s;
}

int cmd_enumerate(std::string const& sig_text, std::optional<int> index,
                  std::optional<int> degree, std::size_t limit) {
  nec::NecSignature sig;
  try {
    sig = nec::parse_signature(sig_text);
  } catch (nec::SyntaxError const& e) {
    std::cerr << "error: signature, column " << e.offset() + 1 << ": " << e.what()
              << "\n";
    return parse_error;
  }
  auto const violations = nec::validate_signature(sig);
  if (!violations.empty()) {
    for (auto const& v : violations) {
      std::cerr << "error: " << v.field << ": " << v.message << "\n";
    }
    return parse_error;
  }
  int count = 0;
  auto block = [&](nec::CosetAction const& action, nec::SubgroupReport const& report) {
    std::cout << "[" << ++count << "] " << assignment(action) << "\n    "
              << nec::format_signature(report.signature) << "\n";
  };
  if (index) {
    if (*index != 2) {
      std::cerr << "error: only --index 2 is supported; use --degree N\n";
      return parse_error;
    }
    for (auto const& sub : nec::index_two_subgroups(sig)) block(sub.action, sub.report);
  } else {
    if (*degree < 1 || *degree > nec::max_search_degree) {
      std::cerr << "error: --degree must be in 1.." << nec::max_search_degree << "\n";
      return parse_error;
    }
    auto const result = nec::search_actions(sig, *degree, limit);
    for (auto const& action : result.actions) {
      block(action, nec::subgroup_signature(action));
    }
    if (result.truncated) {
      std::cerr << "warning: result limit " << limit << " reached, output is partial\n";
    }
  }
  std::cout << count << (count == 1 ? " subgroup" : " subgroups") << "\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signatures of finite-index subgroups of NEC groups"};
  app.require_subcommand(1);

  std::string file;
  auto* validate = app.add_subcommand("validate", "Check relators and transitivity");
  validate->add_option("file", file, "Action document")->required();

  bool trace = false;
  bool allow_invalid = false;
  std::string format = "text";
  std::optional<int> orbit_point;
  auto* signature = app.add_subcommand("signature", "Compute the subgroup signature");
  signature->add_option("file", file, "Action document")->required();
  signature->add_flag("--trace", trace, "Print every intermediate step");
  signature->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}));
  signature->add_flag("--allow-invalid-relators", allow_invalid,
                      "Run even if the long relation fails");
  signature->add_option("--restrict-to-orbit", orbit_point,
                        "Analyse the stabilizer of this point on its orbit");

  std::string sig_text;
  std::optional<int> index;
  std::optional<int> degree;
  std::size_t limit = 100000;
  auto* enumerate = app.add_subcommand("enumerate", "List small-index subgroups");
  enumerate->add_option("signature", sig_text, "Signature text")->required();
  auto* index_opt = enumerate->add_option("--index", index, "Subgroup index (2)");
  auto* degree_opt = enumerate->add_option("--degree", degree, "Search degree");
  index_opt->excludes(degree_opt);
  enumerate->add_option("--limit", limit, "Maximum number of actions");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? ok : parse_error;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*signature) {
      return cmd_signature(file, trace, format, allow_invalid, orbit_point);
    }
    if (!index && !degree) {
      std::cerr << "error: enumerate needs --index 2 or --degree N\n";
      return parse_error;
    }
    return cmd_enumerate(sig_text, index, degree, limit);
  } catch (nec::InputError const& e) {
    std::cerr << "error: " << e.located(file) << "\n";
    return parse_error;
  } catch (nec::ActionError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return validation_failure;
  } catch (nec::InconsistentAnalysis const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return inconsistent;
  }
}
