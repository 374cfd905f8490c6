// Copyright 2026 The Softset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "softset/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "softset/error.hpp"
#include "softset/expr.hpp"
#include "softset/houses.hpp"
#include "softset/kernels.hpp"
#include "softset/laws.hpp"
#include "softset/workspace.hpp"

namespace softset::cli {
namespace {

enum class Command { kEval, kCheckLaws, kShow, kPaperExample };

struct RunConfig {
  Command command = Command::kShow;
  std::string workspace_path;
  std::string expression;
  laws::Mode mode = laws::Mode::kRandom;
  std::optional<std::size_t> universe_size;
  std::optional<std::size_t> parameter_count;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::uint64_t cap = laws::kDefaultEnumerationCap;
  std::vector<std::string> law_ids;
  std::optional<int> max_arity;
  std::string kernels;
};

// Raised for data problems that are not library Errors (e.g. unreadable files).
struct DataFailure {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataFailure{"cannot read workspace '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

io::Workspace load(const std::string& path, std::ostream& err) {
  std::vector<io::Warning> warnings;
  io::Workspace ws = io::load_workspace(read_file(path), &warnings);
  for (const auto& w : warnings) err << path << ":" << w.line << ": warning: " << w.message << "\n";
  return ws;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kLexError:
    case ErrorKind::kParseError:
    case ErrorKind::kUnboundName:
      return kUsageError;
    default:
      return kDataError;
  }
}

// Source line with a caret under the error column, for single-expression input.
void print_caret(std::ostream& err, std::string_view source, const SourcePosition& position) {
  if (!position.valid()) return;
  std::size_t line_start = 0;
  for (std::size_t line = 1; line < position.line; ++line) {
    line_start = source.find('\n', line_start);
    if (line_start == std::string_view::npos) return;
    ++line_start;
  }
  const std::size_t line_end = std::min(source.find('\n', line_start), source.size());
  err << "  " << source.substr(line_start, line_end - line_start) << "\n";
  err << "  " << std::string(position.column - 1, ' ') << "^\n";
}

int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const io::Workspace ws = load(config.workspace_path, err);
  expr::ExprPtr tree;
  try {
    tree = expr::parse(config.expression);
    expr::Environment env;
    for (const auto& b : ws.bindings()) env.emplace(b.name, b.value);
    out << io::render_soft_set("result", expr::evaluate(*tree, env, ws.context()));
  } catch (const Error& e) {
    err << "softset: error: " << e.what() << "\n";
    print_caret(err, config.expression, e.position());
    return exit_code_for(e.kind());
  }
  return kSuccess;
}

int cmd_show(const RunConfig& config, std::ostream& out, std::ostream& err) {
  out << io::render_workspace(load(config.workspace_path, err));
  return kSuccess;
}

int cmd_paper_example(std::ostream& out) {
  bool all = true;
  for (const auto& outcome : houses::check_fixtures()) {
    const houses::Fixture& f = *outcome.fixture;
    out << std::left << std::setw(13) << f.operation << std::setw(8) << f.expression
        << (outcome.matches ? "MATCH" : "MISMATCH") << "\n";
    all = all && outcome.matches;
    // Line diff: ' ' shared, '-' expected only, '+' computed only.
    auto lines = [](const std::string& text) {
      std::vector<std::string> v;
      std::istringstream in(text);
      for (std::string line; std::getline(in, line);) v.push_back(line);
      return v;
    };
    const auto expected = lines(f.expected);
    const auto actual = lines(outcome.actual);
    for (const auto& line : expected) {
      const bool shared = std::find(actual.begin(), actual.end(), line) != actual.end();
      out << (shared ? "  " : "- ") << line << "\n";
    }
    for (const auto& line : actual) {
      if (std::find(expected.begin(), expected.end(), line) == expected.end()) out << "+ " << line << "\n";
    }
  }
  out << houses::difference_erratum() << "\n";
  out << (all ? "all fixtures match" : "fixture mismatch") << "\n";
  return all ? kSuccess : kCheckFailed;
}

int cmd_check_laws(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const bool exhaustive = config.mode == laws::Mode::kExhaustive;
  const std::size_t n = config.universe_size.value_or(exhaustive ? 2 : 4);
  const std::size_t m = config.parameter_count.value_or(exhaustive ? 2 : 3);
  if (!exhaustive && config.trials == 0) {
    err << "softset: error: --trials must be at least 1\n";
    return kUsageError;
  }

  std::vector<const laws::Law*> selected;
  if (config.law_ids.empty()) {
    for (const auto& law : laws::law_catalog()) selected.push_back(&law);
  } else {
    for (const auto& id : config.law_ids) {
      const laws::Law* law = laws::find_law(id);
      if (law == nullptr) {
        err << "softset: error: unknown law '" << id << "'\n";
        return kUsageError;
      }
      selected.push_back(law);
    }
  }
  if (config.max_arity) {
    std::erase_if(selected, [&](const laws::Law* law) { return law->arity > *config.max_arity; });
  }

  const Context context = laws::generated_context(n, m);
  if (exhaustive) {
    for (const laws::Law* law : selected) {
      if (laws::tuple_count(n, m, law->arity) > config.cap) {
        err << "softset: error: EnumerationTooLarge: law '" << law->id << "' (arity " << law->arity
            << ") needs more than " << config.cap << " tuples at |U|=" << n << ", |E|=" << m << "\n";
        return kDataError;
      }
    }
  }

  out << "# check-laws mode=" << laws::to_string(config.mode) << " universe=" << n << " params=" << m;
  if (!exhaustive) out << " trials=" << config.trials << " seed=" << config.seed;
  out << "\n";

  std::size_t passed = 0;
  for (const laws::Law* law : selected) {
    const laws::CheckReport report = exhaustive ? laws::check_exhaustive(*law, context, config.cap)
                                                : laws::check_random(*law, context, config.trials, config.seed);
    out << std::left << std::setw(32) << law->id << std::setw(11) << laws::to_string(report.mode)
        << "cases=" << std::setw(9) << report.cases << (report.passed() ? "PASS" : "FAIL") << "\n";
    if (report.passed()) {
      ++passed;
      continue;
    }
    const auto& cx = *report.counterexample;
    out << "# law: " << law->statement << "\n";
    out << "# counterexample (locally minimal): " << cx.detail << "\n";
    out << laws::render_counterexample(cx);
  }
  out << "# " << passed << "/" << selected.size() << " laws passed\n";
  return passed == selected.size() ? kSuccess : kCheckFailed;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::kEval: return cmd_eval(config, out, err);
    case Command::kShow: return cmd_show(config, out, err);
    case Command::kPaperExample: return cmd_paper_example(out);
    case Command::kCheckLaws: return cmd_check_laws(config, out, err);
  }
  return kUsageError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Soft set algebra: evaluate expressions, check algebraic laws, replay the houses example"};
  app.name("softset");
  app.require_subcommand(1);
  app.add_option("--kernels", config.kernels, "Bit kernel backend (scalar, avx2, neon)");

  auto* eval = app.add_subcommand("eval", "Evaluate an expression over a workspace");
  eval->add_option("workspace", config.workspace_path, "Workspace file")->required();
  eval->add_option("expression", config.expression, "Expression, e.g. \"(F & G)^c\"")->required();

  auto* show = app.add_subcommand("show", "Print a workspace in canonical form");
  show->add_option("workspace", config.workspace_path, "Workspace file")->required();

  auto* example = app.add_subcommand("paper-example", "Recompute the houses example and compare with fixtures");

  auto* check = app.add_subcommand("check-laws", "Verify the law catalog on a generated context");
  auto* exhaustive_flag = check->add_flag("--exhaustive", "Try every argument tuple");
  auto* random_flag = check->add_flag("--random", "Try random argument tuples (default)");
  exhaustive_flag->excludes(random_flag);
  check->add_option("--universe", config.universe_size, "Universe size |U|")->check(CLI::NonNegativeNumber);
  check->add_option("--params", config.parameter_count, "Parameter space size |E|")->check(CLI::NonNegativeNumber);
  check->add_option("--trials", config.trials, "Random trials per law")->capture_default_str();
  check->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  check->add_option("--cap", config.cap, "Exhaustive enumeration cap")->capture_default_str();
  check->add_option("--law", config.law_ids, "Only check these law ids");
  check->add_option("--max-arity", config.max_arity, "Only check laws of at most this arity");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  if (!config.kernels.empty()) {
    const auto backend = kernels::backend_from_string(config.kernels);
    if (!backend || !kernels::set_active_backend(*backend)) {
      err << "softset: error: kernel backend '" << config.kernels << "' is not available\n";
      return kUsageError;
    }
  }

  if (eval->parsed()) config.command = Command::kEval;
  else if (show->parsed()) config.command = Command::kShow;
  else if (example->parsed()) config.command = Command::kPaperExample;
  else config.command = Command::kCheckLaws;
  config.mode = exhaustive_flag->count() > 0 ? laws::Mode::kExhaustive : laws::Mode::kRandom;

  try {
    if (config.command == Command::kCheckLaws && config.universe_size && config.parameter_count &&
        *config.universe_size == 0 && *config.parameter_count > 0) {
      err << "softset: error: EmptyUniverse: --params > 0 needs --universe > 0\n";
      return kUsageError;
    }
    return dispatch(config, out, err);
  } catch (const DataFailure& f) {
    err << "softset: error: " << f.message << "\n";
    return kDataError;
  } catch (const Error& e) {
    err << "softset: error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace softset::cli
