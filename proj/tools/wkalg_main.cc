// wkalg: exact calculator for hook and rectangular affine W-algebras.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wkalg/cli/report.h"
#include "wkalg/conformal/levels.h"
#include "wkalg/errors.h"

namespace {

using wkalg::cli::Json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct FamilyFlags {
  std::string partition;
  std::vector<int> hook;
  std::vector<int> rect;

  void attach(CLI::App* cmd, bool allow_partition) {
    auto* h = cmd->add_option("--hook", hook, "hook (m, 1^n)")->expected(2);
    auto* r = cmd->add_option("--rect", rect, "rectangle (q^m)")->expected(2);
    h->excludes(r);
    if (allow_partition) {
      auto* p = cmd->add_option("--partition", partition, "parts a,b,c");
      p->excludes(h)->excludes(r);
    }
  }

  wkalg::FamilyParams resolve() const {
    if (!hook.empty()) return wkalg::FamilyParams::hook(hook[0], hook[1]);
    if (!rect.empty()) return wkalg::FamilyParams::rectangular(rect[0], rect[1]);
    if (!partition.empty()) return wkalg::FamilyParams::classify(wkalg::Partition::parse(partition));
    throw wkalg::ParseError("one of --hook M N, --rect Q M or --partition is required");
  }
};

void emit(const Json& report, bool json) {
  std::cout << (json ? wkalg::cli::dump(report) : wkalg::cli::render_text(report));
}

int fail(const std::string& command, const std::string& kind, const std::string& message, bool json,
         int code, Json extra = Json::object()) {
  std::cerr << "wkalg " << command << ": " << message << "\n";
  if (json) {
    extra["kind"] = kind;
    extra["message"] = message;
    std::cout << wkalg::cli::dump(Json{{"command", command}, {"error", extra}});
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact central charges, conformal levels and collapsing levels of W^k(sl(N), x, f)"};
  app.require_subcommand(1);

  bool json = false;
  std::string level;
  int which = 1;
  int range = 2;
  std::optional<std::string> only;

  FamilyFlags info_flags, levels_flags, collapse_flags, admissible_flags, decompose_flags;

  auto* info = app.add_subcommand("info", "grading, dimensions, generators and c(k)");
  info_flags.attach(info, true);
  auto* levels = app.add_subcommand("levels", "conformal embedding levels");
  levels_flags.attach(levels, true);
  auto* collapse = app.add_subcommand("collapse", "strong-collapsing verdict at a conformal level");
  collapse_flags.attach(collapse, true);
  collapse->add_option("--level", level, "level p/q")->required();
  auto* admissible = app.add_subcommand("admissible", "admissibility and d_k^W");
  admissible_flags.attach(admissible, true);
  admissible->add_option("--level", level, "level p/q")->required();
  auto* decompose = app.add_subcommand("decompose", "charge decomposition at k^(1) or k^(2)");
  decompose_flags.attach(decompose, true);
  decompose->add_option("--case", which, "1 or 2")->check(CLI::IsMember({1, 2}));
  decompose->add_option("--range", range, "largest |charge|")->check(CLI::NonNegativeNumber);
  auto* verify = app.add_subcommand("verify-paper", "run the reproduction checks");
  verify->add_option("--only", only, "restrict to one section");

  for (auto* sub : {info, levels, collapse, admissible, decompose, verify}) {
    sub->add_flag("--json", json, "canonical JSON on stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (info->parsed()) {
      emit(wkalg::cli::info_report(info_flags.resolve().partition()), json);
    } else if (levels->parsed()) {
      emit(wkalg::cli::levels_report(levels_flags.resolve()), json);
    } else if (collapse->parsed()) {
      emit(wkalg::cli::collapse_report(collapse_flags.resolve(), wkalg::cli::parse_level(level)), json);
    } else if (admissible->parsed()) {
      emit(wkalg::cli::admissible_report(admissible_flags.resolve(), wkalg::cli::parse_level(level)), json);
    } else if (decompose->parsed()) {
      const Json report = wkalg::cli::decompose_report(decompose_flags.resolve(), which, range);
      emit(report, json);
      if (report["refused"].get<bool>()) return kExitFailure;
    } else if (verify->parsed()) {
      const Json report = wkalg::cli::verify_report(wkalg::cli::run_checks(only));
      emit(report, json);
      return report["all_passed"].get<bool>() ? 0 : kExitFailure;
    }
  } catch (const wkalg::ParseError& e) {
    return fail(command, "ParseError", e.what(), json, kExitUsage);
  } catch (const std::invalid_argument& e) {
    return fail(command, "InvalidArgument", e.what(), json, kExitUsage);
  } catch (const wkalg::NotConformalError& e) {
    Json extra;
    extra["c"] = e.c_w() ? Json(e.c_w()->str()) : Json(nullptr);
    extra["c_natural"] = e.c_coset() ? Json(e.c_coset()->str()) : Json(nullptr);
    return fail(command, "NotConformalError", e.what(), json, kExitFailure, extra);
  } catch (const wkalg::Error& e) {
    return fail(command, "Error", e.what(), json, kExitFailure);
  }
  return 0;
}
