// coxverify: runs the verification suites on a preset or a group file.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "coxeter/errors.hpp"
#include "coxeter/presets.hpp"
#include "coxeter/sink_flip.hpp"
#include "coxeter/suites.hpp"

using namespace coxeter;

namespace {

struct Options {
  std::string group;
  std::string cox_word;
  std::string json_path;
  bool negative_control = false;
  bool serial = false;
  bool no_timing = false;
  Budgets budgets;
};

Word resolve_word(const GroupContext& ctx, const Options& opt) {
  return opt.cox_word.empty() ? default_coxeter_word(ctx) : parse_word(opt.cox_word);
}

int emit(VerificationReport report, const Options& opt) {
  if (opt.no_timing) report.wall_time = 0.0;
  std::cout << report.to_table();
  if (!opt.json_path.empty()) {
    std::ofstream out(opt.json_path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + opt.json_path + "'");
    out << report.to_json();
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for Coxeter groups and admissible sink-flip sequences"};
  app.require_subcommand(1);
  Options opt;
  Budgets& b = opt.budgets;

  auto group_flag = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--group", opt.group, "preset name or JSON group file (0 encodes infinity)");
    if (required) o->required();
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--json", opt.json_path, "write the report as JSON to this path");
    sub->add_flag("--no-timing", opt.no_timing, "report wall_time as 0 (byte-stable output)");
    sub->add_flag("--serial", opt.serial, "run single-threaded");
  };
  auto word_flag = [&](CLI::App* sub) {
    sub->add_option("--cox-word", opt.cox_word, "Coxeter word as a 1-based comma list (default 1,2,...,n)");
  };

  auto* classify = app.add_subcommand("classify", "finite / affine / indefinite, irreducibility, diameter");
  group_flag(classify, true);
  common(classify);

  auto* power = app.add_subcommand("power-reduced", "c^k is reduced with length k*n");
  group_flag(power, true);
  word_flag(power);
  power->add_option("--k-max", b.k_max, "largest power")->capture_default_str();
  power->add_flag("--negative-control", opt.negative_control, "allow a finite group and report where reducedness fails");
  common(power);

  auto* admissible = app.add_subcommand("admissible-reduced", "every c-admissible sequence is reduced");
  group_flag(admissible, true);
  word_flag(admissible);
  admissible->add_option("--n-max", b.n_max, "longest sequence")->capture_default_str();
  common(admissible);

  auto* mt = app.add_subcommand("prop-mt", "minimal admissible sequences per Demazure product are reduced");
  group_flag(mt, true);
  word_flag(mt);
  mt->add_option("--n-max", b.mt_length, "longest sequence")->capture_default_str();
  common(mt);

  auto* growth = app.add_subcommand("growth", "length of (pi_c1 ... pi_cn)^k strictly increases");
  group_flag(growth, true);
  word_flag(growth);
  growth->add_option("--k-max", b.k_max, "largest power")->capture_default_str();
  growth->add_flag("--negative-control", opt.negative_control, "allow a finite group and report where it stabilizes");
  common(growth);

  auto* w0 = app.add_subcommand("w0", "an admissible sequence with Demazure product w0 (finite groups)");
  group_flag(w0, true);
  word_flag(w0);
  common(w0);

  auto* all = app.add_subcommand("verify-all", "every suite on every Coxeter word (whole catalog without --group)");
  group_flag(all, false);
  all->add_option("--k-max", b.k_max, "powers of c and growth steps")->capture_default_str();
  all->add_option("--n-max", b.n_max, "admissible-sequence census length")->capture_default_str();
  all->add_option("--depth", b.depth, "positive-root depth for the sign dichotomy")->capture_default_str();
  all->add_option("--order-length", b.order_length, "word length for the order lemma")->capture_default_str();
  all->add_option("--poset-length", b.poset_length, "census length for poset and phi checks")->capture_default_str();
  all->add_option("--mt-length", b.mt_length, "census length for minimal sequences")->capture_default_str();
  all->add_option("--census-length", b.census_length, "all-words census length")->capture_default_str();
  all->add_option("--random-words", b.random_words, "random words per group")->capture_default_str();
  all->add_option("--random-length", b.random_length, "maximal random word length")->capture_default_str();
  all->add_option("--seed", b.seed, "random seed")->capture_default_str();
  common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*all) {
      std::vector<GroupContext> groups;
      if (opt.group.empty())
        for (const auto& p : preset_catalog()) groups.push_back(build_context(p.matrix, p.name));
      else
        groups.push_back(load_group(opt.group));
      return emit(cmd_verify_all(groups, b, opt.serial), opt);
    }
    const GroupContext ctx = load_group(opt.group);
    if (*classify) return emit(cmd_classify(ctx), opt);
    const Word c = resolve_word(ctx, opt);
    if (*power) return emit(cmd_power_reduced(ctx, c, b.k_max, opt.negative_control), opt);
    if (*admissible) return emit(cmd_admissible_reduced(ctx, c, b.n_max), opt);
    if (*mt) return emit(cmd_prop_mt(ctx, c, b.mt_length), opt);
    if (*growth) return emit(cmd_growth(ctx, c, b.k_max, opt.negative_control), opt);
    if (*w0) return emit(cmd_w0_variant(ctx, c), opt);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitInputError;
}
