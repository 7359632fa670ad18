// treeshape: command-line front end.
//
// Exit codes: 0 success, 1 a verification or property check failed (or an
// unexpected runtime error), 2 usage error (bad flags, n out of range,
// unreadable input). Relative --out paths are resolved against
// $TREESHAPE_OUTPUT_DIR when it is set.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "treeshape/analysis.hpp"
#include "treeshape/exact_dist.hpp"
#include "treeshape/generators.hpp"
#include "treeshape/io.hpp"
#include "treeshape/moments.hpp"
#include "treeshape/newick.hpp"
#include "treeshape/oracle.hpp"

namespace ts = treeshape;

namespace {

constexpr int k_exit_failure = 1;
constexpr int k_exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 0;
  int hi = 0;
};

auto parse_range(const std::string& text) -> Range {
  auto to_int = [&](const std::string& s) {
    try {
      auto pos = std::size_t{};
      auto v = std::stoi(s, &pos);
      if (pos != s.size()) {
        throw std::invalid_argument(s);
      }
      return v;
    } catch (const std::exception&) {
      throw UsageError("bad n or n-range '" + text + "' (expected N or A..B)");
    }
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    auto n = to_int(text);
    return {n, n};
  }
  auto r = Range{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  if (r.lo > r.hi) {
    throw UsageError("empty n-range '" + text + "'");
  }
  return r;
}

auto rootedness_of(bool rooted) -> ts::Rootedness {
  return rooted ? ts::Rootedness::rooted : ts::Rootedness::unrooted;
}

auto resolve_out(const std::string& out) -> std::filesystem::path {
  auto path = std::filesystem::path{out};
  const char* dir = std::getenv("TREESHAPE_OUTPUT_DIR");
  if (path.is_relative() && dir != nullptr && *dir != '\0') {
    path = std::filesystem::path{dir} / path;
  }
  return path;
}

// Streams to a file when --out is given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& out) {
    if (!out.empty()) {
      auto path = resolve_out(out);
      if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
      }
      file_.open(path);
      if (!file_) {
        throw UsageError("cannot open output file " + path.string());
      }
    }
  }
  auto stream() -> std::ostream& { return file_.is_open() ? file_ : std::cout; }
  void write(const std::string& text) { stream() << text; }

 private:
  std::ofstream file_;
};

auto parse_model_flag(const std::string& text) -> ts::Model {
  try {
    return ts::parse_model(text);
  } catch (const std::invalid_argument& err) {
    throw UsageError(err.what());
  }
}

// Calls visit(n, pmf) for every n in the range with the cherry law of the
// given model and rootedness, stepping one recursion where one exists.
void for_each_cherry_law(ts::Model model, ts::Rootedness rootedness, Range range,
                         const std::function<void(int, const ts::MarginalPmf&)>& visit) {
  if (model == ts::Model::yhk) {
    auto rec = ts::CherryRecursion{model, rootedness};
    if (range.lo < rec.n()) {
      throw std::invalid_argument(fmt::format("cherry law needs n >= {}", rec.n()));
    }
    for (auto n = range.lo; n <= range.hi; ++n) {
      rec.advance_to(n);
      visit(n, rec.pmf());
    }
    return;
  }
  for (auto n = range.lo; n <= range.hi; ++n) {
    visit(n, rootedness == ts::Rootedness::unrooted ? ts::cherry_pmf_unrooted(model, n)
                                                     : ts::cherry_pmf_rooted(model, n));
  }
}

auto joint_for(ts::Model model, ts::Rootedness rootedness, int n) -> ts::JointPmf {
  if (rootedness == ts::Rootedness::unrooted) {
    if (n < 6) {
      throw std::invalid_argument(
          fmt::format("the joint recursion is defined for n >= 6 (got n = {})", n));
    }
    return ts::joint_unrooted(model, n);
  }
  // Rooted joint laws come from brute-force enumeration only.
  if (n < ts::k_oracle_min_n || n > ts::rooted_joint_table_max_n(model)) {
    throw std::invalid_argument(
        fmt::format("rooted joint laws are available by enumeration for {} <= n <= {}",
                    ts::k_oracle_min_n, ts::rooted_joint_table_max_n(model)));
  }
  return model == ts::Model::yhk ? ts::exact_by_path_enumeration(model, n, rootedness)
                                 : ts::exact_by_tree_enumeration(n, rootedness);
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string model;
  int n = 0;
  bool rooted = false;
  std::uint64_t reps = 1;
  std::uint64_t seed = 0;
  std::string out;
  bool hist = false;
  int workers = 1;
  bool skip_permutation = false;
};

auto run_generate(const GenerateArgs& args) -> int {
  const auto model = parse_model_flag(args.model);
  const auto rootedness = rootedness_of(args.rooted);
  if (args.n < 2) {
    throw UsageError("--n must be at least 2");
  }
  if (args.reps < 1) {
    throw UsageError("--reps must be at least 1");
  }
  auto options = ts::GrowOptions{args.skip_permutation};
  auto sink = Sink{args.out};
  if (args.hist) {
    sink.write(ts::histogram_csv(
        ts::sample_counts(model, args.n, rootedness, args.reps, args.seed, args.workers, options)));
    return 0;
  }
  for (auto i = std::uint64_t{0}; i < args.reps; ++i) {
    auto grown = ts::grow(model, args.n, rootedness, ts::derive_seed(args.seed, i), options);
    sink.stream() << ts::write_newick(grown.tree) << '\n';
  }
  return 0;
}

struct DistArgs {
  std::string model;
  int n = 0;
  bool rooted = false;
  bool joint = false;
  bool cherry = false;
  bool pitchfork = false;
  std::string format = "csv";
  std::string out;
};

auto run_dist(const DistArgs& args) -> int {
  const auto model = parse_model_flag(args.model);
  const auto rootedness = rootedness_of(args.rooted);
  if (static_cast<int>(args.joint) + static_cast<int>(args.cherry) +
          static_cast<int>(args.pitchfork) != 1) {
    throw UsageError("give exactly one of --joint, --cherry, --pitchfork");
  }
  const auto json = args.format == "json";
  auto text = std::string{};
  if (args.joint) {
    auto pmf = joint_for(model, rootedness, args.n);
    text = json ? ts::joint_json(pmf) : ts::joint_csv(pmf);
  } else {
    auto pmf = ts::MarginalPmf{};
    if (args.cherry) {
      pmf = rootedness == ts::Rootedness::unrooted ? ts::cherry_pmf_unrooted(model, args.n)
                                                   : ts::cherry_pmf_rooted(model, args.n);
    } else {
      pmf = ts::marginal_from_joint(joint_for(model, rootedness, args.n),
                                    ts::Statistic::pitchfork);
    }
    text = json ? ts::marginal_json(pmf) : ts::marginal_csv(pmf);
  }
  Sink{args.out}.write(text);
  return 0;
}

struct MomentsArgs {
  std::string model;
  std::string n;
  bool rooted = false;
  std::string source = "closed";
  std::string out;
};

auto run_moments(const MomentsArgs& args) -> int {
  const auto model = parse_model_flag(args.model);
  const auto rootedness = rootedness_of(args.rooted);
  const auto range = parse_range(args.n);
  if (range.lo < 1) {
    throw UsageError("n must be positive");
  }
  auto sink = Sink{args.out};
  sink.write(ts::moments_csv_header());
  for (auto n = range.lo; n <= range.hi; ++n) {
    auto s = args.source == "closed" ? ts::closed_form(model, rootedness, n)
             : args.source == "table" ? ts::table_moments(model, rootedness, n)
                                      : ts::best_moments(model, rootedness, n);
    sink.write(ts::moments_csv_row(s));
  }
  return 0;
}

struct TvdArgs {
  std::string model;
  std::string n;
  std::string out;
};

auto single_tvd(ts::Model model, int n) -> ts::TvdSequence {
  auto seq = ts::TvdSequence{};
  seq.model = model;
  seq.ns = {n};
  seq.distance = {ts::tvd(ts::cherry_pmf_rooted(model, n), ts::cherry_pmf_unrooted(model, n))};
  seq.strictly_decreasing = true;
  seq.sign_change_found = true;
  return seq;
}

auto run_tvd(const TvdArgs& args) -> int {
  const auto range = parse_range(args.n);
  if (range.lo < 4) {
    throw UsageError("tvd needs n >= 4");
  }
  auto models = std::vector<ts::Model>{};
  if (args.model == "both") {
    models = {ts::Model::yhk, ts::Model::pda};
  } else {
    models = {parse_model_flag(args.model)};
  }
  auto sink = Sink{args.out};
  auto first = true;
  auto sequences = std::vector<ts::TvdSequence>{};
  for (auto model : models) {
    auto seq = range.lo == range.hi ? single_tvd(model, range.lo)
                                    : ts::tvd_sequence(model, range.lo, range.hi);
    sink.write(ts::tvd_csv(seq, first));
    first = false;
    if (model == ts::Model::yhk && range.lo < range.hi) {
      std::cerr << "yhk: strictly decreasing: " << (seq.strictly_decreasing ? "yes" : "no")
                << "; sign change at every n: " << (seq.sign_change_found ? "yes" : "no") << '\n';
    }
    sequences.push_back(std::move(seq));
  }
  if (sequences.size() == 2) {
    auto evidence = ts::tvd_conjecture_evidence(sequences[0], sequences[1]);
    std::cerr << "conjecture d_yhk <= d_pda over the range: "
              << (evidence.observed ? "observed" : "not observed") << '\n';
  }
  return 0;
}

struct AnalyzeArgs {
  std::string check;
  std::string model = "pda";
  std::string n;
  bool rooted = false;
  std::string statistic = "cherry";
  std::string out;
};

auto yes_no(bool b) -> const char* { return b ? "yes" : "no"; }

auto run_analyze(const AnalyzeArgs& args) -> int {
  const auto range = parse_range(args.n);
  const auto rootedness = rootedness_of(args.rooted);
  auto sink = Sink{args.out};
  auto failed = false;

  if (args.check == "identities") {
    if (range.lo < 4) {
      throw UsageError("identities need n >= 4");
    }
    sink.write("n,delta,delta_floor,delta_holds,nabla,nabla_floor,nabla_asserted,nabla_holds\n");
    for (auto n = range.lo; n <= range.hi; ++n) {
      auto d = ts::delta_identity(n);
      auto u = ts::nabla_identity(n);
      failed = failed || !d.holds || (u.asserted && !u.holds);
      sink.write(fmt::format("{},{},{},{},{},{},{},{}\n", n, d.expected, d.floor_value,
                             yes_no(d.holds), u.expected, u.floor_value, yes_no(u.asserted),
                             yes_no(u.holds)));
    }
    return failed ? k_exit_failure : 0;
  }

  if (args.check == "changepoint") {
    if (range.lo < 6) {
      throw UsageError("changepoint needs n >= 6");
    }
    sink.write("n,ratio_increasing,starts_below,sign_changes,kappa_low,kappa_high\n");
    auto yhk = ts::CherryRecursion{ts::Model::yhk, ts::Rootedness::unrooted};
    for (auto n = range.lo; n <= range.hi; ++n) {
      yhk.advance_to(n);
      auto cp = ts::change_point(yhk.pmf(), ts::cherry_pmf_unrooted(ts::Model::pda, n));
      failed = failed || !cp.ok();
      sink.write(fmt::format("{},{},{},{},{},{}\n", n, yes_no(cp.ratio_increasing),
                             yes_no(cp.starts_below), cp.sign_changes, cp.kappa_low,
                             cp.kappa_high));
    }
    return failed ? k_exit_failure : 0;
  }

  const auto model = parse_model_flag(args.model);
  auto shapes = std::vector<ts::ShapeReport>{};
  if (args.statistic == "pitchfork") {
    // Log-concavity of pitchfork laws is open; reported, never a failure.
    for (auto n = range.lo; n <= range.hi; ++n) {
      shapes.push_back(ts::log_concavity(
          ts::marginal_from_joint(joint_for(model, rootedness, n), ts::Statistic::pitchfork)));
    }
  } else {
    for_each_cherry_law(model, rootedness, range, [&](int, const ts::MarginalPmf& pmf) {
      shapes.push_back(ts::log_concavity(pmf));
    });
  }
  const auto asserted = args.statistic == "cherry";

  if (args.check == "logconcave") {
    sink.write("n,model,rootedness,statistic,log_concave,first_violation\n");
    for (const auto& s : shapes) {
      failed = failed || (asserted && !s.is_log_concave);
      sink.write(fmt::format("{},{},{},{},{},{}\n", s.n, ts::to_string(s.model),
                             ts::to_string(s.rootedness), ts::to_string(s.statistic),
                             yes_no(s.is_log_concave),
                             s.first_violation ? std::to_string(*s.first_violation) : "NA"));
    }
    return failed ? k_exit_failure : 0;
  }

  if (args.check == "mode") {
    sink.write("n,modes,expected\n");
    for (const auto& s : shapes) {
      auto modes = std::string{};
      for (auto k : s.modes) {
        modes += (modes.empty() ? "" : " ") + std::to_string(k);
      }
      // The PDA unrooted cherry mode is ceil(n/4) once n > 8.
      auto expected = std::string{"NA"};
      if (asserted && model == ts::Model::pda && rootedness == ts::Rootedness::unrooted &&
          s.n > 8) {
        auto k = ts::nabla(s.n);
        expected = std::to_string(k);
        failed = failed || s.modes != std::vector<int>{static_cast<int>(k)};
      }
      sink.write(fmt::format("{},{},{}\n", s.n, modes, expected));
    }
    return failed ? k_exit_failure : 0;
  }
  throw UsageError("unknown check '" + args.check + "'");
}

struct CountArgs {
  std::string file;
  bool rooted = false;
  std::string out;
};

auto run_count(const CountArgs& args) -> int {
  auto text = std::string{};
  if (args.file == "-") {
    text.assign(std::istreambuf_iterator<char>{std::cin}, {});
  } else {
    auto in = std::ifstream{args.file};
    if (!in) {
      throw UsageError("cannot read " + args.file);
    }
    text.assign(std::istreambuf_iterator<char>{in}, {});
  }
  auto force = args.rooted ? std::optional{ts::Rootedness::rooted} : std::nullopt;
  auto sink = Sink{args.out};
  sink.write("a,b\n");
  for (const auto& tree_text : ts::split_newick_stream(text)) {
    auto tree = ts::parse_newick(tree_text, force);
    auto c = ts::count_subtrees(tree);
    sink.write(fmt::format("{},{}\n", c.a, c.b));
  }
  return 0;
}

struct VerifyArgs {
  int max_n = 8;
};

auto run_verify(const VerifyArgs& args) -> int {
  auto failures = 0;
  auto report = [&](const std::string& check, int n, bool ok) {
    failures += ok ? 0 : 1;
    std::cout << fmt::format("{:<44} n={:<2} {}\n", check, n, ok ? "PASS" : "FAIL");
  };
  const auto unrooted = ts::Rootedness::unrooted;
  const auto rooted = ts::Rootedness::rooted;
  for (auto n = 6; n <= args.max_n; ++n) {
    for (auto model : {ts::Model::yhk, ts::Model::pda}) {
      const auto name = ts::to_string(model);
      const auto dp = ts::joint_unrooted(model, n);
      if (n <= ts::path_enumeration_max_n(model)) {
        report(name + " joint recursion == path enumeration", n,
               dp == ts::exact_by_path_enumeration(model, n, unrooted));
      }
      if (model == ts::Model::pda) {
        report("pda joint recursion == tree enumeration", n,
               dp == ts::exact_by_tree_enumeration(n, unrooted));
      }
      report(name + " cherry marginal == cherry law", n,
             ts::marginal_from_joint(dp, ts::Statistic::cherry).table ==
                 ts::cherry_pmf_unrooted(model, n).table);

      const auto table = ts::moments_from_joint(dp);
      const auto closed = ts::closed_form(model, unrooted, n);
      auto agree = [](const std::optional<ts::Rational>& c, const std::optional<ts::Rational>& t) {
        return !c || (t && *c == *t);
      };
      report(name + " unrooted moments == closed forms", n,
             agree(closed.mean_a, table.mean_a) && agree(closed.mean_b, table.mean_b) &&
                 agree(closed.var_a, table.var_a) && agree(closed.var_b, table.var_b) &&
                 agree(closed.cov_ab, table.cov_ab));

      const auto rooted_joint = joint_for(model, rooted, n);
      report(name + " rooted oracle cherry == rooted cherry law", n,
             ts::marginal_from_joint(rooted_joint, ts::Statistic::cherry).table ==
                 ts::cherry_pmf_rooted(model, n).table);
      const auto rooted_table = ts::moments_from_joint(rooted_joint);
      const auto rooted_closed = ts::closed_form(model, rooted, n);
      report(name + " rooted moments == closed forms", n,
             agree(rooted_closed.mean_a, rooted_table.mean_a) &&
                 agree(rooted_closed.mean_b, rooted_table.mean_b) &&
                 agree(rooted_closed.var_a, rooted_table.var_a) &&
                 agree(rooted_closed.var_b, rooted_table.var_b) &&
                 agree(rooted_closed.cov_ab, rooted_table.cov_ab));
    }
    if (n <= ts::k_pda_path_max_n) {
      report("pda rooted tree enumeration == path enumeration", n,
             ts::exact_by_tree_enumeration(n, rooted) ==
                 ts::exact_by_path_enumeration(ts::Model::pda, n, rooted));
    }
  }
  std::cout << (failures == 0 ? "all checks passed\n"
                              : fmt::format("{} check(s) failed\n", failures));
  return failures == 0 ? 0 : k_exit_failure;
}

}  // namespace

auto main(int argc, char** argv) -> int {
  CLI::App app{"Exact and simulated cherry and pitchfork statistics for random phylogenetic "
               "trees under the YHK and PDA models.\n"
               "Newick: rooted trees carry the label R on the outermost parentheses, e.g. "
               "\"(((1,2),3),4)R;\"."};
  app.require_subcommand(1);
  const auto models = std::string{"yhk or pda"};

  auto gen = GenerateArgs{};
  auto* generate = app.add_subcommand("generate", "grow random trees (Newick) or tally (a,b)");
  generate->add_option("--model", gen.model, models)->required();
  generate->add_option("--n", gen.n, "number of leaves (>= 2)")->required();
  generate->add_flag("--rooted", gen.rooted, "grow rooted trees");
  generate->add_option("--reps", gen.reps, "number of trees")->capture_default_str();
  generate->add_option("--seed", gen.seed, "64-bit seed")->capture_default_str();
  generate->add_option("--out", gen.out, "output file (default stdout)");
  generate->add_flag("--hist", gen.hist, "write the a,b,count histogram instead of trees");
  generate->add_option("--workers", gen.workers, "threads for --hist")->capture_default_str();
  generate->add_flag("--skip-permutation", gen.skip_permutation,
                     "YHK: insert taxa in order 1..n (counts are unaffected)");

  auto dist_args = DistArgs{};
  auto* dist = app.add_subcommand("dist", "exact joint or marginal distribution");
  dist->add_option("--model", dist_args.model, models)->required();
  dist->add_option("--n", dist_args.n, "number of leaves")->required();
  dist->add_flag("--rooted", dist_args.rooted, "rooted trees");
  dist->add_flag("--joint", dist_args.joint, "joint law of (a, b)");
  dist->add_flag("--cherry", dist_args.cherry, "cherry count law");
  dist->add_flag("--pitchfork", dist_args.pitchfork, "pitchfork count law");
  dist->add_option("--format", dist_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  dist->add_option("--out", dist_args.out, "output file (default stdout)");

  auto mom = MomentsArgs{};
  auto* moments = app.add_subcommand("moments", "means, variances, covariance per n");
  moments->add_option("--model", mom.model, models)->required();
  moments->add_option("--n", mom.n, "N or A..B")->required();
  moments->add_flag("--rooted", mom.rooted, "rooted trees");
  moments->add_option("--source", mom.source,
                      "closed (closed forms), table (exact laws), best (closed, else table)")
      ->check(CLI::IsMember({"closed", "table", "best"}))
      ->capture_default_str();
  moments->add_option("--out", mom.out, "output file (default stdout)");

  auto tv = TvdArgs{};
  auto* tvd = app.add_subcommand("tvd", "TV distance between rooted and unrooted cherry laws");
  tvd->add_option("--model", tv.model, "yhk, pda or both")->required();
  tvd->add_option("--n", tv.n, "N or A..B, A >= 4")->required();
  tvd->add_option("--out", tv.out, "output file (default stdout)");

  auto an = AnalyzeArgs{};
  auto* analyze = app.add_subcommand("analyze", "shape checks on the exact laws");
  analyze->add_option("check", an.check, "logconcave, mode, changepoint or identities")
      ->required()
      ->check(CLI::IsMember({"logconcave", "mode", "changepoint", "identities"}));
  analyze->add_option("--model", an.model, models)->capture_default_str();
  analyze->add_option("--n", an.n, "N or A..B")->required();
  analyze->add_flag("--rooted", an.rooted, "rooted trees");
  analyze->add_option("--statistic", an.statistic,
                      "cherry, or pitchfork (reported only, never fails)")
      ->check(CLI::IsMember({"cherry", "pitchfork"}))
      ->capture_default_str();
  analyze->add_option("--out", an.out, "output file (default stdout)");

  auto cnt = CountArgs{};
  auto* count = app.add_subcommand("count", "pitchfork and cherry counts of Newick trees");
  count->add_option("file", cnt.file, "Newick file, one or more trees; - for stdin")->required();
  count->add_flag("--rooted", cnt.rooted, "read every tree as rooted");
  count->add_option("--out", cnt.out, "output file (default stdout)");

  auto ver = VerifyArgs{};
  auto* verify = app.add_subcommand("verify", "recursions against brute-force enumeration");
  verify->add_option("--max-n", ver.max_n, "largest n checked (6..9)")
      ->check(CLI::Range(6, 9))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    auto code = app.exit(err);
    return code == 0 ? 0 : k_exit_usage;
  }

  try {
    if (generate->parsed()) {
      return run_generate(gen);
    }
    if (dist->parsed()) {
      return run_dist(dist_args);
    }
    if (moments->parsed()) {
      return run_moments(mom);
    }
    if (tvd->parsed()) {
      return run_tvd(tv);
    }
    if (analyze->parsed()) {
      return run_analyze(an);
    }
    if (count->parsed()) {
      return run_count(cnt);
    }
    if (verify->parsed()) {
      return run_verify(ver);
    }
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return k_exit_usage;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return k_exit_usage;
  } catch (const ts::NewickError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return k_exit_usage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return k_exit_failure;
  }
  return k_exit_usage;
}
