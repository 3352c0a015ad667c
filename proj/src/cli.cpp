#include "projlin/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_set>

#include <CLI11.hpp>

#include "projlin/arrangement.hpp"
#include "projlin/error.hpp"
#include "projlin/expectation.hpp"
#include "projlin/extrema.hpp"
#include "projlin/montecarlo.hpp"
#include "projlin/numeric.hpp"
#include "projlin/tree.hpp"
#include "projlin/treebank.hpp"

namespace projlin {

namespace {

struct TreeInput {
  std::string heads;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* tree = cmd->add_option("--tree", heads, "Head vector, e.g. \"0 1 1\"");
    auto* path = cmd->add_option("--tree-file", file, "File holding a head vector")
                     ->check(CLI::ExistingFile);
    tree->excludes(path);
    path->excludes(tree);
  }

  RootedTree load() const {
    if (!file.empty()) {
      std::ifstream in(file);
      std::stringstream buffer;
      buffer << in.rdbuf();
      return from_head_vector(parse_head_vector(buffer.str()));
    }
    if (heads.empty()) throw CLI::RequiredError("--tree or --tree-file");
    return from_head_vector(parse_head_vector(heads));
  }
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PROJLIN_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::kParseError, "PROJLIN_SEED is not an unsigned integer");
    }
  }
  return 0;
}

std::string render(const Rational& value, const std::optional<int>& decimal) {
  return decimal ? format_decimal(value, *decimal) : format_rational(value);
}

std::string minima_row(const OptimumEntry& entry) {
  std::string row = std::to_string(entry.n) + ", " + format_rational(entry.value) + ", " +
                    std::to_string(entry.trees.size()) + ", ";
  for (std::size_t i = 0; i < entry.trees.size(); ++i) {
    if (i > 0) row += "; ";
    row += format_head_vector(entry.trees[i]);
  }
  return row;
}

// Exhaustive cross-checks on every rooted tree up to max_n vertices.
bool selfcheck(std::size_t max_n, std::ostream& out) {
  bool all_ok = true;
  auto report = [&](bool ok, const std::string& what) {
    out << (ok ? "PASS " : "FAIL ") << what << '\n';
    all_ok = all_ok && ok;
  };
  MemoTable memo;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::size_t trees = 0;
    bool mean_ok = true, count_ok = true, brute_ok = true, bound_ok = true;
    Rational minimum = expected_D_unconstrained(n) + 1;
    std::unordered_set<std::string> minimizers;
    std::vector<Position> base(n);
    for (std::size_t i = 0; i < n; ++i) base[i] = static_cast<Position>(i + 1);

    for (const RootedTree& tree : enumerate_rooted_trees(n, std::max<std::size_t>(max_n, 10))) {
      ++trees;
      const Rational exact = expected_D_projective(tree);
      const Rational by_recurrence =
          expected_D_projective(tree, ExpectationMethod::kRecurrence);

      BigCount total_d = 0;
      std::uint64_t listed = 0;
      ProjectiveEnumerator stream(tree, kDefaultEnumerationCap);
      LinearArrangement a;
      while (stream.next(a)) {
        ++listed;
        total_d += sum_edge_lengths(tree, a);
      }
      mean_ok = mean_ok && exact == by_recurrence && Rational(total_d, listed) == exact;
      count_ok = count_ok && BigCount(listed) == count_projective(tree);

      if (n <= 7) {
        std::uint64_t projective = 0;
        std::vector<Position> perm = base;
        do {
          if (is_projective(tree, LinearArrangement::from_positions(perm))) ++projective;
        } while (std::next_permutation(perm.begin(), perm.end()));
        brute_ok = brute_ok && projective == listed;
      }

      bound_ok = bound_ok && exact <= expected_D_unconstrained(n);
      const std::string code = canonical_code(tree).str();
      if (exact < minimum) {
        minimum = exact;
        minimizers = {code};
      } else if (exact == minimum) {
        minimizers.insert(code);
      }
    }

    const std::string tag = "n=" + std::to_string(n) + " trees=" + std::to_string(trees);
    report(mean_ok, tag + " enumerated mean of D equals the exact expectation");
    report(count_ok, tag + " enumeration length equals the product of (d+1)!");
    if (n <= 7) report(brute_ok, tag + " projective filter of all n! arrangements agrees");
    report(bound_ok, tag + " expectation bounded by (n^2-1)/3");

    const OptimumEntry& entry = min_expected(n, memo, std::max(max_n, kDefaultMinimaCap));
    std::unordered_set<std::string> dp_codes;
    for (const RootedTree& t : entry.materialize()) dp_codes.insert(canonical_code(t).str());
    report(entry.value == minimum && dp_codes == minimizers,
           tag + " dynamic-programming minima match exhaustive search");
  }
  return all_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Expected sum of edge lengths in random projective arrangements of trees",
               "projlin"};
  app.require_subcommand(1);

  // expected
  TreeInput expected_tree;
  std::string variant = "standard";
  std::string method = "closed";
  std::optional<int> expected_decimal;
  auto* expected = app.add_subcommand("expected", "Exact expected sum of edge lengths");
  expected_tree.attach(expected);
  expected->add_option("--variant", variant, "Edge length definition")
      ->check(CLI::IsMember({"standard", "minus_one"}));
  expected->add_option("--method", method, "Evaluation route")
      ->check(CLI::IsMember({"closed", "recurrence"}));
  expected->add_option("--decimal", expected_decimal, "Print with this many decimals")
      ->check(CLI::NonNegativeNumber);

  // count
  TreeInput count_tree;
  auto* count = app.add_subcommand("count", "Number of projective arrangements");
  count_tree.attach(count);

  // enumerate
  TreeInput enumerate_tree;
  std::uint64_t enumerate_cap = kDefaultEnumerationCap;
  auto* enumerate = app.add_subcommand("enumerate", "List every projective arrangement");
  enumerate_tree.attach(enumerate);
  enumerate->add_option("--cap", enumerate_cap, "Refuse trees with more arrangements");

  // sample
  TreeInput sample_tree;
  std::uint64_t sample_z = 1;
  std::optional<std::uint64_t> sample_seed;
  bool sample_mean = false;
  auto* sample = app.add_subcommand("sample", "Uniformly random projective arrangements");
  sample_tree.attach(sample);
  sample->add_option("--z", sample_z, "Number of samples")->check(CLI::PositiveNumber);
  sample->add_option("--seed", sample_seed, "Seed (default: $PROJLIN_SEED or 0)");
  sample->add_flag("--mean", sample_mean, "Print the Monte Carlo mean of D instead");

  // classes
  std::string class_name;
  std::size_t class_n = 0;
  std::size_t class_k = 0;
  std::optional<int> class_decimal;
  auto* classes = app.add_subcommand("classes", "Closed forms for a tree class");
  classes->add_option("--class", class_name, "Tree class")
      ->required()
      ->check(CLI::IsMember({"star_hub", "star_leaf", "qstar_hub", "qstar_edge_leaf",
                             "qstar_far_leaf", "qstar_bridge", "linear_k"}));
  classes->add_option("--n", class_n, "Number of vertices")->required();
  classes->add_option("--k", class_k, "Root offset for linear_k");
  classes->add_option("--decimal", class_decimal, "Print with this many decimals")
      ->check(CLI::NonNegativeNumber);

  // minima
  std::size_t minima_n = 0;
  std::size_t minima_cap = kDefaultMinimaCap;
  bool minima_all = false;
  auto* minima = app.add_subcommand("minima", "Trees minimizing the expectation");
  minima->add_option("--n", minima_n, "Number of vertices")->required();
  minima->add_option("--cap", minima_cap, "Largest n accepted");
  minima->add_flag("--all", minima_all, "One row for every size from 1 to n");

  // maxima
  std::size_t maxima_n = 0;
  auto* maxima = app.add_subcommand("maxima", "Maximum expectation and its tree");
  maxima->add_option("--n", maxima_n, "Number of vertices")->required();

  // analyze
  std::string input;
  std::vector<std::uint64_t> z_values{10, 100, 1000, 10000};
  std::optional<std::uint64_t> analyze_seed;
  bool filter_punct = false;
  unsigned jobs = 1;
  std::size_t resamples = 1000;
  std::string output = "projlin_report";
  auto* analyze = app.add_subcommand("analyze", "Exact vs Monte Carlo on a CoNLL-U treebank");
  analyze->add_option("--input", input, "CoNLL-U file")->required()->check(CLI::ExistingFile);
  analyze->add_option("--z", z_values, "Sample counts, comma separated")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  analyze->add_option("--seed", analyze_seed, "Seed (default: $PROJLIN_SEED or 0)");
  analyze->add_flag("--filter-punct", filter_punct, "Drop PUNCT tokens");
  analyze->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  analyze->add_option("--resamples", resamples, "Bootstrap resamples")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--output", output,
                      "Output prefix; writes <prefix>_sentences.csv and <prefix>_summary.csv");

  // selfcheck
  std::size_t max_n = 7;
  auto* check = app.add_subcommand("selfcheck", "Exhaustive oracle checks on small trees");
  check->add_option("--max-n", max_n, "Largest tree size checked")
      ->check(CLI::Range(1, 10));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (expected->parsed()) {
      const RootedTree tree = expected_tree.load();
      const auto how =
          method == "closed" ? ExpectationMethod::kClosedForm : ExpectationMethod::kRecurrence;
      const Rational value = variant == "standard" ? expected_D_projective(tree, how)
                                                   : expected_Dprime_projective(tree, how);
      out << render(value, expected_decimal) << '\n';
    } else if (count->parsed()) {
      out << format_count(count_projective(count_tree.load())) << '\n';
    } else if (enumerate->parsed()) {
      const RootedTree tree = enumerate_tree.load();
      ProjectiveEnumerator stream(tree, enumerate_cap);
      LinearArrangement a;
      while (stream.next(a)) out << format_arrangement(a) << '\n';
    } else if (sample->parsed()) {
      const RootedTree tree = sample_tree.load();
      const std::uint64_t seed = sample_seed ? *sample_seed : default_seed();
      if (sample_mean) {
        const MCEstimate estimate = estimate_expected_D(tree, sample_z, seed);
        out << std::setprecision(10) << estimate.mean_D << '\n';
      } else {
        std::mt19937_64 rng(seed);
        ProjectiveSampler sampler(tree);
        for (std::uint64_t i = 0; i < sample_z; ++i) {
          out << format_arrangement(sampler.sample(rng)) << '\n';
        }
      }
    } else if (classes->parsed()) {
      const ClassValues values = class_formula(*parse_tree_class(class_name), class_n, class_k);
      out << "count: " << format_count(values.count) << '\n'
          << "expected: " << render(values.expectation, class_decimal) << '\n';
    } else if (minima->parsed()) {
      MemoTable memo;
      min_expected(minima_n, memo, minima_cap);
      for (std::size_t n = minima_all ? 1 : minima_n; n <= minima_n; ++n) {
        out << minima_row(min_expected(n, memo, minima_cap)) << '\n';
      }
    } else if (maxima->parsed()) {
      const MaximumResult best = max_expected(maxima_n);
      out << format_rational(best.value) << ", "
          << format_head_vector(to_head_vector(best.tree)) << '\n';
    } else if (analyze->parsed()) {
      std::ifstream in(input);
      const auto items = parse_conllu(in, {.filter_punct = filter_punct});
      AnalysisOptions options;
      options.z_values = z_values;
      options.seed = analyze_seed ? *analyze_seed : default_seed();
      options.jobs = jobs;
      options.bootstrap.resamples = resamples;
      const AnalysisReport report = analyze_treebank(items, options);

      const std::string sentences_path = output + "_sentences.csv";
      const std::string summary_path = output + "_summary.csv";
      std::ofstream sentences_csv(sentences_path, std::ios::binary);
      std::ofstream summary_csv(summary_path, std::ios::binary);
      if (!sentences_csv || !summary_csv) {
        throw Error(ErrorKind::kParseError, "cannot write reports with prefix " + output);
      }
      write_sentence_csv(sentences_csv, report);
      write_summary_csv(summary_csv, report);

      std::size_t skipped = 0;
      for (const auto& [reason, k] : report.skipped) skipped += k;
      out << "sentences analyzed: " << report.sentences.size() << '\n'
          << "sentences skipped: " << skipped << '\n';
      for (const auto& [reason, k] : report.skipped) out << "  " << reason << ": " << k << '\n';
      out << "wrote " << sentences_path << '\n' << "wrote " << summary_path << '\n';
    } else if (check->parsed()) {
      return selfcheck(max_n, out) ? kExitOk : kExitSelfcheckFailed;
    }
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << error_kind_name(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::kCapExceeded ? kExitCap : kExitValidation;
  }
  return kExitOk;
}

}  // namespace projlin
