#ifndef PROJLIN_TREEBANK_HPP_
#define PROJLIN_TREEBANK_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "projlin/arrangement.hpp"
#include "projlin/montecarlo.hpp"
#include "projlin/numeric.hpp"
#include "projlin/tree.hpp"

namespace projlin {

struct Token {
  Vertex id = 0;  // compacted, 1..n in surface order
  std::string form;
  std::string upos;
  Vertex head = 0;  // compacted, 0 for the root
};

struct TreebankSentence {
  std::string sentence_id;
  std::vector<Token> tokens;
  RootedTree tree;
  LinearArrangement observed;  // surface order
};

enum class SkipReason {
  kMalformedLine,   // token line without exactly 10 columns
  kMalformedField,  // unparsable ID or HEAD, or ids out of order
  kDanglingHead,    // HEAD names a token that is not in the sentence
  kNoRoot,
  kMultipleRoots,
  kCycle,
  kEmpty,           // no word tokens left
};

std::string_view skip_reason_name(SkipReason reason);

struct SkipRecord {
  std::string sentence_id;
  std::size_t line = 0;  // first line of the sentence block, 1-based
  SkipReason reason = SkipReason::kMalformedLine;
  std::string detail;
};

using ConlluItem = std::variant<TreebankSentence, SkipRecord>;

struct ConlluOptions {
  // Drop tokens with UPOS "PUNCT", reattaching their dependents to the
  // nearest kept ancestor.
  bool filter_punct = false;
};

// Reads one sentence block at a time. Multiword ranges ("3-4") and empty
// nodes ("5.1") are dropped and the remaining ids are compacted to 1..n.
// Problems in a sentence produce a SkipRecord; the stream goes on.
class ConlluReader {
 public:
  explicit ConlluReader(std::istream& in, ConlluOptions options = {});

  std::optional<ConlluItem> next();

 private:
  std::istream* in_;
  ConlluOptions options_;
  std::size_t line_number_ = 0;
  std::size_t ordinal_ = 0;
};

std::vector<ConlluItem> parse_conllu(std::istream& in, ConlluOptions options = {});

// Builds the sentence a head vector describes, with placeholder forms.
TreebankSentence sentence_from_heads(std::string sentence_id, std::span<const Vertex> heads);

struct AnalysisOptions {
  std::vector<std::uint64_t> z_values;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  BootstrapOptions bootstrap;
};

struct SentenceResult {
  std::string sentence_id;
  std::size_t n = 0;
  std::uint64_t d_standard = 0;
  std::uint64_t d_minus_one = 0;
  bool projective = false;
  BigCount projective_count;
  Rational exact_standard;
  Rational exact_minus_one;
  std::vector<MCEstimate> estimates;           // one per z value
  std::vector<std::optional<double>> rel_err;  // empty when the exact value is 0
};

struct AnalysisReport {
  std::vector<std::uint64_t> z_values;
  std::vector<SentenceResult> sentences;
  std::map<std::uint64_t, std::vector<ErrorStats>> summaries;  // keyed by z
  std::map<std::string, std::size_t> skipped;                  // keyed by reason name
};

// Exact and Monte Carlo expectations per sentence. Sentence i (0-based among
// the analyzed sentences) samples with seed ^ i for every z, so results do not
// depend on `jobs`. Trees with one vertex are excluded from error summaries.
AnalysisReport analyze_treebank(std::span<const ConlluItem> items,
                                const AnalysisOptions& options);

// One row per (sentence, z).
void write_sentence_csv(std::ostream& out, const AnalysisReport& report);
// One row per (z, n).
void write_summary_csv(std::ostream& out, const AnalysisReport& report);

}  // namespace projlin

#endif  // PROJLIN_TREEBANK_HPP_
