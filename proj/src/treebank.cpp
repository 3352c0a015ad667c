#include "projlin/treebank.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <thread>
#include <utility>

#include "projlin/error.hpp"
#include "projlin/expectation.hpp"

namespace projlin {

namespace {

struct RawToken {
  std::uint64_t id = 0;
  std::string form;
  std::string upos;
  std::uint64_t head = 0;
};

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::optional<std::uint64_t> parse_count(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted.push_back('"');
    quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.10g", value);
  return buffer;
}

SentenceResult analyze_sentence(const TreebankSentence& sentence, std::uint64_t seed,
                                std::span<const std::uint64_t> z_values) {
  SentenceResult result;
  const RootedTree& tree = sentence.tree;
  const SubtreeMetrics metrics = compute_metrics(tree);
  result.sentence_id = sentence.sentence_id;
  result.n = tree.size();
  result.d_standard = sum_edge_lengths(tree, sentence.observed, LengthVariant::kStandard);
  result.d_minus_one = sum_edge_lengths(tree, sentence.observed, LengthVariant::kMinusOne);
  result.projective = is_projective(tree, sentence.observed);
  result.projective_count = count_projective(tree);
  result.exact_standard = expected_D_projective(tree, metrics);
  result.exact_minus_one = expected_Dprime_projective(tree);
  for (std::uint64_t z : z_values) {
    const MCEstimate estimate = estimate_expected_D(tree, z, seed);
    result.estimates.push_back(estimate);
    if (result.exact_standard > 0) {
      result.rel_err.emplace_back(relative_error(estimate.mean_D, result.exact_standard));
    } else {
      result.rel_err.emplace_back(std::nullopt);
    }
  }
  return result;
}

}  // namespace

std::string_view skip_reason_name(SkipReason reason) {
  switch (reason) {
    case SkipReason::kMalformedLine: return "malformed_line";
    case SkipReason::kMalformedField: return "malformed_field";
    case SkipReason::kDanglingHead: return "dangling_head";
    case SkipReason::kNoRoot: return "no_root";
    case SkipReason::kMultipleRoots: return "multiple_roots";
    case SkipReason::kCycle: return "cycle";
    case SkipReason::kEmpty: return "empty";
  }
  return "unknown";
}

ConlluReader::ConlluReader(std::istream& in, ConlluOptions options)
    : in_(&in), options_(options) {}

std::optional<ConlluItem> ConlluReader::next() {
  std::vector<std::pair<std::size_t, std::string>> block;
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_number_;
    if (trim(line).empty()) {
      if (block.empty()) continue;
      break;
    }
    block.emplace_back(line_number_, line);
  }
  if (block.empty()) return std::nullopt;

  ++ordinal_;
  const std::size_t first_line = block.front().first;
  std::string sentence_id = "s" + std::to_string(ordinal_);
  for (const auto& [number, text] : block) {
    std::string_view body = trim(text);
    if (!body.starts_with('#')) continue;
    body.remove_prefix(1);
    body = trim(body);
    if (body.starts_with("sent_id")) {
      body.remove_prefix(7);
      body = trim(body);
      if (body.starts_with('=')) {
        body.remove_prefix(1);
        sentence_id = std::string(trim(body));
      }
    }
  }

  auto skip = [&](SkipReason reason, std::string detail) -> ConlluItem {
    return SkipRecord{sentence_id, first_line, reason, std::move(detail)};
  };

  std::vector<RawToken> raw;
  for (const auto& [number, text] : block) {
    std::string_view body = text;
    if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
    if (body.starts_with('#')) continue;
    const auto fields = split_tabs(body);
    if (fields.size() != 10) {
      return skip(SkipReason::kMalformedLine, "line " + std::to_string(number) + " has " +
                                                  std::to_string(fields.size()) +
                                                  " columns instead of 10");
    }
    if (fields[0].find_first_of("-.") != std::string_view::npos) continue;
    const auto id = parse_count(fields[0]);
    const auto head = parse_count(fields[6]);
    if (!id || *id == 0 || !head) {
      return skip(SkipReason::kMalformedField,
                  "line " + std::to_string(number) + " has an unparsable ID or HEAD");
    }
    raw.push_back({*id, std::string(fields[1]), std::string(fields[3]), *head});
  }
  if (raw.empty()) return skip(SkipReason::kEmpty, "no word tokens");

  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (raw[i].id <= raw[i - 1].id) {
      return skip(SkipReason::kMalformedField, "token ids are not increasing");
    }
  }
  auto compact = [&](std::uint64_t original) -> std::optional<Vertex> {
    auto it = std::lower_bound(raw.begin(), raw.end(), original,
                               [](const RawToken& t, std::uint64_t id) { return t.id < id; });
    if (it == raw.end() || it->id != original) return std::nullopt;
    return static_cast<Vertex>(it - raw.begin() + 1);
  };

  std::vector<Vertex> heads(raw.size(), 0);
  std::size_t roots = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].head == 0) {
      ++roots;
      continue;
    }
    auto h = compact(raw[i].head);
    if (!h) {
      return skip(SkipReason::kDanglingHead, "token " + std::to_string(raw[i].id) +
                                                 " has head " + std::to_string(raw[i].head) +
                                                 " which is not a word token");
    }
    heads[i] = *h;
  }
  if (roots == 0) return skip(SkipReason::kNoRoot, "no token has head 0");
  if (roots > 1) {
    return skip(SkipReason::kMultipleRoots, std::to_string(roots) + " tokens have head 0");
  }
  try {
    (void)from_head_vector(heads);
  } catch (const Error& e) {
    return skip(SkipReason::kCycle, e.what());
  }

  std::vector<bool> keep(raw.size(), true);
  if (options_.filter_punct) {
    for (std::size_t i = 0; i < raw.size(); ++i) keep[i] = raw[i].upos != "PUNCT";
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (heads[i] == 0 && !keep[i]) {
        return skip(SkipReason::kNoRoot, "the root token is punctuation");
      }
    }
  }
  std::vector<Vertex> new_id(raw.size(), 0);
  Vertex next_id = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (keep[i]) new_id[i] = ++next_id;
  }
  if (next_id == 0) return skip(SkipReason::kEmpty, "no word tokens left after filtering");

  TreebankSentence sentence;
  sentence.sentence_id = sentence_id;
  std::vector<Vertex> kept_heads;
  kept_heads.reserve(next_id);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!keep[i]) continue;
    Vertex h = heads[i];
    while (h != 0 && !keep[h - 1]) h = heads[h - 1];
    const Vertex head = h == 0 ? 0 : new_id[h - 1];
    kept_heads.push_back(head);
    sentence.tokens.push_back({new_id[i], raw[i].form, raw[i].upos, head});
  }
  sentence.tree = from_head_vector(kept_heads);
  sentence.observed = LinearArrangement::identity(kept_heads.size());
  return sentence;
}

std::vector<ConlluItem> parse_conllu(std::istream& in, ConlluOptions options) {
  ConlluReader reader(in, options);
  std::vector<ConlluItem> items;
  while (auto item = reader.next()) items.push_back(std::move(*item));
  return items;
}

TreebankSentence sentence_from_heads(std::string sentence_id, std::span<const Vertex> heads) {
  TreebankSentence sentence;
  sentence.sentence_id = std::move(sentence_id);
  sentence.tree = from_head_vector(heads);
  for (std::size_t i = 0; i < heads.size(); ++i) {
    sentence.tokens.push_back(
        {static_cast<Vertex>(i + 1), "w" + std::to_string(i + 1), "X", heads[i]});
  }
  sentence.observed = LinearArrangement::identity(heads.size());
  return sentence;
}

AnalysisReport analyze_treebank(std::span<const ConlluItem> items,
                                const AnalysisOptions& options) {
  if (options.z_values.empty()) {
    throw Error(ErrorKind::kOutOfRange, "at least one sample count z is needed");
  }
  AnalysisReport report;
  report.z_values = options.z_values;

  std::vector<const TreebankSentence*> sentences;
  for (const ConlluItem& item : items) {
    if (const auto* s = std::get_if<TreebankSentence>(&item)) {
      sentences.push_back(s);
    } else {
      ++report.skipped[std::string(skip_reason_name(std::get<SkipRecord>(item).reason))];
    }
  }

  report.sentences.resize(sentences.size());
  auto work = [&](std::size_t i) {
    report.sentences[i] = analyze_sentence(*sentences[i], options.seed ^ i, options.z_values);
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1 || sentences.size() < 2) {
    for (std::size_t i = 0; i < sentences.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = cursor++; i < sentences.size(); i = cursor++) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (std::size_t zi = 0; zi < options.z_values.size(); ++zi) {
    std::vector<ErrorRecord> records;
    for (const SentenceResult& r : report.sentences) {
      if (r.rel_err[zi]) records.push_back({r.n, *r.rel_err[zi]});
    }
    auto& summary = report.summaries[options.z_values[zi]];
    if (!records.empty()) summary = aggregate_errors(records, options.bootstrap);
  }
  return report;
}

void write_sentence_csv(std::ostream& out, const AnalysisReport& report) {
  out << "sentence_id,n,D_standard,D_minus_one,projective,N_pr,"
         "E_pr_D_standard,E_pr_D_standard_value,E_pr_D_minus_one,"
         "z,mc_mean_D_standard,rel_err_standard\n";
  for (const SentenceResult& r : report.sentences) {
    for (std::size_t zi = 0; zi < r.estimates.size(); ++zi) {
      out << csv_field(r.sentence_id) << ',' << r.n << ',' << r.d_standard << ','
          << r.d_minus_one << ',' << (r.projective ? 1 : 0) << ','
          << format_count(r.projective_count) << ',' << format_rational(r.exact_standard)
          << ',' << format_real(to_double(r.exact_standard)) << ','
          << format_rational(r.exact_minus_one) << ',' << r.estimates[zi].z << ','
          << format_real(r.estimates[zi].mean_D) << ','
          << (r.rel_err[zi] ? format_real(*r.rel_err[zi]) : std::string("NA")) << '\n';
    }
  }
}

void write_summary_csv(std::ostream& out, const AnalysisReport& report) {
  out << "z,n,count,mean_err,ci_low,ci_high,min_err,max_err\n";
  for (const auto& [z, rows] : report.summaries) {
    for (const ErrorStats& s : rows) {
      out << z << ',' << s.n << ',' << s.samples << ',' << format_real(s.mean_err) << ','
          << format_real(s.ci_low) << ',' << format_real(s.ci_high) << ','
          << format_real(s.min_err) << ',' << format_real(s.max_err) << '\n';
    }
  }
}

}  // namespace projlin
