#include "projlin/arrangement.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "projlin/error.hpp"

namespace projlin {

namespace {

void require_same_size(const RootedTree& tree, const LinearArrangement& arrangement) {
  if (tree.size() != arrangement.size()) {
    throw Error(ErrorKind::kSizeMismatch,
                "arrangement covers " + std::to_string(arrangement.size()) +
                    " positions but the tree has " + std::to_string(tree.size()) +
                    " vertices");
  }
}

}  // namespace

LinearArrangement LinearArrangement::identity(std::size_t n) {
  LinearArrangement a;
  a.position_.resize(n);
  a.vertex_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.position_[i] = static_cast<Position>(i + 1);
    a.vertex_[i] = static_cast<Vertex>(i + 1);
  }
  return a;
}

LinearArrangement LinearArrangement::from_positions(std::vector<Position> position_of) {
  const std::size_t n = position_of.size();
  LinearArrangement a;
  a.vertex_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Position p = position_of[i];
    if (p < 1 || p > n || a.vertex_[p - 1] != 0) {
      throw Error(ErrorKind::kInvalidArrangement,
                  "positions are not a permutation of 1.." + std::to_string(n));
    }
    a.vertex_[p - 1] = static_cast<Vertex>(i + 1);
  }
  a.position_ = std::move(position_of);
  return a;
}

LinearArrangement LinearArrangement::from_order(std::vector<Vertex> vertex_at) {
  const std::size_t n = vertex_at.size();
  LinearArrangement a;
  a.position_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = vertex_at[i];
    if (v < 1 || v > n || a.position_[v - 1] != 0) {
      throw Error(ErrorKind::kInvalidArrangement,
                  "order is not a permutation of 1.." + std::to_string(n));
    }
    a.position_[v - 1] = static_cast<Position>(i + 1);
  }
  a.vertex_ = std::move(vertex_at);
  return a;
}

LinearArrangement LinearArrangement::reversed() const {
  LinearArrangement a;
  a.vertex_.assign(vertex_.rbegin(), vertex_.rend());
  a.position_.resize(position_.size());
  const auto n = static_cast<Position>(position_.size());
  for (std::size_t i = 0; i < position_.size(); ++i) a.position_[i] = n + 1 - position_[i];
  return a;
}

std::string format_arrangement(const LinearArrangement& arrangement) {
  return format_head_vector(arrangement.order());
}

LinearArrangement parse_arrangement(std::string_view text) {
  return LinearArrangement::from_order(parse_head_vector(text));
}

std::uint64_t sum_edge_lengths(const RootedTree& tree, const LinearArrangement& arrangement,
                               LengthVariant variant) {
  require_same_size(tree, arrangement);
  std::uint64_t total = 0;
  for (Vertex v = 1; v <= tree.size(); ++v) {
    auto p = tree.parent(v);
    if (!p) continue;
    const Position a = arrangement.position(v);
    const Position b = arrangement.position(*p);
    total += a > b ? a - b : b - a;
  }
  if (variant == LengthVariant::kMinusOne) total -= tree.size() - 1;
  return total;
}

bool is_projective(const RootedTree& tree, const LinearArrangement& arrangement) {
  require_same_size(tree, arrangement);
  const std::size_t n = tree.size();
  std::vector<Position> lo(n), hi(n);
  std::vector<std::size_t> size(n, 1);
  for (Vertex v = 1; v <= n; ++v) lo[v - 1] = hi[v - 1] = arrangement.position(v);
  auto order = tree.top_down_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (hi[v - 1] - lo[v - 1] + 1 != size[v - 1]) return false;
    if (auto p = tree.parent(v)) {
      lo[*p - 1] = std::min(lo[*p - 1], lo[v - 1]);
      hi[*p - 1] = std::max(hi[*p - 1], hi[v - 1]);
      size[*p - 1] += size[v - 1];
    }
  }
  return true;
}

bool is_planar(const RootedTree& tree, const LinearArrangement& arrangement) {
  require_same_size(tree, arrangement);
  std::vector<std::pair<Position, Position>> spans;
  spans.reserve(tree.size());
  for (Vertex v = 1; v <= tree.size(); ++v) {
    if (auto p = tree.parent(v)) {
      Position a = arrangement.position(v);
      Position b = arrangement.position(*p);
      spans.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  for (std::size_t i = 0; i < spans.size(); ++i) {
    for (std::size_t j = i + 1; j < spans.size(); ++j) {
      auto [a1, b1] = spans[i];
      auto [a2, b2] = spans[j];
      if ((a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1)) return false;
    }
  }
  return true;
}

BigCount count_projective(const RootedTree& tree) {
  std::map<std::size_t, std::size_t> degree_frequency;
  for (Vertex v = 1; v <= tree.size(); ++v) ++degree_frequency[tree.out_degree(v)];
  BigCount total = 1;
  for (auto [degree, frequency] : degree_frequency) {
    if (degree == 0) continue;
    total *= boost::multiprecision::pow(factorial(degree + 1),
                                        static_cast<unsigned>(frequency));
  }
  return total;
}

ProjectiveEnumerator::ProjectiveEnumerator(const RootedTree& tree, std::uint64_t cap)
    : tree_(&tree) {
  const BigCount count = count_projective(tree);
  if (count > cap) {
    throw Error(ErrorKind::kCapExceeded, "tree has " + count.str() +
                                             " projective arrangements, above the cap of " +
                                             std::to_string(cap));
  }
  total_ = count.convert_to<std::uint64_t>();

  const SubtreeMetrics metrics = compute_metrics(tree);
  subtree_size_ = metrics.size;
  permutation_.resize(tree.size());
  for (Vertex v : tree.top_down_order()) {
    const std::size_t d = tree.out_degree(v);
    auto& perm = permutation_[v - 1];
    perm.resize(d + 1);
    for (std::uint32_t i = 0; i <= d; ++i) perm[i] = i;
    if (d > 0) movable_.push_back(v);
  }
}

bool ProjectiveEnumerator::advance() {
  for (auto it = movable_.rbegin(); it != movable_.rend(); ++it) {
    auto& perm = permutation_[*it - 1];
    if (std::next_permutation(perm.begin(), perm.end())) return true;
  }
  return false;
}

void ProjectiveEnumerator::place(std::vector<Position>& position_of) const {
  position_of.assign(tree_->size(), 0);
  std::vector<std::pair<Vertex, Position>> work{{tree_->root(), 1}};
  while (!work.empty()) {
    auto [v, cursor] = work.back();
    work.pop_back();
    auto kids = tree_->children(v);
    for (std::uint32_t segment : permutation_[v - 1]) {
      if (segment == 0) {
        position_of[v - 1] = cursor++;
      } else {
        const Vertex c = kids[segment - 1];
        work.emplace_back(c, cursor);
        cursor += static_cast<Position>(subtree_size_[c - 1]);
      }
    }
  }
}

bool ProjectiveEnumerator::next(LinearArrangement& out) {
  if (done_) return false;
  if (started_ && !advance()) {
    done_ = true;
    return false;
  }
  started_ = true;
  std::vector<Position> position_of;
  place(position_of);
  out = LinearArrangement::from_positions(std::move(position_of));
  return true;
}

std::vector<LinearArrangement> enumerate_projective(const RootedTree& tree,
                                                    std::uint64_t cap) {
  ProjectiveEnumerator stream(tree, cap);
  std::vector<LinearArrangement> all;
  all.reserve(stream.total());
  LinearArrangement a;
  while (stream.next(a)) all.push_back(a);
  return all;
}

ProjectiveSampler::ProjectiveSampler(const RootedTree& tree) : tree_(&tree) {
  const std::size_t n = tree.size();
  subtree_size_ = compute_metrics(tree).size;
  segment_offset_.resize(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    segment_offset_[v] = segment_offset_[v - 1] + tree.out_degree(v) + 1;
  }
  segments_.resize(segment_offset_[n]);
  for (Vertex v = 1; v <= n; ++v) {
    std::size_t at = segment_offset_[v - 1];
    segments_[at++] = v;
    for (Vertex c : tree.children(v)) segments_[at++] = c;
  }
  position_.resize(n);
}

void ProjectiveSampler::draw(std::mt19937_64& rng) {
  const std::size_t n = tree_->size();
  // Shuffling from any starting order yields a uniform permutation.
  for (Vertex v = 1; v <= n; ++v) {
    const std::size_t begin = segment_offset_[v - 1];
    const std::size_t len = segment_offset_[v] - begin;
    for (std::size_t i = len - 1; i > 0; --i) {
      std::uniform_int_distribution<std::size_t> pick(0, i);
      std::swap(segments_[begin + i], segments_[begin + pick(rng)]);
    }
  }
  stack_.clear();
  stack_.emplace_back(tree_->root(), 1);
  while (!stack_.empty()) {
    auto [v, cursor] = stack_.back();
    stack_.pop_back();
    for (std::size_t i = segment_offset_[v - 1]; i < segment_offset_[v]; ++i) {
      const Vertex s = segments_[i];
      if (s == v) {
        position_[v - 1] = cursor++;
      } else {
        stack_.emplace_back(s, cursor);
        cursor += static_cast<Position>(subtree_size_[s - 1]);
      }
    }
  }
}

LinearArrangement ProjectiveSampler::sample(std::mt19937_64& rng) {
  draw(rng);
  return LinearArrangement::from_positions(position_);
}

std::uint64_t ProjectiveSampler::sample_sum_edge_lengths(std::mt19937_64& rng) {
  draw(rng);
  std::uint64_t total = 0;
  for (Vertex v = 1; v <= tree_->size(); ++v) {
    if (auto p = tree_->parent(v)) {
      const Position a = position_[v - 1];
      const Position b = position_[*p - 1];
      total += a > b ? a - b : b - a;
    }
  }
  return total;
}

LinearArrangement sample_projective(const RootedTree& tree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ProjectiveSampler sampler(tree);
  return sampler.sample(rng);
}

}  // namespace projlin
