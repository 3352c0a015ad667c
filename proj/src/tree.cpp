#include "projlin/tree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "projlin/error.hpp"

namespace projlin {

namespace {

std::string vertex_str(std::size_t v) { return std::to_string(v); }

}  // namespace

RootedTree build_tree(std::size_t n, std::span<const ParentLink> links, Vertex root) {
  if (n == 0) throw Error(ErrorKind::kUnsupportedSize, "a tree needs at least one vertex");
  if (root < 1 || root > n) {
    throw Error(ErrorKind::kBadRoot, "root " + vertex_str(root) + " is not in [1, " +
                                         vertex_str(n) + "]");
  }

  std::vector<Vertex> parent(n, 0);
  for (const ParentLink& link : links) {
    if (link.child < 1 || link.child > n || link.parent < 1 || link.parent > n) {
      throw Error(ErrorKind::kInvalidVertex,
                  "link (" + vertex_str(link.child) + ", " + vertex_str(link.parent) +
                      ") refers to a vertex outside [1, " + vertex_str(n) + "]");
    }
    if (link.child == link.parent) {
      throw Error(ErrorKind::kCycleDetected,
                  "vertex " + vertex_str(link.child) + " is its own parent");
    }
    if (parent[link.child - 1] != 0) {
      throw Error(ErrorKind::kMultipleHeads,
                  "vertex " + vertex_str(link.child) + " has more than one parent");
    }
    parent[link.child - 1] = link.parent;
  }

  // Parent pointers form a functional graph; walk each chain once.
  {
    enum : std::uint8_t { kUnseen, kOnPath, kDone };
    std::vector<std::uint8_t> state(n, kUnseen);
    std::vector<Vertex> path;
    for (Vertex start = 1; start <= n; ++start) {
      Vertex v = start;
      path.clear();
      while (v != 0 && state[v - 1] == kUnseen) {
        state[v - 1] = kOnPath;
        path.push_back(v);
        v = parent[v - 1];
      }
      if (v != 0 && state[v - 1] == kOnPath) {
        throw Error(ErrorKind::kCycleDetected,
                    "directed cycle through vertex " + vertex_str(v));
      }
      for (Vertex u : path) state[u - 1] = kDone;
    }
  }

  if (parent[root - 1] != 0) {
    throw Error(ErrorKind::kBadRoot, "root " + vertex_str(root) + " has a parent");
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (v != root && parent[v - 1] == 0) {
      throw Error(ErrorKind::kDisconnected,
                  "vertex " + vertex_str(v) + " is not reachable from the root");
    }
  }

  RootedTree tree;
  tree.root_ = root;
  tree.child_offset_.assign(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    if (parent[v - 1] != 0) ++tree.child_offset_[parent[v - 1]];
  }
  std::partial_sum(tree.child_offset_.begin(), tree.child_offset_.end(),
                   tree.child_offset_.begin());
  tree.child_list_.resize(n - 1);
  {
    std::vector<std::size_t> cursor(tree.child_offset_.begin(), tree.child_offset_.end() - 1);
    for (const ParentLink& link : links) {
      tree.child_list_[cursor[link.parent - 1]++] = link.child;
    }
  }
  tree.parent_ = std::move(parent);

  tree.order_.reserve(n);
  tree.order_.push_back(root);
  for (std::size_t i = 0; i < tree.order_.size(); ++i) {
    for (Vertex c : tree.children(tree.order_[i])) tree.order_.push_back(c);
  }
  return tree;
}

RootedTree build_from_edges(std::size_t n,
                            std::span<const std::pair<Vertex, Vertex>> edges,
                            Vertex root) {
  if (n == 0) throw Error(ErrorKind::kUnsupportedSize, "a tree needs at least one vertex");
  if (root < 1 || root > n) {
    throw Error(ErrorKind::kBadRoot, "root " + vertex_str(root) + " is out of range");
  }
  if (edges.size() != n - 1) {
    throw Error(ErrorKind::kDisconnected, "a tree on " + vertex_str(n) + " vertices needs " +
                                              vertex_str(n - 1) + " edges");
  }
  std::vector<std::vector<Vertex>> adjacent(n);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw Error(ErrorKind::kInvalidVertex, "edge endpoint out of range");
    }
    adjacent[u - 1].push_back(v);
    adjacent[v - 1].push_back(u);
  }
  std::vector<ParentLink> links;
  links.reserve(n - 1);
  std::vector<bool> seen(n, false);
  std::vector<Vertex> queue{root};
  seen[root - 1] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Vertex u = queue[i];
    for (Vertex v : adjacent[u - 1]) {
      if (seen[v - 1]) continue;
      seen[v - 1] = true;
      links.push_back({v, u});
      queue.push_back(v);
    }
  }
  if (queue.size() != n) {
    throw Error(ErrorKind::kDisconnected, "edge list does not span all vertices");
  }
  return build_tree(n, links, root);
}

RootedTree from_head_vector(std::span<const Vertex> heads) {
  const std::size_t n = heads.size();
  if (n == 0) throw Error(ErrorKind::kUnsupportedSize, "empty head vector");
  std::vector<ParentLink> links;
  links.reserve(n - 1);
  Vertex root = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = static_cast<Vertex>(i + 1);
    if (heads[i] == 0) {
      if (root != 0) {
        throw Error(ErrorKind::kDisconnected, "vertices " + vertex_str(root) + " and " +
                                                  vertex_str(v) + " both have head 0");
      }
      root = v;
    } else if (heads[i] > n) {
      throw Error(ErrorKind::kInvalidVertex,
                  "head " + vertex_str(heads[i]) + " of vertex " + vertex_str(v) +
                      " is out of range");
    } else {
      links.push_back({v, heads[i]});
    }
  }
  if (root == 0) throw Error(ErrorKind::kBadRoot, "no vertex has head 0");
  return build_tree(n, links, root);
}

std::vector<Vertex> to_head_vector(const RootedTree& tree) {
  std::vector<Vertex> heads(tree.size(), 0);
  for (Vertex v = 1; v <= tree.size(); ++v) heads[v - 1] = tree.parent(v).value_or(0);
  return heads;
}

std::vector<Vertex> parse_head_vector(std::string_view text) {
  std::vector<Vertex> heads;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
                               text[i] == '\r' || text[i] == ',')) {
      ++i;
    }
    if (i == text.size()) break;
    Vertex value = 0;
    const char* first = text.data() + i;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || (ptr != last && *ptr != ' ' && *ptr != '\t' && *ptr != '\n' &&
                              *ptr != '\r' && *ptr != ',')) {
      throw Error(ErrorKind::kParseError,
                  "head vector entry at offset " + std::to_string(i) + " is not a count");
    }
    heads.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  if (heads.empty()) throw Error(ErrorKind::kParseError, "empty head vector");
  return heads;
}

std::string format_head_vector(std::span<const Vertex> heads) {
  std::string text;
  for (std::size_t i = 0; i < heads.size(); ++i) {
    if (i > 0) text.push_back(' ');
    text += std::to_string(heads[i]);
  }
  return text;
}

SubtreeMetrics compute_metrics(const RootedTree& tree) {
  const std::size_t n = tree.size();
  SubtreeMetrics metrics;
  metrics.size.assign(n, 1);
  metrics.out_degree.assign(n, 0);
  auto order = tree.top_down_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    metrics.out_degree[v - 1] = tree.out_degree(v);
    if (auto p = tree.parent(v)) metrics.size[*p - 1] += metrics.size[v - 1];
  }
  return metrics;
}

namespace {

// Codes of every subtree, plus the children of each vertex sorted by code.
struct SubtreeCodes {
  std::vector<std::string> code;
  std::vector<std::vector<Vertex>> sorted_children;
};

SubtreeCodes compute_subtree_codes(const RootedTree& tree) {
  const std::size_t n = tree.size();
  SubtreeCodes out;
  out.code.resize(n);
  out.sorted_children.resize(n);
  auto order = tree.top_down_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    auto& kids = out.sorted_children[v - 1];
    kids.assign(tree.children(v).begin(), tree.children(v).end());
    std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) {
      return out.code[a - 1] < out.code[b - 1];
    });
    std::string& code = out.code[v - 1];
    code.push_back('(');
    for (Vertex c : kids) code += out.code[c - 1];
    code.push_back(')');
  }
  return out;
}

}  // namespace

CanonicalCode canonical_code(const RootedTree& tree) {
  SubtreeCodes codes = compute_subtree_codes(tree);
  return CanonicalCode(std::move(codes.code[tree.root() - 1]));
}

std::vector<Vertex> canonical_head_vector(const RootedTree& tree) {
  const SubtreeCodes codes = compute_subtree_codes(tree);
  std::vector<Vertex> heads(tree.size(), 0);
  std::vector<Vertex> label(tree.size(), 0);
  std::vector<Vertex> stack{tree.root()};
  Vertex next = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    label[v - 1] = ++next;
    if (auto p = tree.parent(v)) heads[next - 1] = label[*p - 1];
    const auto& kids = codes.sorted_children[v - 1];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return heads;
}

std::string_view tree_class_name(TreeClass cls) {
  switch (cls) {
    case TreeClass::kStarHub: return "star_hub";
    case TreeClass::kStarLeaf: return "star_leaf";
    case TreeClass::kQuasiStarHub: return "qstar_hub";
    case TreeClass::kQuasiStarHubLeaf: return "qstar_edge_leaf";
    case TreeClass::kQuasiStarFarLeaf: return "qstar_far_leaf";
    case TreeClass::kQuasiStarBridge: return "qstar_bridge";
    case TreeClass::kLinear: return "linear_k";
  }
  return "unknown";
}

std::optional<TreeClass> parse_tree_class(std::string_view name) {
  for (TreeClass cls : {TreeClass::kStarHub, TreeClass::kStarLeaf, TreeClass::kQuasiStarHub,
                        TreeClass::kQuasiStarHubLeaf, TreeClass::kQuasiStarFarLeaf,
                        TreeClass::kQuasiStarBridge, TreeClass::kLinear}) {
    if (tree_class_name(cls) == name) return cls;
  }
  return std::nullopt;
}

std::size_t normalize_linear_offset(std::size_t n, std::size_t k) {
  if (n == 0 || k > n - 1) {
    throw Error(ErrorKind::kUnsupportedSize,
                "linear tree offset " + vertex_str(k) + " exceeds n - 1 for n = " +
                    vertex_str(n));
  }
  return std::min(k, n - 1 - k);
}

RootedTree make_class(TreeClass cls, std::size_t n, std::size_t k) {
  const bool quasi = cls == TreeClass::kQuasiStarHub || cls == TreeClass::kQuasiStarHubLeaf ||
                     cls == TreeClass::kQuasiStarFarLeaf || cls == TreeClass::kQuasiStarBridge;
  if (n < 1 || (cls == TreeClass::kStarLeaf && n < 2) || (quasi && n < 4)) {
    throw Error(ErrorKind::kUnsupportedSize,
                std::string(tree_class_name(cls)) + " is undefined for n = " + vertex_str(n));
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n - 1);
  Vertex root = 1;
  switch (cls) {
    case TreeClass::kStarHub:
    case TreeClass::kStarLeaf:
      // hub 1, leaves 2..n
      for (Vertex v = 2; v <= n; ++v) edges.emplace_back(1, v);
      root = cls == TreeClass::kStarHub ? 1 : 2;
      break;
    case TreeClass::kQuasiStarHub:
    case TreeClass::kQuasiStarHubLeaf:
    case TreeClass::kQuasiStarFarLeaf:
    case TreeClass::kQuasiStarBridge:
      // hub 1, bridge 2, far leaf 3 hanging from the bridge, hub leaves 4..n
      edges.emplace_back(1, 2);
      edges.emplace_back(2, 3);
      for (Vertex v = 4; v <= n; ++v) edges.emplace_back(1, v);
      root = cls == TreeClass::kQuasiStarHub       ? 1
             : cls == TreeClass::kQuasiStarBridge  ? 2
             : cls == TreeClass::kQuasiStarFarLeaf ? 3
                                                   : 4;
      break;
    case TreeClass::kLinear:
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
      root = static_cast<Vertex>(normalize_linear_offset(n, k) + 1);
      break;
  }
  return build_from_edges(n, edges, root);
}

}  // namespace projlin
