#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "jcouple/coupling.hpp"

namespace jcouple {

/// Builds trees by inserting leaf k above any of the 2k-3 existing nodes of a
/// tree with k-1 leaves. Each insertion sequence yields a distinct unordered
/// tree, which is where the (2n-3)!! count comes from.
class CouplingTreeBuilder {
 public:
  explicit CouplingTreeBuilder(std::size_t n) : n_(n) {
    tree_.nodes_.reserve(2 * n);
    tree_.nodes_.push_back({1, -1, -1, -1});
    tree_.root_ = 0;
  }

  void run(const std::function<void(const CouplingTree&)>& visit) { grow(2, visit); }

 private:
  void grow(std::size_t next_leaf, const std::function<void(const CouplingTree&)>& visit) {
    if (next_leaf > n_) {
      visit(tree_);
      return;
    }
    const int existing = static_cast<int>(tree_.nodes_.size());
    for (int v = 0; v < existing; ++v) {
      insert_above(v, static_cast<int>(next_leaf));
      grow(next_leaf + 1, visit);
      remove_last(v);
    }
  }

  void insert_above(int v, int leaf_label) {
    auto& nodes = tree_.nodes_;
    const int leaf = static_cast<int>(nodes.size());
    const int vertex = leaf + 1;
    const int parent = nodes[v].parent;
    nodes.push_back({leaf_label, -1, -1, vertex});
    nodes.push_back({0, v, leaf, parent});
    if (parent < 0) {
      tree_.root_ = vertex;
    } else if (nodes[parent].first == v) {
      nodes[parent].first = vertex;
    } else {
      nodes[parent].second = vertex;
    }
    nodes[v].parent = vertex;
  }

  void remove_last(int v) {
    auto& nodes = tree_.nodes_;
    const int vertex = static_cast<int>(nodes.size()) - 1;
    const int parent = nodes[vertex].parent;
    if (parent < 0) {
      tree_.root_ = v;
    } else if (nodes[parent].first == vertex) {
      nodes[parent].first = v;
    } else {
      nodes[parent].second = v;
    }
    nodes[v].parent = parent;
    nodes.pop_back();
    nodes.pop_back();
  }

  std::size_t n_;
  CouplingTree tree_;
};

namespace {

struct Rendered {
  int min_leaf;
  std::string text;
};

Rendered render(const std::vector<CouplingTree::Node>& nodes, int index) {
  const auto& node = nodes[index];
  if (node.leaf > 0) return {node.leaf, std::to_string(node.leaf)};
  Rendered a = render(nodes, node.first);
  Rendered b = render(nodes, node.second);
  if (b.min_leaf < a.min_leaf) std::swap(a, b);
  return {a.min_leaf, "(" + a.text + "," + b.text + ")"};
}

int min_leaf(const std::vector<CouplingTree::Node>& nodes, int index) {
  const auto& node = nodes[index];
  if (node.leaf > 0) return node.leaf;
  return std::min(min_leaf(nodes, node.first), min_leaf(nodes, node.second));
}

void collect_leaves(const std::vector<CouplingTree::Node>& nodes, int index, std::vector<int>& out) {
  const auto& node = nodes[index];
  if (node.leaf > 0) {
    out.push_back(node.leaf);
    return;
  }
  collect_leaves(nodes, node.first, out);
  collect_leaves(nodes, node.second, out);
}

std::string dot_escape(const std::string& text) {
  std::string out;
  for (const char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

CouplingTree CouplingTree::sequential(std::size_t n) {
  if (n < 1) throw DomainError("a coupling tree needs at least one leaf");
  CouplingTree tree;
  tree.nodes_.push_back({1, -1, -1, -1});
  int top = 0;
  for (std::size_t k = 2; k <= n; ++k) {
    const int leaf = static_cast<int>(tree.nodes_.size());
    const int vertex = leaf + 1;
    tree.nodes_.push_back({static_cast<int>(k), -1, -1, vertex});
    tree.nodes_.push_back({0, top, leaf, -1});
    tree.nodes_[top].parent = vertex;
    top = vertex;
  }
  tree.root_ = top;
  return tree;
}

std::string CouplingTree::canonical() const { return render(nodes_, root_).text; }

std::uint64_t coupling_scheme_count(std::size_t n) {
  if (n < 2) throw DomainError("coupling schemes need at least two momenta");
  std::uint64_t count = 1;
  for (std::uint64_t k = 3; k <= 2 * n - 3; k += 2) {
    if (count > std::numeric_limits<std::uint64_t>::max() / k) throw DomainError("scheme count overflows 64 bits");
    count *= k;
  }
  return count;
}

void for_each_coupling_tree(std::size_t n, const std::function<void(const CouplingTree&)>& visit,
                            std::uint64_t max_trees) {
  const std::uint64_t count = coupling_scheme_count(n);
  if (count > max_trees) {
    throw DomainError(std::to_string(n) + " momenta give " + std::to_string(count) + " coupling trees, above the limit " +
                      std::to_string(max_trees));
  }
  CouplingTreeBuilder(n).run(visit);
}

std::vector<CouplingTree> enumerate_coupling_trees(std::size_t n, std::uint64_t max_trees) {
  std::vector<CouplingTree> out;
  out.reserve(coupling_scheme_count(n) <= max_trees ? coupling_scheme_count(n) : 0);
  for_each_coupling_tree(n, [&](const CouplingTree& t) { out.push_back(t); }, max_trees);
  return out;
}

std::string export_dot(const CouplingTree& tree, std::span<const std::string> labels) {
  const auto& nodes = tree.nodes();
  if (labels.size() != tree.leaf_count()) {
    throw DomainError("export_dot needs " + std::to_string(tree.leaf_count()) + " labels, got " +
                      std::to_string(labels.size()));
  }

  auto edge_label = [&](int index) {
    std::vector<int> leaves;
    collect_leaves(nodes, index, leaves);
    std::sort(leaves.begin(), leaves.end());
    std::string joined;
    for (const int leaf : leaves) joined += labels[leaf - 1];
    return "j" + joined + "m" + joined;
  };

  // CG vertices are numbered in post-order with children visited by smallest leaf.
  std::vector<int> vertex_id(nodes.size(), 0);
  std::vector<std::pair<int, int>> edges;  // (from node, to node); -1 is the outgoing terminal
  int next_id = 0;
  std::function<void(int)> walk = [&](int index) {
    const auto& node = nodes[index];
    if (node.leaf > 0) return;
    int a = node.first;
    int b = node.second;
    if (min_leaf(nodes, b) < min_leaf(nodes, a)) std::swap(a, b);
    walk(a);
    walk(b);
    vertex_id[index] = ++next_id;
    edges.emplace_back(a, index);
    edges.emplace_back(b, index);
  };
  walk(tree.root());
  edges.emplace_back(tree.root(), -1);

  auto name = [&](int index) {
    if (index < 0) return std::string("out");
    if (nodes[index].leaf > 0) return "in" + std::to_string(nodes[index].leaf);
    return "cg" + std::to_string(vertex_id[index]);
  };

  std::ostringstream dot;
  dot << "digraph coupling {\n";
  dot << "  rankdir=LR;\n";
  dot << "  node [shape=point];\n";
  for (std::size_t leaf = 1; leaf <= labels.size(); ++leaf) dot << "  in" << leaf << ";\n";
  for (int id = 1; id <= next_id; ++id) dot << "  cg" << id << " [shape=box, label=\"\"];\n";
  dot << "  out;\n";
  for (const auto& [from, to] : edges) {
    dot << "  " << name(from) << " -> " << name(to) << " [label=\"" << dot_escape(edge_label(from)) << "\"];\n";
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace jcouple
