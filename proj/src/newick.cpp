#include "treeshape/newick.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <utility>

namespace treeshape {

NewickError::NewickError(const std::string& what, std::size_t position)
    : std::runtime_error("newick: " + what + " at position " + std::to_string(position)),
      position_{position} {}

namespace {

struct ParseNode {
  std::vector<int> children;
  std::string label;
  std::size_t position = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_{text} {}

  auto parse() -> std::vector<ParseNode> {
    parse_subtree();
    skip_blank();
    expect(';');
    skip_blank();
    if (pos_ != text_.size()) {
      throw NewickError("trailing characters after ';'", pos_);
    }
    return std::move(nodes_);
  }

 private:
  static auto is_delimiter(char c) -> bool {
    switch (c) {
      case '(': case ')': case '[': case ']': case ',': case ':': case ';':
      case ' ': case '\t': case '\n': case '\r':
        return true;
      default:
        return false;
    }
  }

  auto at_end() const -> bool { return pos_ >= text_.size(); }
  auto peek() const -> char { return at_end() ? '\0' : text_[pos_]; }

  void skip_blank() {
    while (!at_end()) {
      auto c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (c == '[') {
        auto close = text_.find(']', pos_);
        if (close == std::string_view::npos) {
          throw NewickError("unterminated comment", pos_);
        }
        pos_ = close + 1;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    if (peek() != c) {
      throw NewickError(std::string{"expected '"} + c + "'", pos_);
    }
    ++pos_;
  }

  auto parse_label() -> std::string {
    skip_blank();
    auto label = std::string{};
    if (peek() == '\'') {
      auto start = pos_++;
      while (true) {
        if (at_end()) {
          throw NewickError("unterminated quoted label", start);
        }
        auto c = text_[pos_++];
        if (c == '\'') {
          if (peek() == '\'') {
            label.push_back('\'');
            ++pos_;
            continue;
          }
          break;
        }
        label.push_back(c);
      }
      return label;
    }
    while (!at_end() && !is_delimiter(text_[pos_])) {
      label.push_back(text_[pos_++]);
    }
    return label;
  }

  void skip_branch_length() {
    skip_blank();
    if (peek() != ':') {
      return;
    }
    ++pos_;
    skip_blank();
    auto start = pos_;
    while (!at_end() && !is_delimiter(text_[pos_])) {
      ++pos_;
    }
    if (start == pos_) {
      throw NewickError("empty branch length", start);
    }
  }

  auto parse_subtree() -> int {
    skip_blank();
    auto id = static_cast<int>(nodes_.size());
    nodes_.push_back({});
    nodes_[static_cast<std::size_t>(id)].position = pos_;
    if (peek() == '(') {
      ++pos_;
      while (true) {
        auto child = parse_subtree();
        nodes_[static_cast<std::size_t>(id)].children.push_back(child);
        skip_blank();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == ')') {
          ++pos_;
          break;
        }
        throw NewickError("expected ',' or ')'", pos_);
      }
      nodes_[static_cast<std::size_t>(id)].label = parse_label();
    } else {
      auto label = parse_label();
      if (label.empty()) {
        throw NewickError("expected a leaf label or '('", pos_);
      }
      nodes_[static_cast<std::size_t>(id)].label = std::move(label);
    }
    skip_branch_length();
    return id;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<ParseNode> nodes_;
};

auto parse_positive_int(const std::string& s) -> std::optional<int> {
  auto value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value <= 0) {
    return std::nullopt;
  }
  return value;
}

struct Written {
  Taxon min_taxon;
  std::string text;
};

auto write_from(const PhyloTree& tree, Vertex_id v, Edge_id parent) -> Written {
  if (tree.is_leaf(v)) {
    return {tree.taxon(v), std::to_string(tree.taxon(v))};
  }
  auto parts = std::vector<Written>{};
  for (auto e : tree.incident_edges(v)) {
    if (e != parent) {
      parts.push_back(write_from(tree, tree.other_end(e, v), e));
    }
  }
  std::sort(parts.begin(), parts.end(),
            [](const Written& l, const Written& r) { return l.min_taxon < r.min_taxon; });
  auto out = Written{parts.front().min_taxon, "("};
  for (auto i = 0U; i < parts.size(); ++i) {
    if (i > 0) {
      out.text.push_back(',');
    }
    out.text += parts[i].text;
  }
  out.text.push_back(')');
  return out;
}

}  // namespace

auto parse_newick_with_names(std::string_view text, std::optional<Rootedness> force)
    -> ParsedNewick {
  auto nodes = Parser{text}.parse();
  const auto& top = nodes.front();

  auto rootedness = top.label == k_root_marker ? Rootedness::rooted : Rootedness::unrooted;
  if (force) {
    rootedness = *force;
  }
  if (top.children.empty()) {
    throw NewickError("a tree needs at least two leaves", top.position);
  }
  const auto top_arity = top.children.size();
  if (rootedness == Rootedness::rooted && top_arity != 2) {
    throw NewickError("non-binary vertex: rooted top split has " + std::to_string(top_arity) +
                          " children",
                      top.position);
  }
  if (rootedness == Rootedness::unrooted && top_arity != 2 && top_arity != 3) {
    throw NewickError("non-binary vertex: unrooted top level has " + std::to_string(top_arity) +
                          " children",
                      top.position);
  }
  for (auto i = 1U; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    if (!node.children.empty() && node.children.size() != 2) {
      throw NewickError("non-binary vertex with " + std::to_string(node.children.size()) +
                            " children",
                        node.position);
    }
  }

  // Taxa.
  auto leaf_nodes = std::vector<int>{};
  for (auto i = 0U; i < nodes.size(); ++i) {
    if (nodes[i].children.empty()) {
      leaf_nodes.push_back(static_cast<int>(i));
    }
  }
  auto taxon_of_node = std::map<int, Taxon>{};
  auto names = std::vector<std::string>{};
  auto all_integer = std::all_of(leaf_nodes.begin(), leaf_nodes.end(), [&](int i) {
    return parse_positive_int(nodes[static_cast<std::size_t>(i)].label).has_value();
  });
  auto seen = std::map<std::string, int>{};
  for (auto i : leaf_nodes) {
    const auto& node = nodes[static_cast<std::size_t>(i)];
    if (!seen.emplace(node.label, i).second) {
      throw NewickError("duplicate taxon '" + node.label + "'", node.position);
    }
    if (all_integer) {
      taxon_of_node[i] = *parse_positive_int(node.label);
    } else {
      names.push_back(node.label);
      taxon_of_node[i] = static_cast<Taxon>(names.size());
    }
  }
  if (all_integer) {
    // "01" and "1" parse to the same taxon.
    auto distinct = std::map<Taxon, int>{};
    for (auto [node, x] : taxon_of_node) {
      if (!distinct.emplace(x, node).second) {
        throw NewickError("duplicate taxon " + std::to_string(x),
                          nodes[static_cast<std::size_t>(node)].position);
      }
    }
  }

  // Vertices: one per parse node, except that an unrooted top bifurcation is
  // suppressed; a rooted tree gets an extra root vertex above the top split.
  const auto suppress_top = rootedness == Rootedness::unrooted && top_arity == 2;
  auto vertex_of = std::vector<Vertex_id>(nodes.size(), k_no_vertex);
  auto next = 0;
  for (auto i = 0U; i < nodes.size(); ++i) {
    if (i == 0 && suppress_top) {
      continue;
    }
    vertex_of[i] = next++;
  }
  auto edges = std::vector<Edge>{};
  std::optional<Vertex_id> root;
  if (rootedness == Rootedness::rooted) {
    root = next++;
    edges.push_back({*root, vertex_of[0]});
  }
  for (auto i = 0U; i < nodes.size(); ++i) {
    if (i == 0 && suppress_top) {
      edges.push_back({vertex_of[static_cast<std::size_t>(top.children[0])],
                       vertex_of[static_cast<std::size_t>(top.children[1])]});
      continue;
    }
    for (auto child : nodes[i].children) {
      edges.push_back({vertex_of[i], vertex_of[static_cast<std::size_t>(child)]});
    }
  }
  auto leaves = std::vector<std::pair<Vertex_id, Taxon>>{};
  for (auto [node, x] : taxon_of_node) {
    leaves.emplace_back(vertex_of[static_cast<std::size_t>(node)], x);
  }
  try {
    return {PhyloTree::from_edges(rootedness, next, std::move(edges), leaves, root),
            std::move(names)};
  } catch (const std::invalid_argument& err) {
    throw NewickError(err.what(), 0);
  }
}

auto parse_newick(std::string_view text, std::optional<Rootedness> force) -> PhyloTree {
  return parse_newick_with_names(text, force).tree;
}

auto write_newick(const PhyloTree& tree) -> std::string {
  if (tree.is_rooted()) {
    auto rho = *tree.root();
    auto e = tree.incident_edges(rho)[0];
    return write_from(tree, tree.other_end(e, rho), e).text + std::string{k_root_marker} + ";";
  }
  const auto first = tree.leaf_of(tree.taxa().front());
  if (tree.leaf_count() == 2) {
    return "(" + std::to_string(tree.taxon(first)) + "," +
           std::to_string(tree.taxon(tree.other_end(tree.incident_edges(first)[0], first))) +
           ");";
  }
  const auto hub = tree.other_end(tree.incident_edges(first)[0], first);
  return write_from(tree, hub, -1).text + ";";
}

auto same_tree(const PhyloTree& lhs, const PhyloTree& rhs) -> bool {
  return lhs.rootedness() == rhs.rootedness() && write_newick(lhs) == write_newick(rhs);
}

auto split_newick_stream(std::string_view text) -> std::vector<std::string> {
  auto trees = std::vector<std::string>{};
  auto current = std::string{};
  auto in_quote = false;
  auto in_comment = false;
  for (auto c : text) {
    current.push_back(c);
    if (in_quote) {
      in_quote = c != '\'';
    } else if (in_comment) {
      in_comment = c != ']';
    } else if (c == '\'') {
      in_quote = true;
    } else if (c == '[') {
      in_comment = true;
    } else if (c == ';') {
      trees.push_back(std::move(current));
      current.clear();
    }
  }
  auto blank = std::all_of(current.begin(), current.end(),
                           [](char c) { return c == ' ' || c == '\n' || c == '\t' || c == '\r'; });
  if (!blank) {
    trees.push_back(std::move(current));  // let the parser report the missing ';'
  }
  return trees;
}

}  // namespace treeshape
