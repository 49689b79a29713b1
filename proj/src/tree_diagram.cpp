#include "plogroup/tree_diagram.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace plogroup {

bool operator==(const TreeNode& a, const TreeNode& b) {
  return a.label == b.label && a.children == b.children;
}

bool operator==(const TreeEdge& a, const TreeEdge& b) {
  return a.label == b.label && a.child == b.child;
}

namespace {

void validate_tree(const TreeNode& n, int height, bool is_root, bool strict) {
  if (height < 1) throw validation_error("tree vertex below height 1");
  if (!n.children.empty() && height == 1) throw validation_error("edges below height 1");
  if (strict && n.children.empty() && n.label == 0 && !is_root) {
    throw validation_error("zero-labeled leaf in tree diagram");
  }
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    if (i > 0 && n.children[i].label <= n.children[i - 1].label) {
      throw validation_error("sibling edge labels must strictly increase");
    }
    validate_tree(n.children[i].child, height - 1, false, strict);
  }
}

TreeNode node_from_nf(const NfNode& n) {
  TreeNode t;
  t.label = n.power;
  t.children.reserve(n.prefixes.size());
  for (const auto& p : n.prefixes) t.children.push_back(TreeEdge{p.conjugator, node_from_nf(p.fragment)});
  return t;
}

NfNode nf_from_node(const TreeNode& t) {
  NfNode n;
  n.power = t.label;
  n.prefixes.reserve(t.children.size());
  for (const auto& e : t.children) n.prefixes.push_back(NfPrefix{e.label, nf_from_node(e.child)});
  return n;
}

const TreeNode* walk(const TreeDiagram& t, const std::vector<int>& path) {
  const TreeNode* cur = &t.root();
  for (int idx : path) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= cur->children.size()) {
      throw argument_error("vertex path leaves the tree");
    }
    cur = &cur->children[static_cast<std::size_t>(idx)].child;
  }
  return cur;
}

// Edge labels from the root down to the vertex, checking bump-vertex-ness.
std::vector<long long> bump_address(const TreeDiagram& t, const std::vector<int>& path) {
  std::vector<long long> addr;
  const TreeNode* cur = &t.root();
  for (int idx : path) {
    if (cur->label != 0) throw argument_error("vertex has a nonzero ancestor; not a bump vertex");
    if (idx < 0 || static_cast<std::size_t>(idx) >= cur->children.size()) {
      throw argument_error("vertex path leaves the tree");
    }
    addr.push_back(cur->children[static_cast<std::size_t>(idx)].label);
    cur = &cur->children[static_cast<std::size_t>(idx)].child;
  }
  if (cur->label == 0) throw argument_error("zero-labeled vertex is not a bump vertex");
  return addr;
}

void collect_bump_paths(const TreeNode& n, std::vector<int>& path, std::vector<std::vector<int>>& out) {
  if (n.label != 0) {
    out.push_back(path);
    return;
  }
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    collect_bump_paths(n.children[i].child, path, out);
    path.pop_back();
  }
}

nlohmann::json node_to_json(const TreeNode& n) {
  nlohmann::json kids = nlohmann::json::array();
  for (const auto& e : n.children) {
    kids.push_back(nlohmann::json{{"edge", e.label}, {"node", node_to_json(e.child)}});
  }
  return nlohmann::json{{"label", n.label}, {"children", kids}};
}

TreeNode node_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("label")) throw validation_error("tree node needs a 'label'");
  TreeNode n;
  n.label = j.at("label").get<long long>();
  if (j.contains("children")) {
    for (const auto& e : j.at("children")) {
      n.children.push_back(TreeEdge{e.at("edge").get<long long>(), node_from_json(e.at("node"))});
    }
  }
  return n;
}

void node_to_dot(const TreeNode& n, int& next_id, int my_id, std::ostream& os) {
  os << "  n" << my_id << " [label=\"" << n.label << "\"];\n";
  for (const auto& e : n.children) {
    int child_id = next_id++;
    node_to_dot(e.child, next_id, child_id, os);
    os << "  n" << my_id << " -> n" << child_id << " [label=\"" << e.label << "\"];\n";
  }
}

}  // namespace

TreeDiagram::TreeDiagram(int height, TreeNode root, Strictness strictness)
    : height_(height), root_(std::move(root)) {
  if (height < 1) throw validation_error("tree height must be positive");
  validate_tree(root_, height, true, strictness == Strictness::Diagram);
}

TreeDiagram word_to_tree(const NormalForm& nf) {
  return TreeDiagram(nf.rank(), node_from_nf(nf.root()));
}

NormalForm tree_to_word(const TreeDiagram& t) {
  // TreeDiagram construction already enforced the shape; NormalForm
  // construction re-checks the normal-form side (nontrivial fragments).
  return NormalForm(t.height(), nf_from_node(t.root()));
}

std::vector<std::vector<int>> bump_vertices(const TreeDiagram& t) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  collect_bump_paths(t.root(), path, out);
  return out;
}

std::vector<NormalForm> bump_words(const NormalForm& nf) {
  TreeDiagram t = word_to_tree(nf);
  std::vector<NormalForm> out;
  for (const auto& path : bump_vertices(t)) {
    const TreeNode* v = walk(t, path);
    auto addr = bump_address(t, path);
    // Chain of single-prefix layers carrying the conjugators, fragment at the
    // bottom; this is already the normal form of the one-bump word.
    NfNode frag = nf_from_node(*v);
    for (std::size_t d = addr.size(); d-- > 0;) {
      NfNode wrap;
      wrap.power = 0;
      wrap.prefixes.push_back(NfPrefix{addr[d], std::move(frag)});
      frag = std::move(wrap);
    }
    out.emplace_back(nf.rank(), std::move(frag));
  }
  return out;
}

const char* to_string(TreeRelation r) {
  switch (r) {
    case TreeRelation::Subset: return "Subset";
    case TreeRelation::Superset: return "Superset";
    case TreeRelation::Equal: return "Equal";
    case TreeRelation::Disjoint: return "Disjoint";
  }
  return "?";
}

TreeRelation orbital_relation_from_trees(const TreeDiagram& t1, const std::vector<int>& v1,
                                         const TreeDiagram& t2, const std::vector<int>& v2) {
  if (t1.height() != t2.height()) throw argument_error("tree heights differ");
  auto a1 = bump_address(t1, v1);
  auto a2 = bump_address(t2, v2);
  // The divergence vertex of the two root paths in the mother tree: if one
  // address extends the other, it sits at the end of the shorter path, where
  // that tree's label is nonzero (a bump vertex) and the other tree's is zero
  // (a proper ancestor of its bump vertex); a genuine fork lies strictly
  // above both bump vertices, where both labels are zero.
  std::size_t common = 0;
  while (common < a1.size() && common < a2.size() && a1[common] == a2[common]) ++common;
  if (common == a1.size() && common == a2.size()) return TreeRelation::Equal;
  if (common == a1.size()) return TreeRelation::Superset;  // v1 above v2: orbital 2 inside 1
  if (common == a2.size()) return TreeRelation::Subset;
  return TreeRelation::Disjoint;
}

TreeDiagram mother_tree_window(int n, int max_depth, long long label_lo, long long label_hi) {
  if (n < 1 || max_depth < 0 || label_lo > label_hi) throw argument_error("bad mother tree window");
  int depth = std::min(max_depth, n - 1);
  auto build = [&](auto&& self, int remaining) -> TreeNode {
    TreeNode node;
    if (remaining > 0) {
      for (long long k = label_lo; k <= label_hi; ++k) {
        node.children.push_back(TreeEdge{k, self(self, remaining - 1)});
      }
    }
    return node;
  };
  return TreeDiagram(n, build(build, depth), TreeDiagram::Strictness::Skeleton);
}

std::string tree_to_json(const TreeDiagram& t) {
  return nlohmann::json{{"height", t.height()}, {"root", node_to_json(t.root())}}.dump();
}

TreeDiagram tree_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("height") || !j.contains("root")) {
    throw validation_error("tree JSON needs 'height' and 'root'");
  }
  return TreeDiagram(j.at("height").get<int>(), node_from_json(j.at("root")));
}

std::string tree_to_dot(const TreeDiagram& t) {
  std::ostringstream os;
  os << "digraph tree {\n  node [shape=circle];\n";
  int next_id = 1;
  node_to_dot(t.root(), next_id, 0, os);
  os << "}\n";
  return os.str();
}

}  // namespace plogroup
