#pragma once

#include <string>
#include <vector>

#include "plogroup/normal_form.hpp"

namespace plogroup {

struct TreeEdge;

/// A vertex of a tree diagram: integer label plus outgoing edges, kept sorted
/// by strictly increasing edge label (the Z-ary addresses into the mother
/// tree). Vertices stand for suffixes, edges for conjugators.
struct TreeNode {
  long long label = 0;
  std::vector<TreeEdge> children;
};

struct TreeEdge {
  long long label;
  TreeNode child;
};

bool operator==(const TreeNode& a, const TreeNode& b);
bool operator==(const TreeEdge& a, const TreeEdge& b);

/// A labeled finite subtree of the mother tree M_n (root at height n,
/// vertices no lower than height 1). Diagram-strict trees additionally
/// require nonzero leaf labels, except for the lone-root identity diagram;
/// skeletons (mother-tree windows) skip the label rule.
class TreeDiagram {
 public:
  enum class Strictness { Diagram, Skeleton };

  TreeDiagram(int height, TreeNode root, Strictness strictness = Strictness::Diagram);

  int height() const { return height_; }
  const TreeNode& root() const { return root_; }

  friend bool operator==(const TreeDiagram& a, const TreeDiagram& b) {
    return a.height_ == b.height_ && a.root_ == b.root_;
  }

 private:
  int height_;
  TreeNode root_;
};

/// Vertices <-> suffixes (labeled by the suffix power), edges <-> conjugators
/// (labeled by the exponent). Mutually inverse with tree_to_word.
TreeDiagram word_to_tree(const NormalForm& nf);
NormalForm tree_to_word(const TreeDiagram& t);

/// Child-index paths of the maximal nonzero vertices: nonzero label, every
/// ancestor labeled zero. One per bump of the represented element.
std::vector<std::vector<int>> bump_vertices(const TreeDiagram& t);

/// For each bump vertex, the one-bump word: the fragment hanging there
/// conjugated by the edge labels on its root path, already in normal form.
std::vector<NormalForm> bump_words(const NormalForm& nf);

enum class TreeRelation { Subset, Superset, Equal, Disjoint };
const char* to_string(TreeRelation r);

/// Containment of the two bump orbitals read off the trees alone: embed both
/// trees into the mother tree by edge labels and compare the vertex labels at
/// the divergence vertex of the two root paths. Requires equal heights and
/// genuine bump vertices.
TreeRelation orbital_relation_from_trees(const TreeDiagram& t1, const std::vector<int>& v1,
                                         const TreeDiagram& t2, const std::vector<int>& v2);

/// The finite window of the mother tree M_n: depth min(max_depth, n-1), edge
/// labels label_lo..label_hi, all vertex labels zero. Its edges are exactly
/// the covering relations of the orbital poset of a standard representation.
TreeDiagram mother_tree_window(int n, int max_depth, long long label_lo, long long label_hi);

std::string tree_to_json(const TreeDiagram& t);
TreeDiagram tree_from_json(const std::string& text);
/// DOT with every integer label written out, zeros included.
std::string tree_to_dot(const TreeDiagram& t);

}  // namespace plogroup
