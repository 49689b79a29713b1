#include <doctest.h>

#include <random>

#include "plogroup/representation.hpp"
#include "plogroup/tree_diagram.hpp"

using namespace plogroup;

namespace {

NfNode random_nf_node(std::mt19937_64& rng, int height, bool must_be_nontrivial) {
  NfNode node;
  node.power = static_cast<long long>(rng() % 5) - 2;
  if (height >= 2 && rng() % 3 != 0) {
    int count = 1 + static_cast<int>(rng() % 2);
    std::vector<long long> conjs;
    while (static_cast<int>(conjs.size()) < count) {
      long long c = static_cast<long long>(rng() % 7) - 3;
      if (std::find(conjs.begin(), conjs.end(), c) == conjs.end()) conjs.push_back(c);
    }
    std::sort(conjs.begin(), conjs.end());
    for (long long c : conjs) node.prefixes.push_back(NfPrefix{c, random_nf_node(rng, height - 1, true)});
  }
  if (must_be_nontrivial && node.power == 0 && node.prefixes.empty()) node.power = 1;
  return node;
}

}  // namespace

TEST_CASE("single suffix power gives a single labeled root") {
  NormalForm nf = normalize(Word::parse(4, "F4^3"));
  TreeDiagram t = word_to_tree(nf);
  CHECK(t.height() == 4);
  CHECK(t.root().label == 3);
  CHECK(t.root().children.empty());
  CHECK(tree_to_word(t) == nf);
}

TEST_CASE("tree and word representations are mutually inverse on random forms") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    int rank = 1 + static_cast<int>(rng() % 6);
    NormalForm nf(rank, random_nf_node(rng, rank, false));
    CHECK(tree_to_word(word_to_tree(nf)) == nf);
  }
}

TEST_CASE("malformed trees are rejected") {
  // Zero-labeled non-root leaf.
  TreeNode bad;
  bad.label = 0;
  bad.children.push_back(TreeEdge{0, TreeNode{0, {}}});
  CHECK_THROWS_AS(TreeDiagram(3, bad), validation_error);
  // Unsorted sibling edges.
  TreeNode dup;
  dup.label = 0;
  dup.children.push_back(TreeEdge{1, TreeNode{2, {}}});
  dup.children.push_back(TreeEdge{1, TreeNode{3, {}}});
  CHECK_THROWS_AS(TreeDiagram(3, dup), validation_error);
  // Vertex below height 1.
  TreeNode deep;
  deep.label = 0;
  deep.children.push_back(TreeEdge{0, TreeNode{0, {TreeEdge{0, TreeNode{1, {}}}}}});
  CHECK_THROWS_AS(TreeDiagram(2, deep), validation_error);
}

TEST_CASE("bump vertices are the maximal nonzero vertices") {
  SUBCASE("identity has none") {
    CHECK(bump_vertices(word_to_tree(normalize(Word(3)))).empty());
  }
  SUBCASE("zero root with two nonzero children has two") {
    TreeNode root;
    root.label = 0;
    root.children.push_back(TreeEdge{0, TreeNode{3, {}}});
    root.children.push_back(TreeEdge{1, TreeNode{-1, {}}});
    TreeDiagram t(2, root);
    auto bumps = bump_vertices(t);
    REQUIRE(bumps.size() == 2);
    CHECK(bumps[0] == std::vector<int>{0});
    CHECK(bumps[1] == std::vector<int>{1});
  }
  SUBCASE("a nonzero root shadows everything below") {
    NormalForm nf = normalize(Word::parse(2, "F1 F2"));
    auto bumps = bump_vertices(word_to_tree(nf));
    REQUIRE(bumps.size() == 1);
    CHECK(bumps[0].empty());
  }
}

TEST_CASE("bump words are one-bump conjugated fragments in normal form") {
  Word w = Word::parse(2, "F2' F1 F2 F1");
  NormalForm nf = normalize(w);
  auto bumps = bump_words(nf);
  REQUIRE(bumps.size() == 2);
  CHECK(bumps[0] == normalize(Word::parse(2, "F1")));
  CHECK(bumps[1] == normalize(Word::parse(2, "F2' F1 F2")));
  StandardRep rep = standard_rep(2);
  // The product of the bump words recovers the element.
  PLMap prod = compose(evaluate_word(rep.generators, to_word(bumps[0])),
                       evaluate_word(rep.generators, to_word(bumps[1])));
  CHECK(prod == evaluate_word(rep.generators, w));
}

TEST_CASE("containment readout from embedded trees") {
  NormalForm whole = normalize(Word::parse(2, "F1 F2"));   // one syllable, full orbital
  NormalForm frag = normalize(Word::parse(2, "F1"));       // sits inside
  NormalForm moved = normalize(Word::parse(2, "F2' F1 F2"));  // conjugated copy, disjoint from frag
  TreeDiagram tw = word_to_tree(whole);
  TreeDiagram tf = word_to_tree(frag);
  TreeDiagram tm = word_to_tree(moved);
  auto vw = bump_vertices(tw).front();
  auto vf = bump_vertices(tf).front();
  auto vm = bump_vertices(tm).front();

  CHECK(orbital_relation_from_trees(tw, vw, tw, vw) == TreeRelation::Equal);
  CHECK(orbital_relation_from_trees(tf, vf, tw, vw) == TreeRelation::Subset);
  CHECK(orbital_relation_from_trees(tw, vw, tf, vf) == TreeRelation::Superset);
  CHECK(orbital_relation_from_trees(tf, vf, tm, vm) == TreeRelation::Disjoint);

  CHECK_THROWS_AS(orbital_relation_from_trees(tf, vf, word_to_tree(normalize(Word(3))),
                                              std::vector<int>{}),
                  argument_error);
  // Not a bump vertex: the root of `frag`'s tree is zero-labeled.
  CHECK_THROWS_AS(orbital_relation_from_trees(tf, {}, tw, vw), argument_error);
}

TEST_CASE("mother tree windows") {
  TreeDiagram one = mother_tree_window(1, 3, -1, 1);
  CHECK(one.root().children.empty());

  TreeDiagram two = mother_tree_window(2, 2, -1, 1);
  REQUIRE(two.root().children.size() == 3);  // depth capped at height-1
  CHECK(two.root().children[0].label == -1);
  CHECK(two.root().children[0].child.children.empty());

  TreeDiagram three = mother_tree_window(3, 2, 0, 1);
  CHECK(three.root().children.size() == 2);
  CHECK(three.root().children[0].child.children.size() == 2);
}

TEST_CASE("tree JSON and DOT") {
  NormalForm nf = normalize(Word::parse(2, "F2' F1 F2 F1"));
  TreeDiagram t = word_to_tree(nf);
  std::string j = tree_to_json(t);
  CHECK(tree_from_json(j) == t);
  CHECK(j.find("\"height\":2") != std::string::npos);
  std::string dot = tree_to_dot(t);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("label=\"0\"") != std::string::npos);  // zero labels included
  CHECK(dot.find("label=\"1\"") != std::string::npos);
  CHECK_THROWS_AS(tree_from_json("{\"height\": 2}"), validation_error);
}
