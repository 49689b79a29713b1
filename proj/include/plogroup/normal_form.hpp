#pragma once

#include <string>
#include <vector>

#include "plogroup/word.hpp"

namespace plogroup {

struct NfPrefix;

/// One layer of a normal form: the suffix power of this fragment plus its
/// prefixes (fragments one rank down, conjugated by strictly increasing
/// powers of the top generator). A node with power 0 and no prefixes is the
/// trivial fragment; it can appear only as the root, where it is the identity.
struct NfNode {
  long long power = 0;
  std::vector<NfPrefix> prefixes;
};

struct NfPrefix {
  long long conjugator;
  NfNode fragment;
};

bool operator==(const NfNode& a, const NfNode& b);
bool operator==(const NfPrefix& a, const NfPrefix& b);

/// The unique normal form w = w_1^{f_n^{k_1}} ... w_j^{f_n^{k_j}} f_n^{p} of
/// a word, with k_1 < ... < k_j, every fragment w_i nontrivial and itself in
/// normal form one rank down. The identity is the empty normal form.
class NormalForm {
 public:
  NormalForm(int rank, NfNode root);

  int rank() const { return rank_; }
  const NfNode& root() const { return root_; }
  bool is_identity() const { return root_.power == 0 && root_.prefixes.empty(); }

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.rank_ == b.rank_ && a.root_ == b.root_;
  }

 private:
  int rank_;
  NfNode root_;
};

/// Rewrites w into its normal form: top-generator powers are combined and
/// slid right (turning passed subwords into conjugates), prefixes with equal
/// conjugator exponents merge, trivial fragments are pruned, and fragments
/// recurse one rank down.
NormalForm normalize(const Word& w);

/// Flatten back to a plain word (inverse of normalize up to group equality).
Word to_word(const NormalForm& nf);

long long algebraic_sum(const NormalForm& nf, int i);

/// max{i : algebraic_sum(nf, i) != 0}; 0 for the identity.
int level(const NormalForm& nf);

/// Locates a structural subword: the node reached by following prefix
/// indices from the root, read as the fragment there, the prefix arriving at
/// it, or its suffix.
struct SubwordRef {
  enum class Kind { Fragment, Prefix, Suffix };
  Kind kind = Kind::Fragment;
  std::vector<int> path;
};

/// Positional layer: the maximum generator subscript appearing in the located
/// subword (conjugators and stored zero suffixes count). 0 for an empty word.
int layer(const NormalForm& nf, const SubwordRef& ref);
int level(const NormalForm& nf, const SubwordRef& ref);

/// The syllables of nf: prefixes/fragments whose own suffix is nontrivial
/// while every enclosing suffix is trivial. They sit in one-to-one
/// correspondence with the bumps of the represented element.
std::vector<SubwordRef> syllables(const NormalForm& nf);

/// Text form, e.g. "(f1)^(f2^0) (f1)^(f2^1) f2^0"; conjugators and suffixes
/// of rank >= 2 carry explicit exponents, rank-1 powers render bare, the
/// identity renders empty.
std::string render(const NormalForm& nf);

}  // namespace plogroup
