#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "plogroup/errors.hpp"

namespace plogroup {

/// One letter of a flat group word: generator f_index to the power exp (+-1).
struct Letter {
  int index;
  int exp;
  friend bool operator==(const Letter& a, const Letter& b) = default;
};

/// A flat word over the generators f_1..f_rank. Conjugation syntax appears
/// only in rendered normal forms, never in word input.
class Word {
 public:
  explicit Word(int rank) : rank_(rank) { check_rank(rank); }
  Word(int rank, std::vector<Letter> letters);

  /// Grammar: whitespace-separated letters, generator "F<k>" (case-
  /// insensitive), inverse marked by a trailing apostrophe, caret powers
  /// expanded at parse ("F1^3", "F2^-2", "F2'"). Throws validation_error with
  /// a position on malformed input.
  static Word parse(int rank, std::string_view text);

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  /// Free reduction (cancels adjacent inverse pairs); group element unchanged.
  Word reduced() const;
  std::string str() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) = default;

 private:
  static void check_rank(int rank);
  int rank_;
  std::vector<Letter> letters_;
};

Word conjugate(const Word& w, const Word& c);
Word commutator(const Word& u, const Word& v);
Word word_power(int rank, int index, long long exp);

/// The defining relation [f_i, f_j^{w}] with w = f_{j+1}^{alpha_1} ... f_n^{alpha_{n-j}},
/// flattened. Requires 1 <= i <= j <= n-1 and alpha (indexed j+1..n) not all
/// zero; anything else throws argument_error.
Word relator(int n, int i, int j, const std::vector<long long>& alpha);

/// Every relation word of rank n whose exponent vector entries satisfy
/// |alpha_t| <= bound.
std::vector<Word> all_relators(int n, long long bound);

/// Exponent sum of generator i in w; invariant under rewriting since all
/// defining relations are commutators.
long long algebraic_sum(const Word& w, int i);

}  // namespace plogroup
