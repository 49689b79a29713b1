#include "plogroup/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace plogroup {

void Word::check_rank(int rank) {
  if (rank < 1) throw argument_error("rank must be positive");
}

Word::Word(int rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters)) {
  check_rank(rank);
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > rank_) {
      throw argument_error("generator f" + std::to_string(l.index) + " out of range for rank " +
                           std::to_string(rank_));
    }
    if (l.exp != 1 && l.exp != -1) throw argument_error("letter exponent must be +-1");
  }
}

Word Word::parse(int rank, std::string_view text) {
  check_rank(rank);
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) {
    throw validation_error("parse error at column " + std::to_string(pos + 1) + ": " + msg);
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != 'f' && text[pos] != 'F') fail("expected generator letter 'F'");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected generator subscript after 'F'");
    int index = 0;
    for (std::size_t k = start; k < pos; ++k) {
      index = index * 10 + (text[k] - '0');
      if (index > rank) fail("generator F" + std::string(text.substr(start, pos - start)) +
                             " exceeds rank " + std::to_string(rank));
    }
    if (index < 1) fail("generator subscripts start at 1");
    long long exp = 1;
    if (pos < text.size() && text[pos] == '\'') {
      exp = -1;
      ++pos;
    } else if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool neg = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
      }
      std::size_t dstart = pos;
      long long mag = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        mag = mag * 10 + (text[pos] - '0');
        if (mag > 1000000) fail("power too large");
        ++pos;
      }
      if (pos == dstart) fail("expected integer after '^'");
      exp = neg ? -mag : mag;
    }
    int sgn = exp < 0 ? -1 : 1;
    for (long long k = 0; k < (exp < 0 ? -exp : exp); ++k) letters.push_back({index, sgn});
  }
  return Word(rank, std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exp = -l.exp;
  return Word(rank_, std::move(out));
}

Word Word::reduced() const {
  std::vector<Letter> out;
  for (const auto& l : letters_) {
    if (!out.empty() && out.back().index == l.index && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(rank_, std::move(out));
}

std::string Word::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << 'f' << letters_[i].index;
    if (letters_[i].exp < 0) os << '\'';
  }
  return os.str();
}

Word operator*(const Word& a, const Word& b) {
  if (a.rank_ != b.rank_) throw argument_error("rank mismatch in word product");
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(a.rank_, std::move(out));
}

Word conjugate(const Word& w, const Word& c) { return c.inverse() * w * c; }

Word commutator(const Word& u, const Word& v) { return u.inverse() * v.inverse() * u * v; }

Word word_power(int rank, int index, long long exp) {
  std::vector<Letter> letters;
  int sgn = exp < 0 ? -1 : 1;
  for (long long k = 0; k < (exp < 0 ? -exp : exp); ++k) letters.push_back({index, sgn});
  return Word(rank, std::move(letters));
}

Word relator(int n, int i, int j, const std::vector<long long>& alpha) {
  if (n < 2 || i < 1 || j < i || j > n - 1) {
    throw argument_error("relator indices need 1 <= i <= j <= n-1");
  }
  if (alpha.size() != static_cast<std::size_t>(n - j)) {
    throw argument_error("alpha must have one entry per generator j+1..n");
  }
  if (std::all_of(alpha.begin(), alpha.end(), [](long long a) { return a == 0; })) {
    throw argument_error("relator exponent vector must not be all zero");
  }
  Word w(n);
  for (int t = 0; t < n - j; ++t) w = w * word_power(n, j + 1 + t, alpha[static_cast<std::size_t>(t)]);
  return commutator(word_power(n, i, 1), conjugate(word_power(n, j, 1), w));
}

std::vector<Word> all_relators(int n, long long bound) {
  std::vector<Word> out;
  for (int j = 1; j <= n - 1; ++j) {
    std::vector<long long> alpha(static_cast<std::size_t>(n - j), -bound);
    while (true) {
      bool nonzero = std::any_of(alpha.begin(), alpha.end(), [](long long a) { return a != 0; });
      if (nonzero) {
        for (int i = 1; i <= j; ++i) out.push_back(relator(n, i, j, alpha));
      }
      // Odometer over [-bound, bound]^(n-j).
      std::size_t k = 0;
      while (k < alpha.size() && alpha[k] == bound) {
        alpha[k] = -bound;
        ++k;
      }
      if (k == alpha.size()) break;
      ++alpha[k];
    }
  }
  return out;
}

long long algebraic_sum(const Word& w, int i) {
  if (i < 1 || i > w.rank()) throw argument_error("generator index out of range");
  long long s = 0;
  for (const auto& l : w.letters()) {
    if (l.index == i) s += l.exp;
  }
  return s;
}

}  // namespace plogroup
