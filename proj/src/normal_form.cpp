#include "plogroup/normal_form.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace plogroup {

bool operator==(const NfNode& a, const NfNode& b) {
  return a.power == b.power && a.prefixes == b.prefixes;
}

bool operator==(const NfPrefix& a, const NfPrefix& b) {
  return a.conjugator == b.conjugator && a.fragment == b.fragment;
}

namespace {

bool trivial(const NfNode& n) { return n.power == 0 && n.prefixes.empty(); }

void validate_node(const NfNode& n, int height, bool is_root) {
  if (height < 1 && !n.prefixes.empty()) throw validation_error("prefixes below layer 1");
  if (!is_root && trivial(n)) throw validation_error("trivial fragment stored in normal form");
  long long prev = 0;
  bool first = true;
  for (const auto& p : n.prefixes) {
    if (!first && p.conjugator <= prev) {
      throw validation_error("conjugator exponents must strictly increase");
    }
    prev = p.conjugator;
    first = false;
    validate_node(p.fragment, height - 1, false);
  }
}

NfNode normalize_at(const std::vector<Letter>& letters, int rank) {
  NfNode node;
  if (rank == 1) {
    for (const auto& l : letters) node.power += l.exp;
    return node;
  }
  // Slide powers of f_rank to the right: a subword passed by a cumulative
  // power c ends up conjugated by f_rank^{-c}. Prefixes with equal exponents
  // merge in reading order; the map orders the rest ascending.
  std::map<long long, std::vector<Letter>> buckets;
  long long cum = 0;
  for (const auto& l : letters) {
    if (l.index == rank) {
      cum += l.exp;
    } else {
      buckets[-cum].push_back(l);
    }
  }
  node.power = cum;
  for (auto& [conj, seg] : buckets) {
    NfNode frag = normalize_at(seg, rank - 1);
    if (!trivial(frag)) node.prefixes.push_back(NfPrefix{conj, std::move(frag)});
  }
  return node;
}

void flatten(const NfNode& n, int height, std::vector<Letter>& out) {
  for (const auto& p : n.prefixes) {
    int sgn = p.conjugator > 0 ? 1 : -1;
    long long mag = p.conjugator > 0 ? p.conjugator : -p.conjugator;
    for (long long k = 0; k < mag; ++k) out.push_back({height, -sgn});
    flatten(p.fragment, height - 1, out);
    for (long long k = 0; k < mag; ++k) out.push_back({height, sgn});
  }
  int psgn = n.power > 0 ? 1 : -1;
  long long pmag = n.power > 0 ? n.power : -n.power;
  for (long long k = 0; k < pmag; ++k) out.push_back({height, psgn});
}

void sum_at(const NfNode& n, int height, int target, long long& acc) {
  if (height == target) acc += n.power;
  for (const auto& p : n.prefixes) sum_at(p.fragment, height - 1, target, acc);
}

const NfNode& node_at(const NormalForm& nf, const std::vector<int>& path) {
  const NfNode* cur = &nf.root();
  for (int idx : path) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= cur->prefixes.size()) {
      throw argument_error("subword path leaves the normal form");
    }
    cur = &cur->prefixes[static_cast<std::size_t>(idx)].fragment;
  }
  return *cur;
}

int subtree_level(const NfNode& n, int height) {
  int best = n.power != 0 ? height : 0;
  for (const auto& p : n.prefixes) best = std::max(best, subtree_level(p.fragment, height - 1));
  return best;
}

void collect_bumps(const NfNode& n, std::vector<int>& path, std::vector<SubwordRef>& out) {
  if (n.power != 0) {
    SubwordRef ref;
    ref.kind = path.empty() ? SubwordRef::Kind::Fragment : SubwordRef::Kind::Prefix;
    ref.path = path;
    out.push_back(std::move(ref));
    return;  // everything below has this nonzero vertex as an ancestor
  }
  for (std::size_t i = 0; i < n.prefixes.size(); ++i) {
    path.push_back(static_cast<int>(i));
    collect_bumps(n.prefixes[i].fragment, path, out);
    path.pop_back();
  }
}

std::string render_power(int index, long long p, bool bare_one) {
  std::ostringstream os;
  os << 'f' << index;
  if (!(bare_one && p == 1)) os << '^' << p;
  return os.str();
}

void render_node(const NfNode& n, int height, std::ostream& os) {
  if (height == 1) {
    os << render_power(1, n.power, /*bare_one=*/true);
    return;
  }
  for (const auto& p : n.prefixes) {
    os << '(';
    render_node(p.fragment, height - 1, os);
    os << ")^(" << render_power(height, p.conjugator, false) << ") ";
  }
  os << render_power(height, n.power, false);
}

}  // namespace

NormalForm::NormalForm(int rank, NfNode root) : rank_(rank), root_(std::move(root)) {
  if (rank < 1) throw argument_error("rank must be positive");
  validate_node(root_, rank, true);
}

NormalForm normalize(const Word& w) { return NormalForm(w.rank(), normalize_at(w.letters(), w.rank())); }

Word to_word(const NormalForm& nf) {
  std::vector<Letter> letters;
  flatten(nf.root(), nf.rank(), letters);
  return Word(nf.rank(), std::move(letters)).reduced();
}

long long algebraic_sum(const NormalForm& nf, int i) {
  if (i < 1 || i > nf.rank()) throw argument_error("generator index out of range");
  long long acc = 0;
  sum_at(nf.root(), nf.rank(), i, acc);
  return acc;
}

int level(const NormalForm& nf) { return subtree_level(nf.root(), nf.rank()); }

int layer(const NormalForm& nf, const SubwordRef& ref) {
  const NfNode& n = node_at(nf, ref.path);
  (void)n;
  int h = nf.rank() - static_cast<int>(ref.path.size());
  if (ref.kind == SubwordRef::Kind::Prefix) {
    if (ref.path.empty()) throw argument_error("the whole word is not a prefix");
    return h + 1;  // the conjugator's subscript
  }
  return h;
}

int level(const NormalForm& nf, const SubwordRef& ref) {
  const NfNode& n = node_at(nf, ref.path);
  int h = nf.rank() - static_cast<int>(ref.path.size());
  switch (ref.kind) {
    case SubwordRef::Kind::Suffix:
      return n.power != 0 ? h : 0;
    case SubwordRef::Kind::Prefix:
      if (ref.path.empty()) throw argument_error("the whole word is not a prefix");
      [[fallthrough]];  // conjugators contribute zero sums
    case SubwordRef::Kind::Fragment:
      return subtree_level(n, h);
  }
  return 0;
}

std::vector<SubwordRef> syllables(const NormalForm& nf) {
  std::vector<SubwordRef> out;
  std::vector<int> path;
  collect_bumps(nf.root(), path, out);
  return out;
}

std::string render(const NormalForm& nf) {
  if (nf.is_identity()) return "";
  std::ostringstream os;
  render_node(nf.root(), nf.rank(), os);
  return os.str();
}

}  // namespace plogroup
