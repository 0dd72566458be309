#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "diagramalg/errors.hpp"
#include "diagramalg/exactlin/algebra.hpp"
#include "diagramalg/exactlin/ratfunc.hpp"
#include "diagramalg/exactlin/rational.hpp"

namespace diagramalg {

/// Generator T_i or E_i, 1 <= i <= n-1.
struct Letter {
  enum class Kind : std::uint8_t { E, T };
  Kind kind = Kind::E;
  int index = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Free-algebra word as letter codes.  For a given n the codes are
/// E_1..E_{n-1} -> 0..n-2 and T_1..T_{n-1} -> n-1..2n-3, so comparing codes
/// realises the letter order E_1 < ... < E_{n-1} < T_1 < ... < T_{n-1}.
using Word = std::vector<std::uint8_t>;

class Alphabet {
 public:
  explicit Alphabet(int n) : n_(n) {
    if (n < 2) throw BadIndex("the presentation needs n >= 2");
  }

  int n() const { return n_; }
  int size() const { return 2 * (n_ - 1); }

  std::uint8_t code(Letter l) const {
    if (l.index < 1 || l.index >= n_) throw BadIndex("letter index out of range");
    return static_cast<std::uint8_t>((l.kind == Letter::Kind::E ? 0 : n_ - 1) + l.index - 1);
  }
  std::uint8_t E(int i) const { return code({Letter::Kind::E, i}); }
  std::uint8_t T(int i) const { return code({Letter::Kind::T, i}); }

  Letter letter(std::uint8_t c) const {
    if (c < n_ - 1) return {Letter::Kind::E, c + 1};
    return {Letter::Kind::T, c - (n_ - 1) + 1};
  }

  std::string name(std::uint8_t c) const {
    const Letter l = letter(c);
    return (l.kind == Letter::Kind::E ? "E" : "T") + std::to_string(l.index);
  }

  /// "E1 T2"; the empty word prints as "1".
  std::string format(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) s += ' ';
      s += name(w[k]);
    }
    return s;
  }

  /// Parses "E1 T2 T1" (or "1" for the empty word).
  Word parse(std::string_view text) const {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
      if (text[i] == ' ') {
        ++i;
        continue;
      }
      if (text[i] == '1' && w.empty() && text.find_first_not_of(' ', i + 1) == std::string_view::npos) return w;
      if (text[i] != 'E' && text[i] != 'T') throw ParseError("bad letter in word: " + std::string(text));
      const auto kind = text[i] == 'E' ? Letter::Kind::E : Letter::Kind::T;
      std::size_t j = ++i;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      if (j == i) throw ParseError("letter without index: " + std::string(text));
      w.push_back(code({kind, std::stoi(std::string(text.substr(i, j - i)))}));
      i = j;
    }
    return w;
  }

 private:
  int n_;
};

/// Degree-lexicographic order on words.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct DegLexGreater {
  bool operator()(const Word& a, const Word& b) const { return DegLexLess{}(b, a); }
};

inline Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

inline Word concat(const Word& a, const Word& b, const Word& c) {
  Word w = concat(a, b);
  w.insert(w.end(), c.begin(), c.end());
  return w;
}

inline int coefficient_sign(const Rational& c) { return sgn(c); }
inline int coefficient_sign(const RatFunc& c) {
  return c.is_zero() ? 0 : sgn(c.numerator().leading());
}

/// Element of the free algebra; terms ordered from the leading word down.
template <class F>
class NCPolynomial {
 public:
  using Terms = std::map<Word, F, DegLexGreater>;

  NCPolynomial() = default;
  static NCPolynomial monomial(Word w, F c = F(1)) {
    NCPolynomial p;
    p.add_term(std::move(w), c);
    return p;
  }
  static NCPolynomial constant(const F& c) { return monomial({}, c); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  const Word& leading_word() const { return terms_.begin()->first; }
  const F& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(Word w, const F& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(std::move(w), c);
    if (!fresh) {
      it->second += c;
      if (diagramalg::is_zero(it->second)) terms_.erase(it);
    }
  }

  NCPolynomial monic() const {
    if (is_zero()) return *this;
    NCPolynomial out;
    const F inv = F(1) / leading_coefficient();
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * inv);
    return out;
  }

  NCPolynomial& operator+=(const NCPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NCPolynomial& operator-=(const NCPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, F(-c));
    return *this;
  }
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator*(const F& s, const NCPolynomial& p) {
    NCPolynomial out;
    for (const auto& [w, c] : p.terms_) out.add_term(w, s * c);
    return out;
  }
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
    NCPolynomial out;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) out.add_term(concat(wa, wb), ca * cb);
    return out;
  }
  friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) { return a.terms_ == b.terms_; }

  /// e.g. "T1 T1 + (u-1) E1 T1 - (u-1) E1 - 1"
  std::string to_string(const Alphabet& alphabet) const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      const bool negative = coefficient_sign(c) < 0;
      const F mag = negative ? F(-c) : c;
      out += out.empty() ? (negative ? "- " : "") : (negative ? " - " : " + ");
      std::string coeff = diagramalg::to_string(mag);
      const bool plain = coeff.find_first_not_of("0123456789/") == std::string::npos || coeff == "u";
      if (!plain) coeff = "(" + coeff + ")";
      if (w.empty()) out += coeff;
      else if (mag == F(1)) out += alphabet.format(w);
      else out += coeff + " " + alphabet.format(w);
    }
    return out;
  }

 private:
  static bool is_zero(const F& c) { return diagramalg::is_zero(c); }
  Terms terms_;
};

template <class F>
NCPolynomial<F> word_poly(const Word& w) {
  return NCPolynomial<F>::monomial(w);
}

/// One instance of a defining relation with its index tuple.
template <class F>
struct Relation {
  std::string name;
  std::vector<int> indices;
  NCPolynomial<F> poly;
};

/// Every instance of (A1)-(A9), instantiated over ordered index pairs that
/// satisfy each side condition; instances that are identically zero (the
/// i = j cases of A2) are dropped.  A9 is expanded as
/// T_i^2 - 1 - (u-1) E_i + (u-1) E_i T_i.
template <class F>
std::vector<Relation<F>> juyumaya_relations(int n, const F& u) {
  const Alphabet ab(n);
  using P = NCPolynomial<F>;
  auto w = [](std::initializer_list<std::uint8_t> l) { return P::monomial(Word(l)); };
  std::vector<Relation<F>> out;
  const int m = n - 1;
  auto T = [&](int i) { return ab.T(i); };
  auto E = [&](int i) { return ab.E(i); };
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (std::abs(i - j) > 1) out.push_back({"A1", {i, j}, w({T(i), T(j)}) - w({T(j), T(i)})});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (i != j) out.push_back({"A2", {i, j}, w({E(i), E(j)}) - w({E(j), E(i)})});
  for (int i = 1; i <= m; ++i) out.push_back({"A3", {i}, w({E(i), E(i)}) - w({E(i)})});
  for (int i = 1; i <= m; ++i) out.push_back({"A4", {i}, w({E(i), T(i)}) - w({T(i), E(i)})});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (std::abs(i - j) > 1) out.push_back({"A5", {i, j}, w({E(i), T(j)}) - w({T(j), E(i)})});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (std::abs(i - j) == 1) out.push_back({"A6", {i, j}, w({T(i), T(j), T(i)}) - w({T(j), T(i), T(j)})});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (std::abs(i - j) == 1) out.push_back({"A7", {i, j}, w({E(j), T(i), T(j)}) - w({T(i), T(j), E(i)})});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (std::abs(i - j) == 1) {
        out.push_back({"A8", {i, j}, w({E(i), E(j), T(j)}) - w({E(i), T(j), E(i)})});
        out.push_back({"A8", {i, j}, w({E(i), T(j), E(i)}) - w({T(j), E(i), E(j)})});
      }
  const F um1 = u - F(1);
  for (int i = 1; i <= m; ++i) {
    P p = w({T(i), T(i)}) - P::constant(F(1)) - um1 * w({E(i)}) + um1 * w({E(i), T(i)});
    out.push_back({"A9", {i}, std::move(p)});
  }
  return out;
}

/// Oriented rules lead -> tail over a word alphabet, kept interreduced.
template <class F>
class RewriteSystem {
 public:
  struct Rule {
    Word lead;
    NCPolynomial<F> tail;  // strictly smaller than lead

    NCPolynomial<F> polynomial() const { return NCPolynomial<F>::monomial(lead) - tail; }
  };

  RewriteSystem(Alphabet alphabet, int degree_bound) : alphabet_(alphabet), degree_bound_(degree_bound) {}

  /// Orients and interreduces the given relations.
  static RewriteSystem from_relations(Alphabet alphabet, const std::vector<NCPolynomial<F>>& relations, int degree_bound) {
    RewriteSystem r(alphabet, degree_bound);
    for (const auto& p : relations) r.add_unreduced(p);
    r.interreduce();
    return r;
  }

  const Alphabet& alphabet() const { return alphabet_; }
  int degree_bound() const { return degree_bound_; }
  const std::vector<Rule>& rules() const { return rules_; }

  struct Match {
    std::size_t rule;
    std::size_t position;
  };

  /// Leftmost occurrence of any rule's leading word, ignoring rule `skip`.
  std::optional<Match> find_match(const Word& w, std::size_t skip = SIZE_MAX) const {
    std::string key(w.begin(), w.end());
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      for (std::size_t len = 1; len <= max_lead_ && pos + len <= w.size(); ++len) {
        auto it = index_.find(key.substr(pos, len));
        if (it != index_.end() && it->second != skip) return Match{it->second, pos};
      }
    return std::nullopt;
  }

  bool is_normal(const Word& w) const { return !find_match(w); }

  NCPolynomial<F> reduce(NCPolynomial<F> p, std::size_t skip = SIZE_MAX) const {
    NCPolynomial<F> result;
    while (!p.is_zero()) {
      Word w = p.leading_word();
      F c = p.leading_coefficient();
      p.add_term(w, F(-c));
      if (auto m = find_match(w, skip)) {
        const Rule& r = rules_[m->rule];
        const Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m->position));
        const Word right(w.begin() + static_cast<std::ptrdiff_t>(m->position + r.lead.size()), w.end());
        for (const auto& [tw, tc] : r.tail.terms()) p.add_term(concat(left, tw, right), c * tc);
      } else {
        result.add_term(std::move(w), c);
      }
    }
    return result;
  }

  /// Adds p (made monic) as a rule without interreducing.
  void add_unreduced(const NCPolynomial<F>& p) {
    if (p.is_zero()) return;
    NCPolynomial<F> q = p.monic();
    Rule r;
    r.lead = q.leading_word();
    r.tail = NCPolynomial<F>::monomial(r.lead) - q;
    rules_.push_back(std::move(r));
    rebuild_index();
  }

  /// Reduces every rule against the others until no leading word contains
  /// another and every tail is normal.
  void interreduce() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < rules_.size(); ++i) {
        const NCPolynomial<F> p = rules_[i].polynomial();
        NCPolynomial<F> q = reduce(p, i);
        if (q == p) continue;
        changed = true;
        if (q.is_zero()) {
          rules_.erase(rules_.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
          q = q.monic();
          rules_[i].lead = q.leading_word();
          rules_[i].tail = NCPolynomial<F>::monomial(rules_[i].lead) - q;
        }
        rebuild_index();
        break;
      }
    }
    std::sort(rules_.begin(), rules_.end(), [](const Rule& a, const Rule& b) { return DegLexLess{}(a.lead, b.lead); });
    rebuild_index();
  }

 private:
  void rebuild_index() {
    index_.clear();
    max_lead_ = 0;
    for (std::size_t k = 0; k < rules_.size(); ++k) {
      index_.emplace(std::string(rules_[k].lead.begin(), rules_[k].lead.end()), k);
      max_lead_ = std::max(max_lead_, rules_[k].lead.size());
    }
  }

  Alphabet alphabet_;
  int degree_bound_;
  std::vector<Rule> rules_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t max_lead_ = 0;
};

/// Overlap of two leading words: a = left·o and b = o·right for a nonempty
/// proper common part o, giving the ambiguous word left·o·right.
struct Overlap {
  std::size_t first;
  std::size_t second;
  std::size_t shared;
  std::size_t length;
};

template <class F>
std::vector<Overlap> overlaps(const RewriteSystem<F>& r) {
  std::vector<Overlap> out;
  const auto& rules = r.rules();
  for (std::size_t a = 0; a < rules.size(); ++a)
    for (std::size_t b = 0; b < rules.size(); ++b) {
      const Word& x = rules[a].lead;
      const Word& y = rules[b].lead;
      for (std::size_t k = 1; k < std::min(x.size(), y.size()) + (a == b ? 0 : 0); ++k)
        if (std::equal(x.end() - static_cast<std::ptrdiff_t>(k), x.end(), y.begin()))
          out.push_back({a, b, k, x.size() + y.size() - k});
    }
  std::stable_sort(out.begin(), out.end(), [](const Overlap& p, const Overlap& q) { return p.length < q.length; });
  return out;
}

/// The difference of the two one-step rewrites of an overlap word.
template <class F>
NCPolynomial<F> overlap_difference(const RewriteSystem<F>& r, const Overlap& o) {
  const auto& a = r.rules()[o.first];
  const auto& b = r.rules()[o.second];
  const Word left(a.lead.begin(), a.lead.end() - static_cast<std::ptrdiff_t>(o.shared));
  const Word right(b.lead.begin() + static_cast<std::ptrdiff_t>(o.shared), b.lead.end());
  return a.tail * word_poly<F>(right) - word_poly<F>(left) * b.tail;
}

struct CompletionStats {
  std::size_t rounds = 0;
  std::size_t overlaps_checked = 0;
  std::size_t rules_added = 0;
  std::size_t max_overlap_length = 0;
};

/// A rewrite system whose overlaps all resolve: its normal words form a
/// basis of the presented algebra.
template <class F>
struct CompletedSystem {
  RewriteSystem<F> system;
  std::vector<Word> normal_words;  // deg-lex ascending
  CompletionStats stats;

  std::size_t dimension() const { return normal_words.size(); }
};

inline constexpr std::size_t default_rule_limit = 2000;
inline constexpr std::size_t default_normal_word_limit = 200000;

/// Normal words by increasing length; they are closed under taking factors,
/// so extending normal words one letter at a time finds them all.  Throws
/// BoundExceeded if there are more than `limit`.
template <class F>
std::vector<Word> normal_words(const RewriteSystem<F>& r, std::size_t limit = default_normal_word_limit) {
  std::vector<Word> all{Word{}};
  std::vector<Word> level{Word{}};
  while (!level.empty()) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (int c = 0; c < r.alphabet().size(); ++c) {
        Word x = w;
        x.push_back(static_cast<std::uint8_t>(c));
        bool normal = true;
        // Only suffixes can newly match.
        for (const auto& rule : r.rules()) {
          const auto& lead = rule.lead;
          if (lead.size() <= x.size() && std::equal(lead.rbegin(), lead.rend(), x.rbegin())) {
            normal = false;
            break;
          }
        }
        if (normal) next.push_back(std::move(x));
      }
    std::sort(next.begin(), next.end(), DegLexLess{});
    all.insert(all.end(), next.begin(), next.end());
    if (all.size() > limit) throw BoundExceeded("normal words exceed the limit; the system is not complete");
    level = std::move(next);
  }
  return all;
}

/// Overlap completion in the free algebra.  Every ambiguity of length up
/// to the degree bound is resolved; BoundExceeded is thrown if a longer
/// ambiguity remains unchecked in the final system, and ResourceLimit if the
/// rule count passes `rule_limit`.
template <class F>
CompletedSystem<F> complete(RewriteSystem<F> r, std::size_t rule_limit = default_rule_limit) {
  CompletionStats stats;
  while (true) {
    ++stats.rounds;
    bool added = false;
    for (const auto& o : overlaps(r)) {
      if (o.length > static_cast<std::size_t>(r.degree_bound())) continue;
      // Rules may have been appended this round; original indices stay valid.
      ++stats.overlaps_checked;
      stats.max_overlap_length = std::max(stats.max_overlap_length, o.length);
      auto s = r.reduce(overlap_difference(r, o));
      if (!s.is_zero()) {
        r.add_unreduced(s);
        ++stats.rules_added;
        added = true;
        if (r.rules().size() > rule_limit) throw ResourceLimit("rewrite system grew past the rule limit");
      }
    }
    r.interreduce();
    if (!added) break;
  }
  for (const auto& o : overlaps(r))
    if (o.length > static_cast<std::size_t>(r.degree_bound()))
      throw BoundExceeded("overlap of length " + std::to_string(o.length) + " exceeds the degree bound " +
                          std::to_string(r.degree_bound()));
  CompletedSystem<F> out{std::move(r), {}, stats};
  out.normal_words = normal_words(out.system);
  return out;
}

inline int default_degree_bound(int n) { return 2 * n + 4; }

template <class F>
RewriteSystem<F> juyumaya_system(int n, const F& u, int degree_bound) {
  std::vector<NCPolynomial<F>> polys;
  for (auto& rel : juyumaya_relations(n, u)) polys.push_back(std::move(rel.poly));
  return RewriteSystem<F>::from_relations(Alphabet(n), polys, degree_bound);
}

/// Structure constants on the normal-word basis: b_i b_j = reduce(w_i w_j).
template <class F>
FiniteDimAlgebra<F> structure_constants(const CompletedSystem<F>& c, std::string name) {
  std::map<Word, std::uint32_t> index;
  std::vector<std::string> labels;
  for (std::uint32_t k = 0; k < c.normal_words.size(); ++k) {
    index.emplace(c.normal_words[k], k);
    labels.push_back(c.system.alphabet().format(c.normal_words[k]));
  }
  return FiniteDimAlgebra<F>::build(std::move(name), std::move(labels), index.at(Word{}),
                                    [&](std::uint32_t i, std::uint32_t j) {
                                      auto p = c.system.reduce(
                                          word_poly<F>(concat(c.normal_words[i], c.normal_words[j])));
                                      AlgebraElement<F> e;
                                      for (const auto& [w, coef] : p.terms()) {
                                        auto it = index.find(w);
                                        if (it == index.end()) throw InvariantViolation("reduced word is not normal");
                                        e.emplace(it->second, coef);
                                      }
                                      return e;
                                    });
}

/// Coordinates of a reduced polynomial in the normal-word basis.
template <class F>
AlgebraElement<F> coordinates(const CompletedSystem<F>& c, const NCPolynomial<F>& p) {
  AlgebraElement<F> e;
  auto q = c.system.reduce(p);
  for (const auto& [w, coef] : q.terms()) {
    auto it = std::lower_bound(c.normal_words.begin(), c.normal_words.end(), w, DegLexLess{});
    if (it == c.normal_words.end() || *it != w) throw InvariantViolation("reduced word is not normal");
    e.emplace(static_cast<std::uint32_t>(it - c.normal_words.begin()), coef);
  }
  return e;
}

/// Substitutes u = u0 into every structure constant; empty when some
/// denominator vanishes at u0.
inline std::optional<FiniteDimAlgebra<Rational>> specialize(const FiniteDimAlgebra<RatFunc>& a, const Rational& u0,
                                                            std::string name) {
  bool ok = true;
  auto sub = FiniteDimAlgebra<Rational>::build(std::move(name), a.labels(), a.unit_index(),
                                               [&](std::uint32_t i, std::uint32_t j) {
                                                 AlgebraElement<Rational> e;
                                                 for (const auto& [k, c] : a.product(i, j)) {
                                                   auto v = c.eval(u0);
                                                   if (!v) {
                                                     ok = false;
                                                     continue;
                                                   }
                                                   if (!is_zero(*v)) e.emplace(k, *v);
                                                 }
                                                 return e;
                                               });
  if (!ok) return std::nullopt;
  return sub;
}

}  // namespace diagramalg
