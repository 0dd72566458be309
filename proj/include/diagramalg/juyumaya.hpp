#pragma once

#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "diagramalg/errors.hpp"
#include "diagramalg/exactlin/algebra.hpp"
#include "diagramalg/exactlin/elimination.hpp"
#include "diagramalg/parallel.hpp"
#include "diagramalg/presented.hpp"
#include "diagramalg/smallram.hpp"

namespace diagramalg {

/// An assignment T_i -> t_images[i-1], E_i -> e_images[i-1] into a target.
template <class F>
struct GeneratorImages {
  std::shared_ptr<const FiniteDimAlgebra<F>> target;
  std::vector<AlgebraElement<F>> t_images;
  std::vector<AlgebraElement<F>> e_images;
  F u_value;

  int n() const { return static_cast<int>(t_images.size()) + 1; }

  const AlgebraElement<F>& image(const Alphabet& ab, std::uint8_t code) const {
    const Letter l = ab.letter(code);
    return (l.kind == Letter::Kind::T ? t_images : e_images).at(static_cast<std::size_t>(l.index - 1));
  }
};

template <class F>
AlgebraElement<F> evaluate(const GeneratorImages<F>& g, const Word& w) {
  const Alphabet ab(g.n());
  AlgebraElement<F> x = g.target->unit();
  for (auto c : w) {
    x = g.target->multiply(x, g.image(ab, c));
    if (x.empty()) break;
  }
  return x;
}

template <class F>
AlgebraElement<F> evaluate(const GeneratorImages<F>& g, const NCPolynomial<F>& p) {
  AlgebraElement<F> out;
  for (const auto& [w, c] : p.terms()) axpy(out, c, evaluate(g, w));
  return out;
}

template <class F>
struct RelationCheck {
  std::string name;
  std::vector<int> indices;
  bool passed = false;
  AlgebraElement<F> residual;  // empty when passed
};

template <class F>
struct RelationReport {
  int n = 0;
  std::string target;
  F u_value;
  std::vector<RelationCheck<F>> checks;

  std::size_t passed_count() const {
    std::size_t k = 0;
    for (const auto& c : checks) k += c.passed;
    return k;
  }
  bool all_passed() const { return passed_count() == checks.size(); }
};

/// Evaluates every instance of A1-A9 (at u = g.u_value) under the images.
template <class F>
RelationReport<F> check_relations(const GeneratorImages<F>& g) {
  if (g.n() < 2 || g.e_images.size() != g.t_images.size())
    throw SizeMismatch("generator image lists must both have length n-1");
  RelationReport<F> report{g.n(), g.target->name(), g.u_value, {}};
  for (auto& rel : juyumaya_relations(g.n(), g.u_value)) {
    RelationCheck<F> c{rel.name, rel.indices, false, evaluate(g, rel.poly)};
    c.passed = c.residual.empty();
    report.checks.push_back(std::move(c));
  }
  return report;
}

/// E_i -> (1, A^{i,i+1}) and T_i -> (σ_{i,i+1}, σ_{i,i+1}) in P_n^⋉.
inline GeneratorImages<Rational> phi_images(const SmallRamifiedMonoid& m, const Rational& u,
                                            std::shared_ptr<const FiniteDimAlgebra<Rational>> target = nullptr) {
  if (m.n() < 2) throw BadIndex("the presentation needs n >= 2");
  if (!target) target = std::make_shared<const FiniteDimAlgebra<Rational>>(m.algebra());
  if (target->dim() != m.size()) throw SizeMismatch("target is not the algebra of this monoid");
  GeneratorImages<Rational> g{std::move(target), {}, {}, u};
  const auto gens = generators(m.n());
  const std::size_t k = gens.size() / 2;
  for (std::size_t i = 0; i < k; ++i) {
    g.e_images.push_back(g.target->basis(m.index_of(gens[i])));
    g.t_images.push_back(g.target->basis(m.index_of(gens[k + i])));
  }
  return g;
}

/// T_i -> σ_{i,i+1} and E_i -> 0 in the group algebra of S_n, realised as
/// the span of the (w, finest) inside P_n^⋉.
inline GeneratorImages<Rational> quotient_map_X(int n, const Rational& u = Rational(1)) {
  if (n < 2) throw BadIndex("the presentation needs n >= 2");
  const SmallRamifiedMonoid m(n);
  GeneratorImages<Rational> g{std::make_shared<const FiniteDimAlgebra<Rational>>(group_subalgebra(m)), {}, {}, u};
  for (int i = 1; i < n; ++i) {
    // group_subalgebra indexes permutations by lexicographic rank.
    g.t_images.push_back(g.target->basis(static_cast<std::uint32_t>(Permutation::transposition(n, i, i + 1).rank())));
    g.e_images.push_back({});
  }
  return g;
}

struct IsoLeg {
  std::string name;
  bool ran = false;
  bool passed = false;
  std::string detail;
};

/// Evidence that E_n(1) -> P_n^⋉ is an isomorphism.
struct IsoCertificate {
  int n = 0;
  std::size_t formula_dim = 0;  // n! B_n
  std::size_t target_dim = 0;
  std::size_t closure_dim = 0;
  std::optional<std::size_t> normal_words;
  std::size_t relations_checked = 0;
  std::size_t relations_passed = 0;
  std::size_t product_checks = 0;
  std::size_t product_matches = 0;
  std::vector<IsoLeg> legs;

  bool passed() const {
    for (const auto& l : legs)
      if (l.ran && !l.passed) return false;
    return !legs.empty();
  }
};

inline constexpr int presented_iso_limit = 3;

/// Legs: (i) relations hold at u = 1, (ii) generator images span P_n^⋉,
/// (iii) source and target dimensions agree, and for n <= 3 (iv) the
/// normal-word basis maps bijectively and multiplicatively onto P_n^⋉.
inline IsoCertificate verify_isomorphism(int n) {
  if (n < 2) throw BadIndex("the presentation needs n >= 2");
  if (n > 4) throw SizeLimit("verify_isomorphism is limited to n <= 4");
  IsoCertificate cert;
  cert.n = n;
  const SmallRamifiedMonoid m(n);
  const auto g = phi_images(m, Rational(1));
  cert.target_dim = g.target->dim();
  cert.formula_dim = static_cast<std::size_t>(factorial(n)) * bell(n).get_ui();

  const auto rel = check_relations(g);
  cert.relations_checked = rel.checks.size();
  cert.relations_passed = rel.passed_count();
  cert.legs.push_back({"homomorphism", true, rel.all_passed(),
                       std::to_string(cert.relations_passed) + "/" + std::to_string(cert.relations_checked) +
                           " relation instances hold"});

  std::vector<AlgebraElement<Rational>> seeds = g.e_images;
  seeds.insert(seeds.end(), g.t_images.begin(), g.t_images.end());
  cert.closure_dim = span_closure(*g.target, std::span<const AlgebraElement<Rational>>(seeds)).dim;
  cert.legs.push_back({"surjectivity", true, cert.closure_dim == cert.target_dim,
                       "closure " + std::to_string(cert.closure_dim) + " of " + std::to_string(cert.target_dim)});

  std::optional<CompletedSystem<Rational>> completed;
  if (n <= presented_iso_limit) {
    completed = complete(juyumaya_system(n, Rational(1), default_degree_bound(n)));
    cert.normal_words = completed->dimension();
  }
  const bool dims_ok = cert.formula_dim == cert.target_dim && (!cert.normal_words || *cert.normal_words == cert.target_dim);
  cert.legs.push_back({"dimension", true, dims_ok,
                       "source " + std::to_string(cert.normal_words.value_or(cert.formula_dim)) + " (n!B_n = " +
                           std::to_string(cert.formula_dim) + ") vs target " + std::to_string(cert.target_dim)});

  IsoLeg bij{"bijection", false, false, "presented path runs for n <= 3 only"};
  if (completed) {
    bij.ran = true;
    const auto& words = completed->normal_words;
    std::vector<AlgebraElement<Rational>> images;
    for (const auto& w : words) images.push_back(evaluate(g, w));
    Matrix<Rational> mat(words.size(), cert.target_dim);
    for (std::size_t r = 0; r < images.size(); ++r)
      for (const auto& [k, c] : images[r]) mat(r, k) = c;
    const std::size_t image_rank = rank(mat);
    auto linear_image = [&](const AlgebraElement<Rational>& x) {
      AlgebraElement<Rational> out;
      for (const auto& [k, c] : x) axpy(out, c, images[k]);
      return out;
    };
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = 0; j < words.size(); ++j) {
        ++cert.product_checks;
        const auto lhs = linear_image(coordinates(*completed, word_poly<Rational>(concat(words[i], words[j]))));
        cert.product_matches += lhs == g.target->multiply(images[i], images[j]);
      }
    bij.passed = image_rank == words.size() && image_rank == cert.target_dim && cert.product_matches == cert.product_checks;
    bij.detail = "image rank " + std::to_string(image_rank) + ", " + std::to_string(cert.product_matches) + "/" +
                 std::to_string(cert.product_checks) + " products agree";
  }
  cert.legs.push_back(std::move(bij));
  return cert;
}

struct ScanSample {
  Rational u0;
  bool semisimple = false;
  std::size_t gram_rank = 0;
  std::size_t radical_dim = 0;
};

struct ScanReport {
  int n = 0;
  std::uint64_t seed = 0;
  std::size_t dim = 0;
  std::vector<ScanSample> samples;
  std::vector<Rational> redrawn;  // rejected draws: u0 = 0, repeats, or vanishing denominators
  std::optional<RatFunc> gram_determinant;
  std::vector<Rational> determinant_zeros;  // rational zeros and poles
  std::optional<std::size_t> symbolic_gram_rank;

  bool all_semisimple() const {
    for (const auto& s : samples)
      if (!s.semisimple) return false;
    return true;
  }
};

inline constexpr int scan_limit = 3;
inline constexpr std::uint64_t default_seed = 20120427;

/// E_n over Q(u), on the normal-word basis of the symbolic completion.
inline FiniteDimAlgebra<RatFunc> symbolic_juyumaya_algebra(int n) {
  if (n > scan_limit) throw SizeLimit("symbolic completion is limited to n <= 3");
  const auto c = complete(juyumaya_system(n, RatFunc::indeterminate(), default_degree_bound(n)));
  return structure_constants(c, "juyumaya(n=" + std::to_string(n) + ",u)");
}

/// Specialises E_n(u) at u0 = 1, then at the `fixed` values, then at seeded
/// random rationals p/q with p, q in [-100, 100], until `samples` points are
/// tested; each is checked for a nondegenerate trace form.  At n = 2 the
/// Gram determinant is also computed over Q(u).
inline ScanReport generic_semisimplicity_scan(int n, std::size_t samples, std::uint64_t seed = default_seed,
                                              const std::vector<Rational>& fixed = {}) {
  if (n < 2) throw BadIndex("the presentation needs n >= 2");
  if (n > scan_limit) throw SizeLimit("the scan is limited to n <= 3");
  if (samples < 1) throw BadIndex("at least one sample is required");
  ScanReport report;
  report.n = n;
  report.seed = seed;
  const auto generic = symbolic_juyumaya_algebra(n);
  report.dim = generic.dim();

  std::vector<Rational> points;
  std::vector<FiniteDimAlgebra<Rational>> specialised;
  std::set<Rational> seen;
  auto accept = [&](const Rational& u0) {
    if (points.size() >= samples) return;
    if (sgn(u0) == 0 || seen.count(u0)) {
      report.redrawn.push_back(u0);
      return;
    }
    auto a = specialize(generic, u0, "juyumaya(n=" + std::to_string(n) + ",u=" + to_string(u0) + ")");
    if (!a) {
      report.redrawn.push_back(u0);
      return;
    }
    seen.insert(u0);
    points.push_back(u0);
    specialised.push_back(std::move(*a));
  };
  accept(Rational(1));
  for (const auto& u0 : fixed) accept(u0);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> draw(-100, 100);
  std::size_t attempts = 0;
  while (points.size() < samples) {
    if (++attempts > 100000) throw ResourceLimit("could not draw enough admissible sample points");
    const long p = draw(rng);
    const long q = draw(rng);
    if (q == 0) continue;
    Rational u0(p, q);
    u0.canonicalize();
    accept(u0);
  }

  report.samples.resize(points.size());
  parallel_for(0, points.size(), [&](std::size_t k) {
    const auto cert = certify_semisimplicity(specialised[k], RankMethod::exact);
    report.samples[k] = {points[k], cert.semisimple(), cert.gram_rank, cert.radical_dim};
  });

  if (n == 2) {
    const auto gram = trace_gram(generic);
    report.gram_determinant = determinant(gram);
    std::set<Rational> z;
    for (const auto& r : report.gram_determinant->numerator().rational_roots()) z.insert(r);
    for (const auto& r : report.gram_determinant->denominator().rational_roots()) z.insert(r);
    report.determinant_zeros.assign(z.begin(), z.end());
    report.symbolic_gram_rank = rank(gram);
  }
  return report;
}

}  // namespace diagramalg
