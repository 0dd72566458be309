#include <gtest/gtest.h>

#include <map>
#include <random>

#include "diagramalg/juyumaya.hpp"

using namespace diagramalg;

namespace {

using Key = std::pair<std::uint64_t, std::string>;

Key key_of(const TensorImage& t) { return {t.group_part.rank(), t.delta_part.to_string()}; }

// Images E_i -> (1, A^{i,i+1}) and T_i -> (σ, σ) multiplied componentwise
// in FS_n ⊗ Δ_n, without going through the ⋉ table.
std::map<Key, Rational> rho(int n, const NCPolynomial<Rational>& p) {
  const Alphabet ab(n);
  std::map<Key, Rational> out;
  for (const auto& [w, c] : p.terms()) {
    TensorImage x{Permutation::identity(n), identity_diagram(n)};
    for (auto code : w) {
      const Letter l = ab.letter(code);
      const auto s = Permutation::transposition(n, l.index, l.index + 1);
      const TensorImage g = l.kind == Letter::Kind::E
                                ? TensorImage{Permutation::identity(n), special(n, {Special::Kind::A, l.index, l.index + 1})}
                                : TensorImage{s, perm_to_diagram(s)};
      auto prod = tensor_multiply(x, g);
      EXPECT_EQ(prod.removed, 0);
      x = std::move(prod.image);
    }
    auto& slot = out[key_of(x)];
    slot += c;
    if (is_zero(slot)) out.erase(key_of(x));
  }
  return out;
}

Word random_word(int letters, std::size_t max_len, std::mt19937_64& rng) {
  Word w(std::uniform_int_distribution<std::size_t>(0, max_len)(rng));
  for (auto& c : w) c = static_cast<std::uint8_t>(std::uniform_int_distribution<int>(0, letters - 1)(rng));
  return w;
}

}  // namespace

TEST(Relations, PhiImagesSatisfyEveryRelationAtOne) {
  for (int n = 2; n <= 4; ++n) {
    const auto report = check_relations(phi_images(SmallRamifiedMonoid(n), Rational(1)));
    EXPECT_TRUE(report.all_passed()) << n;
    EXPECT_EQ(report.checks.size(), juyumaya_relations(n, Rational(1)).size());
    for (const auto& c : report.checks) EXPECT_TRUE(c.residual.empty());
  }
}

TEST(Relations, QuadraticRelationFailsAwayFromOne) {
  const SmallRamifiedMonoid m(3);
  const auto g = phi_images(m, Rational(2));
  const auto report = check_relations(g);
  EXPECT_FALSE(report.all_passed());
  for (const auto& c : report.checks) {
    EXPECT_EQ(c.passed, c.name != "A9") << c.name;
    EXPECT_EQ(c.passed, c.residual.empty());
    if (c.name == "A9") {
      const int i = c.indices[0];
      // T^2 maps to 1, leaving -(u-1)(E - ET).
      auto expected = g.target->multiply(g.e_images[i - 1], g.t_images[i - 1]);
      axpy(expected, Rational(-1), g.e_images[i - 1]);
      EXPECT_EQ(c.residual, expected);
    }
  }
}

TEST(Relations, TensorFactorisationSatisfiesEveryRelation) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& rel : juyumaya_relations(n, Rational(1)))
      EXPECT_TRUE(rho(n, rel.poly).empty()) << rel.name << " n=" << n;
}

TEST(Relations, MismatchedImageListsRejected) {
  auto g = phi_images(SmallRamifiedMonoid(3), Rational(1));
  g.e_images.pop_back();
  EXPECT_THROW(check_relations(g), SizeMismatch);
  EXPECT_THROW(phi_images(SmallRamifiedMonoid(1), Rational(1)), BadIndex);
}

TEST(QuotientMap, PassesForEveryParameter) {
  for (int n = 2; n <= 4; ++n)
    for (const Rational& u0 : {Rational(1), Rational(5), Rational(-3), Rational(2, 7)}) {
      const auto g = quotient_map_X(n, u0);
      EXPECT_TRUE(check_relations(g).all_passed()) << "n=" << n << " u=" << u0;
      const auto closure = span_closure(*g.target, std::span<const AlgebraElement<Rational>>(g.t_images));
      EXPECT_EQ(closure.dim, factorial(n));
    }
  EXPECT_THROW(quotient_map_X(1), BadIndex);
}

TEST(Soundness, ReducedIdentitiesHoldUnderImages) {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 3; ++n) {
    const auto c = complete(juyumaya_system(n, Rational(1), default_degree_bound(n)));
    const auto g = phi_images(SmallRamifiedMonoid(n), Rational(1));
    for (int trial = 0; trial < 100; ++trial) {
      const Word w = random_word(2 * (n - 1), 9, rng);
      EXPECT_EQ(evaluate(g, w), evaluate(g, c.system.reduce(word_poly<Rational>(w))));
    }
  }
}

TEST(Isomorphism, CertificatesPass) {
  const std::size_t products[] = {16, 900};
  for (int n = 2; n <= 3; ++n) {
    const auto cert = verify_isomorphism(n);
    EXPECT_TRUE(cert.passed()) << n;
    ASSERT_EQ(cert.legs.size(), 4u);
    for (const auto& leg : cert.legs) EXPECT_TRUE(leg.ran && leg.passed) << leg.name;
    EXPECT_EQ(cert.product_checks, products[n - 2]);
    EXPECT_EQ(cert.product_matches, products[n - 2]);
    EXPECT_EQ(cert.normal_words, cert.target_dim);
  }
  const auto four = verify_isomorphism(4);
  EXPECT_TRUE(four.passed());
  EXPECT_EQ(four.closure_dim, 360u);
  EXPECT_FALSE(four.legs[3].ran);
  EXPECT_THROW(verify_isomorphism(5), SizeLimit);
  EXPECT_THROW(verify_isomorphism(1), BadIndex);
}

TEST(Scan, TwoIsGenericallySemisimple) {
  const auto r = generic_semisimplicity_scan(2, 5);
  ASSERT_EQ(r.samples.size(), 5u);
  EXPECT_EQ(r.samples[0].u0, Rational(1));
  EXPECT_TRUE(r.all_semisimple());
  ASSERT_TRUE(r.gram_determinant.has_value());
  EXPECT_FALSE(r.gram_determinant->is_zero());
  EXPECT_EQ(r.symbolic_gram_rank, 4u);
  EXPECT_EQ(r.determinant_zeros, std::vector<Rational>{Rational(-1)});

  // The determinant agrees with direct completion at several points.
  for (const Rational& u0 : {Rational(1), Rational(3), Rational(-2, 5), Rational(-1)}) {
    const auto c = complete(juyumaya_system(2, u0, default_degree_bound(2)));
    EXPECT_EQ(r.gram_determinant->eval(u0), determinant(trace_gram(structure_constants(c, "E2"))));
  }
}

TEST(Scan, ExceptionalPointIsAFindingNotAnError) {
  const auto r = generic_semisimplicity_scan(2, 2, default_seed, {Rational(-1)});
  ASSERT_EQ(r.samples.size(), 2u);
  EXPECT_TRUE(r.samples[0].semisimple);
  EXPECT_EQ(r.samples[1].u0, Rational(-1));
  EXPECT_FALSE(r.samples[1].semisimple);
  EXPECT_GT(r.samples[1].radical_dim, 0u);
}

TEST(Scan, ThreeAtSeededPoints) {
  const auto r = generic_semisimplicity_scan(3, 5, default_seed);
  EXPECT_EQ(r.dim, 30u);
  EXPECT_EQ(r.samples[0].u0, Rational(1));
  EXPECT_TRUE(r.samples[0].semisimple);
  EXPECT_TRUE(r.all_semisimple());
  std::set<Rational> distinct;
  for (const auto& s : r.samples) {
    EXPECT_NE(sgn(s.u0), 0);
    distinct.insert(s.u0);
  }
  EXPECT_EQ(distinct.size(), 5u);
  EXPECT_FALSE(r.gram_determinant.has_value());
}

TEST(Scan, ReproducibleAndRejectsDuplicates) {
  const auto a = generic_semisimplicity_scan(2, 6, 3, {Rational(1), Rational(0), Rational(2)});
  const auto b = generic_semisimplicity_scan(2, 6, 3, {Rational(1), Rational(0), Rational(2)});
  ASSERT_EQ(a.samples.size(), b.samples.size());
  for (std::size_t k = 0; k < a.samples.size(); ++k) EXPECT_EQ(a.samples[k].u0, b.samples[k].u0);
  EXPECT_GE(a.redrawn.size(), 2u);
  EXPECT_EQ(a.redrawn[0], Rational(1));
  EXPECT_EQ(a.redrawn[1], Rational(0));
  EXPECT_EQ(a.samples[1].u0, Rational(2));
  EXPECT_THROW(generic_semisimplicity_scan(4, 1), SizeLimit);
  EXPECT_THROW(generic_semisimplicity_scan(2, 0), BadIndex);
}
