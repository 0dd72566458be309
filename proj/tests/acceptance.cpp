// Acceptance gate: one PASS/FAIL line per criterion, each with a pinned
// runtime ceiling.  Exact arithmetic throughout, so every value check has
// tolerance zero.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "diagramalg/juyumaya.hpp"
#include "json.hpp"

using namespace diagramalg;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

std::string run_cli(const std::string& args, int& code) {
  const std::string cmd = std::string(DIAGRAMALG_CLI) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    code = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

void bell_counts(Outcome& o) {
  const std::set<std::string> listing{"{1}{2}{1'}{2'}", "{1,2,1',2'}", "{1,2,1'}{2'}", "{1,2,2'}{1'}",
                                      "{1,1',2'}{2}",   "{2,1',2'}{1}", "{1,2}{1',2'}", "{1,1'}{2,2'}",
                                      "{1,2'}{1',2}",   "{1,2}{1'}{2'}", "{1,1'}{2}{2'}", "{1,2'}{1'}{2}",
                                      "{1',2}{1}{2'}",  "{2,2'}{1}{1'}", "{1',2'}{1}{2}"};
  std::set<SetPartition> expected;
  for (const auto& s : listing) expected.insert(parse_partition(s));
  int code = 0;
  const auto j = nlohmann::json::parse(run_cli("partitions enumerate --size 4 --two-row", code));
  std::set<SetPartition> got;
  for (const auto& s : j["partitions"]) got.insert(parse_partition(s.get<std::string>()));
  o.require(code == 0 && j["count"] == 15 && got == expected, "two-row listing");
  const auto plain = nlohmann::json::parse(run_cli("partitions enumerate --size 4", code));
  o.require(code == 0 && plain["count"] == 15, "partitions of {1..4}");
  for (int n = 0; n <= 8; ++n)
    o.require(bell(n) == enumerate_partitions(unprimed_ground(n)).size(), "bell(" + std::to_string(n) + ")");
  o.detail << "15 = listing; bell(0..8) = enumeration";
}

void dimension_formula(Outcome& o) {
  const std::size_t expected[] = {1, 4, 30, 360, 6240};
  for (int n = 1; n <= 5; ++n) {
    const auto d = enumerate_basis(n).size();
    o.require(d == expected[n - 1] && d == factorial(n) * bell(n).get_ui(), "n=" + std::to_string(n));
    o.detail << d << (n < 5 ? "," : "");
  }
}

void monoid_closure(Outcome& o) {
  std::size_t pairs = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto r = check_monoid(SmallRamifiedMonoid(n));
    o.require(r.closure_failures == 0 && r.removed_components == 0, "exhaustive n=" + std::to_string(n));
    pairs += r.pairs;
  }
  const auto r4 = check_monoid(SmallRamifiedMonoid(4), 100000, default_seed);
  o.require(r4.pairs >= 100000 && r4.closure_failures == 0 && r4.removed_components == 0, "random n=4");
  o.detail << "exhaustive pairs n<=3: " << pairs << ", random pairs n=4: " << r4.pairs << ", removed 0";
}

void triangulation(Outcome& o) {
  for (int n = 1; n <= 3; ++n) {
    const auto r = check_monoid(SmallRamifiedMonoid(n));
    o.require(r.exhaustive && r.oracle_mismatches == 0, "n=" + std::to_string(n));
    o.detail << "n=" << n << ": " << r.pairs << " pairs agree; ";
  }
}

void homomorphism(Outcome& o) {
  for (int n = 2; n <= 4; ++n) {
    const auto rep = check_relations(phi_images(SmallRamifiedMonoid(n), Rational(1)));
    o.require(rep.all_passed(), "n=" + std::to_string(n));
    o.detail << "n=" << n << ": " << rep.passed_count() << "/" << rep.checks.size() << "; ";
  }
}

void isomorphism(Outcome& o) {
  const std::size_t products[] = {16, 900};
  for (int n = 2; n <= 3; ++n) {
    const auto c = verify_isomorphism(n);
    bool legs = c.legs.size() == 4;
    for (const auto& l : c.legs) legs = legs && l.ran && l.passed;
    o.require(c.passed() && legs && c.product_matches == products[n - 2] && c.product_checks == products[n - 2],
              "n=" + std::to_string(n));
    o.detail << "n=" << n << ": " << c.product_matches << "/" << c.product_checks << " products; ";
  }
  const auto c4 = verify_isomorphism(4);
  bool legs = c4.legs.size() == 4;
  for (std::size_t k = 0; k < 3 && k < c4.legs.size(); ++k) legs = legs && c4.legs[k].ran && c4.legs[k].passed;
  o.require(c4.passed() && legs && c4.closure_dim == 360, "n=4");
  o.detail << "n=4: closure " << c4.closure_dim;
}

void presented_dimension(Outcome& o) {
  const std::size_t expected[] = {4, 30};
  for (int n = 2; n <= 3; ++n) {
    const auto c = complete(juyumaya_system(n, RatFunc::indeterminate(), default_degree_bound(n)));
    bool resolved = true;
    for (const auto& ov : overlaps(c.system))
      resolved = resolved && ov.length <= static_cast<std::size_t>(c.system.degree_bound()) &&
                 c.system.reduce(overlap_difference(c.system, ov)).is_zero();
    o.require(c.dimension() == expected[n - 2] && resolved, "n=" + std::to_string(n));
    o.detail << "n=" << n << ": " << c.dimension() << " normal words, " << c.system.rules().size()
             << " rules; ";
  }
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

void semisimplicity(Outcome& o) {
  auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 4; ++n) {
    const auto c = smallram_semisimplicity(SmallRamifiedMonoid(n), RankMethod::exact);
    o.require(c.radical_dim == 0, "exact n=" + std::to_string(n));
    o.detail << "n=" << n << " rank " << c.gram_rank << "; ";
  }
  const double exact = seconds_since(start);
  o.require(exact < 600, "exact runtime");
  start = std::chrono::steady_clock::now();
  const auto c5 = smallram_semisimplicity(SmallRamifiedMonoid(5), RankMethod::modular);
  const double modular = seconds_since(start);
  o.require(c5.gram_rank == 6240, "modular n=5");
  o.require(modular < 1800, "modular runtime");
  o.detail << "n=5 modular rank " << c5.gram_rank << " mod " << c5.primes.size() << " prime(s); exact "
           << exact << "s < 600s, modular " << modular << "s < 1800s";
}

void generic_semisimplicity(Outcome& o) {
  for (int n = 2; n <= 3; ++n) {
    const auto r = generic_semisimplicity_scan(n, 5, default_seed);
    o.require(r.samples.size() == 5 && r.samples[0].u0 == Rational(1) && r.all_semisimple(),
              "n=" + std::to_string(n));
    o.detail << "n=" << n << " u0 in {";
    for (std::size_t k = 0; k < r.samples.size(); ++k) o.detail << (k ? "," : "") << r.samples[k].u0;
    o.detail << "} semisimple; ";
    if (n == 2) {
      o.require(r.gram_determinant && !r.gram_determinant->is_zero(), "n=2 determinant");
      if (r.gram_determinant) o.detail << "det = " << r.gram_determinant->to_string() << "; ";
    }
  }
}

void quotient_map(Outcome& o) {
  for (int n = 2; n <= 4; ++n) {
    for (const Rational& u0 : {Rational(1), Rational(5), Rational(-3, 2)})
      o.require(check_relations(quotient_map_X(n, u0)).all_passed(), "n=" + std::to_string(n) + " u=" + to_string(u0));
    const auto g = quotient_map_X(n);
    const auto dim = span_closure(*g.target, std::span<const AlgebraElement<Rational>>(g.t_images)).dim;
    o.require(dim == factorial(n), "closure n=" + std::to_string(n));
    o.detail << "n=" << n << " closure " << dim << "; ";
  }
}

template <class F>
bool gram_symmetric(const FiniteDimAlgebra<F>& a) {
  const auto g = trace_gram(a);
  return g == g.transpose();
}

void property_suites(Outcome& o) {
  std::size_t poset = 0, restrictions = 0;
  std::vector<std::vector<GroundElement>> grounds;
  for (int k = 0; k <= 4; ++k) grounds.push_back(unprimed_ground(k));
  grounds.push_back(two_row_ground(1));
  grounds.push_back(two_row_ground(2));
  for (const auto& ground : grounds) {
      const auto all = enumerate_partitions(ground);
      for (const auto& p : all)
        for (const auto& q : all) {
          ++poset;
          if (refines(p, q) && refines(q, p) && !(p == q)) o.require(false, "antisymmetry");
          const auto j = join(p, q);
          if (!refines(p, j) || !refines(q, j) || (refines(p, q) && !(j == q))) o.require(false, "join");
          if (!refines(p, q)) continue;
          for (const auto& r : all)
            if (refines(q, r) && !refines(p, r)) o.require(false, "transitivity");
          for (std::uint32_t mask = 0; mask < (1u << ground.size()); ++mask) {
            std::vector<GroundElement> sub;
            for (std::size_t i = 0; i < ground.size(); ++i)
              if (mask >> i & 1) sub.push_back(ground[i]);
            ++restrictions;
            if (!refines(restrict(p, sub), restrict(q, sub))) o.require(false, "restriction");
          }
        }
    }
  o.detail << poset << " ordered pairs, " << restrictions << " restrictions; ";

  const auto basis2 = partition_diagram_basis(2);
  std::size_t triples = 0;
  for (const auto& a : basis2)
    for (const auto& b : basis2)
      for (const auto& c : basis2) {
        ++triples;
        const auto ab = compose(a, b), bc = compose(b, c);
        const auto l = compose(ab.diagram, c), r = compose(a, bc.diagram);
        if (!(l.diagram == r.diagram) || ab.removed_bones + l.removed_bones != bc.removed_bones + r.removed_bones)
          o.require(false, "associativity n=2");
      }
  const auto basis3 = partition_diagram_basis(3);
  std::mt19937_64 rng(default_seed);
  std::uniform_int_distribution<std::size_t> pick(0, basis3.size() - 1);
  for (int t = 0; t < 20000; ++t) {
    const auto& a = basis3[pick(rng)];
    const auto& b = basis3[pick(rng)];
    const auto& c = basis3[pick(rng)];
    const auto ab = compose(a, b), bc = compose(b, c);
    const auto l = compose(ab.diagram, c), r = compose(a, bc.diagram);
    if (!(l.diagram == r.diagram) || ab.removed_bones + l.removed_bones != bc.removed_bones + r.removed_bones)
      o.require(false, "associativity n=3");
  }
  o.detail << triples << " triples n=2, 20000 n=3; ";

  std::size_t grams = 0;
  for (int n = 1; n <= 5; ++n) {
    const SmallRamifiedMonoid m(n);
    const auto t = m.traces();
    for (std::uint32_t i = 0; i < m.size(); ++i)
      for (std::uint32_t j = i + 1; j < m.size(); ++j)
        if (t[m.multiply(i, j)] != t[m.multiply(j, i)]) o.require(false, "smallram gram n=" + std::to_string(n));
    ++grams;
    if (n <= 4) {
      o.require(gram_symmetric(group_subalgebra(m)), "group gram");
      ++grams;
    }
    if (n <= 3) {
      o.require(gram_symmetric(m.algebra()), "smallram structure-constant gram");
      ++grams;
    }
  }
  for (const Rational& d : {Rational(0), Rational(1), Rational(2), Rational(3), Rational(-1, 2)}) {
    o.require(gram_symmetric(partition_algebra(2, d)), "partition gram");
    ++grams;
  }
  for (int n = 2; n <= 3; ++n) {
    o.require(gram_symmetric(symbolic_juyumaya_algebra(n)), "presented gram");
    ++grams;
  }
  o.detail << grams << " Gram matrices symmetric";
}

struct Criterion {
  int number;
  double ceiling_seconds;
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, 1, bell_counts},           {2, 10, dimension_formula},       {3, 120, monoid_closure},
      {4, 60, triangulation},        {5, 60, homomorphism},            {6, 300, isomorphism},
      {7, 600, presented_dimension}, {8, 600 + 1800, semisimplicity}, {9, 600, generic_semisimplicity},
      {10, 60, quotient_map},        {11, 300, property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(start);
    o.require(secs < c.ceiling_seconds, "runtime");
    failed += !o.ok;
    std::printf("criterion %d: %s (%.2fs < %.0fs) %s\n", c.number, o.ok ? "PASS" : "FAIL", secs, c.ceiling_seconds,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
