// Command-line driver: enumeration, tables, certificates, scans, rendering.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "diagramalg/diagrams.hpp"
#include "diagramalg/errors.hpp"
#include "diagramalg/juyumaya.hpp"
#include "diagramalg/parallel.hpp"
#include "diagramalg/partitions.hpp"
#include "diagramalg/presented.hpp"
#include "diagramalg/render.hpp"
#include "diagramalg/serialize.hpp"
#include "diagramalg/smallram.hpp"

namespace {

using namespace diagramalg;

enum Exit { ok = 0, finding = 1, usage = 2 };

struct Options {
  std::uint64_t seed = default_seed;
  std::string format = "json";
  std::string out;
  bool dry_run = false;
  unsigned threads = 0;
};

class Usage : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw Usage("cannot open output file " + opt.out);
  f << text;
}

void emit(const Options& opt, const json& j) { emit(opt, j.dump(2) + "\n"); }

void require_format(const Options& opt, std::initializer_list<const char*> allowed) {
  for (auto a : allowed)
    if (opt.format == a) return;
  throw Usage("format '" + opt.format + "' is not available for this command");
}

int plan(const Options& opt, json details) {
  json j = document("plan");
  j["plan"] = std::move(details);
  emit(opt, j);
  return ok;
}

Rational rational_flag(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const ParseError&) {
    throw Usage(std::string("--") + name + " expects a rational such as 3 or -1/2, got '" + text + "'");
  }
}

std::size_t smallram_dim(int n) { return static_cast<std::size_t>(factorial(n)) * bell(n).get_ui(); }

int cmd_partitions_enumerate(const Options& opt, int size, bool two_row) {
  require_format(opt, {"json", "text"});
  if (size > 12) throw Usage("--size is limited to 12");
  if (two_row && size % 2) throw Usage("--two-row needs an even --size");
  if (opt.dry_run) return plan(opt, {{"ground_size", size}, {"partitions", bell(size).get_str()}});
  std::vector<std::string> parts;
  for_each_partition(two_row ? two_row_ground(size / 2) : unprimed_ground(size), [&](const SetPartition& p) { parts.push_back(format(p)); });
  if (opt.format == "text") {
    std::string s;
    for (const auto& p : parts) s += p + "\n";
    s += "count " + std::to_string(parts.size()) + "\n";
    emit(opt, s);
  } else {
    json j = document("partitions");
    j["size"] = size;
    j["count"] = parts.size();
    j["partitions"] = parts;
    emit(opt, j);
  }
  return ok;
}

int cmd_bell(const Options& opt, int max) {
  require_format(opt, {"json", "csv", "text"});
  if (opt.dry_run) return plan(opt, {{"rows", max + 1}});
  if (opt.format == "json") {
    json j = document("bell");
    json rows = json::array();
    for (int n = 0; n <= max; ++n) rows.push_back({{"n", n}, {"bell", bell(n).get_str()}});
    j["rows"] = std::move(rows);
    emit(opt, j);
  } else {
    std::string s = opt.format == "csv" ? "n,bell\n" : "";
    for (int n = 0; n <= max; ++n) s += std::to_string(n) + (opt.format == "csv" ? "," : " ") + bell(n).get_str() + "\n";
    emit(opt, s);
  }
  return ok;
}

int cmd_smallram_dim(const Options& opt, int n) {
  require_format(opt, {"json", "csv", "text"});
  if (opt.dry_run) return plan(opt, {{"n", n}, {"dim", smallram_dim(n)}});
  const SmallRamifiedMonoid m(n);
  if (opt.format == "text") {
    emit(opt, std::to_string(m.size()) + "\n");
  } else if (opt.format == "csv") {
    emit(opt, "n,dim\n" + std::to_string(n) + "," + std::to_string(m.size()) + "\n");
  } else {
    json j = document("smallram_dim");
    j["n"] = n;
    j["dim"] = m.size();
    j["bell"] = m.bell_number();
    emit(opt, j);
  }
  return ok;
}

int cmd_smallram_table(const Options& opt, int n) {
  require_format(opt, {"json"});
  const auto d = smallram_dim(n);
  if (opt.dry_run) return plan(opt, {{"n", n}, {"dim", d}, {"table_entries", d * d}});
  emit(opt, monoid_table_json(SmallRamifiedMonoid(n)));
  return ok;
}

int cmd_smallram_check(const Options& opt, int n, std::optional<std::size_t> pairs) {
  require_format(opt, {"json"});
  const std::size_t random = pairs.value_or(n <= 3 ? 0 : 100000);
  const auto d = smallram_dim(n);
  if (opt.dry_run)
    return plan(opt, {{"n", n}, {"dim", d}, {"pairs", random ? random : d * d}, {"triples", random ? random : d * d * d}});
  const auto r = check_monoid(SmallRamifiedMonoid(n), random, opt.seed);
  emit(opt, to_json(r));
  return r.passed() ? ok : finding;
}

int cmd_semisimple(const Options& opt, const std::string& algebra, int n, const std::string& delta, bool modular,
                   std::size_t primes, bool center) {
  require_format(opt, {"json"});
  const auto method = modular ? RankMethod::modular : RankMethod::exact;
  SemisimplicityCertificate cert;
  if (algebra == "smallram") {
    const auto d = smallram_dim(n);
    if (opt.dry_run) return plan(opt, {{"algebra", algebra}, {"n", n}, {"dim", d}, {"gram", {d, d}}});
    const SmallRamifiedMonoid m(n);
    cert = smallram_semisimplicity(m, method, primes);
    if (center) {
      const auto a = m.algebra();
      std::vector<AlgebraElement<Rational>> gens;
      for (auto g : m.generator_indices()) gens.push_back(a.basis(g));
      cert.center_dim = center_dim(a, std::span<const AlgebraElement<Rational>>(gens));
    }
  } else if (algebra == "group") {
    const auto d = static_cast<std::size_t>(factorial(n));
    if (opt.dry_run) return plan(opt, {{"algebra", algebra}, {"n", n}, {"dim", d}, {"gram", {d, d}}});
    const auto a = group_subalgebra(SmallRamifiedMonoid(n));
    cert = certify_semisimplicity(a, method);
    if (center) cert.center_dim = center_dim(a);
  } else {
    if (n > max_partition_algebra_n) throw Usage("--algebra partition is limited to n <= 4");
    const Rational dl = rational_flag(delta, "delta");
    const std::size_t d = bell(2 * n).get_ui();
    if (opt.dry_run) return plan(opt, {{"algebra", algebra}, {"n", n}, {"delta", to_string(dl)}, {"dim", d}, {"gram", {d, d}}});
    const auto a = partition_algebra(n, dl);
    cert = certify_semisimplicity(a, method);
    if (center) cert.center_dim = center_dim(a);
  }
  emit(opt, to_json(cert));
  return cert.semisimple() ? ok : finding;
}

std::string relation_label(const std::string& name, const std::vector<int>& indices) {
  std::string out = name + "(";
  for (std::size_t k = 0; k < indices.size(); ++k) out += (k ? "," : "") + std::to_string(indices[k]);
  return out + ")";
}

template <class F>
std::string rules_text(const CompletedSystem<F>& c) {
  const auto& ab = c.system.alphabet();
  std::string out;
  for (const auto& r : c.system.rules())
    out += ab.format(r.lead) + " -> " + r.tail.to_string(ab) + "\n";
  out += "normal words: " + std::to_string(c.dimension()) + "\n";
  return out;
}

int cmd_relations(const Options& opt, int n, const std::string& u_text, const std::string& target) {
  require_format(opt, {"json", "text"});
  const Rational u = rational_flag(u_text, "u");
  const auto count = juyumaya_relations(n, u).size();
  if (opt.dry_run)
    return plan(opt, {{"n", n}, {"target", target}, {"relations", count},
                      {"target_dim", target == "group" ? static_cast<std::size_t>(factorial(n)) : smallram_dim(n)}});
  const auto g = target == "group" ? quotient_map_X(n, u) : phi_images(SmallRamifiedMonoid(n), u);
  const auto report = check_relations(g);
  if (opt.format == "text") {
    const Alphabet ab(n);
    std::string out;
    const auto rels = juyumaya_relations(n, u);
    for (std::size_t k = 0; k < rels.size(); ++k)
      out += relation_label(rels[k].name, rels[k].indices) + ": " + rels[k].poly.to_string(ab) +
             (report.checks[k].passed ? "" : "   [fails]") + "\n";
    emit(opt, out);
    return report.all_passed() ? ok : finding;
  }
  emit(opt, to_json(report, *g.target));
  return report.all_passed() ? ok : finding;
}

int cmd_complete(const Options& opt, int n, const std::optional<std::string>& u_text, bool symbolic,
                 std::optional<int> max_degree, bool allow_large) {
  require_format(opt, {"json", "text"});
  if (u_text && symbolic) throw Usage("--u and --symbolic are mutually exclusive");
  if (n > 3 && !allow_large) throw Usage("completion is limited to n <= 3; pass --allow-large for n = 4");
  const int bound = max_degree.value_or(default_degree_bound(n));
  const bool sym = symbolic || !u_text;
  if (opt.dry_run)
    return plan(opt, {{"n", n}, {"symbolic", sym}, {"relations", juyumaya_relations(n, Rational(1)).size()},
                      {"degree_bound", bound}, {"target_dim", smallram_dim(n)}});
  json j;
  std::size_t dim = 0;
  if (sym) {
    const auto c = complete(juyumaya_system(n, RatFunc::indeterminate(), bound));
    j = to_json(c);
    j["u"] = "symbolic";
    dim = c.dimension();
    if (opt.format == "text") emit(opt, rules_text(c));
  } else {
    const Rational u = rational_flag(*u_text, "u");
    const auto c = complete(juyumaya_system(n, u, bound));
    j = to_json(c);
    j["u"] = to_string(u);
    dim = c.dimension();
    if (opt.format == "text") emit(opt, rules_text(c));
  }
  j["expected_dimension"] = smallram_dim(n);
  j["matches_expected"] = dim == smallram_dim(n);
  if (opt.format != "text") emit(opt, j);
  return dim == smallram_dim(n) ? ok : finding;
}

int cmd_verify_iso(const Options& opt, int n) {
  require_format(opt, {"json"});
  if (opt.dry_run)
    return plan(opt, {{"n", n}, {"dim", smallram_dim(n)}, {"presented_path", n <= presented_iso_limit},
                      {"product_checks", n <= presented_iso_limit ? smallram_dim(n) * smallram_dim(n) : 0}});
  const auto c = verify_isomorphism(n);
  emit(opt, to_json(c));
  return c.passed() ? ok : finding;
}

int cmd_scan(const Options& opt, int n, std::size_t samples, const std::vector<std::string>& at) {
  require_format(opt, {"json"});
  std::vector<Rational> fixed;
  for (const auto& s : at) fixed.push_back(rational_flag(s, "at"));
  if (opt.dry_run)
    return plan(opt, {{"n", n}, {"dim", smallram_dim(n)}, {"samples", samples}, {"seed", opt.seed},
                      {"gram_determinant", n == 2}});
  const auto r = generic_semisimplicity_scan(n, samples, opt.seed, fixed);
  emit(opt, to_json(r));
  return r.all_semisimple() ? ok : finding;
}

int cmd_render(const Options& opt, const std::string& text, std::optional<int> n) {
  if (opt.format != "svg" && opt.format != "text" && opt.format != "json")
    throw Usage("render supports --format svg or text");
  const bool svg = opt.format != "text";
  RamifiedDiagram r;
  bool ramified = text.find('|') != std::string::npos;
  if (text.find('{') == std::string::npos) {
    if (!n) throw Usage("named elements such as A(1,2) need --n");
    const auto d = special(*n, parse_special(text));
    r = {d, d};
  } else {
    r = parse_ramified(text);
  }
  if (opt.dry_run) return plan(opt, {{"n", r.n()}, {"ramified", ramified}});
  if (svg) emit(opt, ramified ? render_svg(r) : render_svg(r.fine()));
  else emit(opt, ramified ? render_text(r) : render_text(r.fine()));
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition, ramified partition and Juyumaya algebra computations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--seed", opt.seed, "Seed for every random choice");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "text", "svg"}));
  app.add_option("--out", opt.out, "Write output to this file instead of standard output");
  app.add_flag("--dry-run", opt.dry_run, "Validate inputs and print the planned computation size");
  app.add_option("--threads", opt.threads, "Worker threads (default: hardware concurrency)")->check(CLI::Range(1u, 1024u));

  std::function<int()> run;
  auto bind = [&](CLI::App* sub, std::function<int()> f) {
    sub->fallthrough();
    sub->callback([&run, f] { run = f; });
  };

  int size = 0, max = 0, n = 0;
  bool two_row = false;
  auto* parts = app.add_subcommand("partitions", "Set partitions");
  parts->require_subcommand(1);
  parts->fallthrough();
  auto* parts_enum = parts->add_subcommand("enumerate", "List the partitions of {1..K}");
  parts_enum->add_option("--size", size, "Ground set size K")->required()->check(CLI::Range(0, 12));
  parts_enum->add_flag("--two-row", two_row, "Use {1..K/2} and {1'..K/2'} as the ground set");
  bind(parts_enum, [&] { return cmd_partitions_enumerate(opt, size, two_row); });

  auto* bell_cmd = app.add_subcommand("bell", "Bell numbers B_0..B_N");
  bell_cmd->add_option("--max", max, "Largest N")->required()->check(CLI::Range(0, 1000));
  bind(bell_cmd, [&] { return cmd_bell(opt, max); });

  auto* sr = app.add_subcommand("smallram", "The small ramified partition algebra");
  sr->require_subcommand(1);
  sr->fallthrough();
  auto* sr_dim = sr->add_subcommand("dim", "Dimension n! B_n");
  sr_dim->add_option("--n", n, "Rank n")->required()->check(CLI::Range(1, 5));
  bind(sr_dim, [&] { return cmd_smallram_dim(opt, n); });
  auto* sr_table = sr->add_subcommand("table", "Monoid multiplication table as JSON");
  sr_table->add_option("--n", n, "Rank n")->required()->check(CLI::Range(1, 5));
  bind(sr_table, [&] { return cmd_smallram_table(opt, n); });
  std::optional<std::size_t> pairs;
  auto* sr_check = sr->add_subcommand("check", "Closure, associativity and oracle agreement");
  sr_check->add_option("--n", n, "Rank n")->required()->check(CLI::Range(1, 5));
  sr_check->add_option("--pairs", pairs, "Random pairs to test (default: all pairs for n <= 3, 100000 otherwise)");
  bind(sr_check, [&] { return cmd_smallram_check(opt, n, pairs); });

  std::string algebra = "smallram", delta = "1";
  bool modular = false, center = false;
  std::size_t primes = 3;
  auto* ss = app.add_subcommand("semisimple", "Trace-form semisimplicity certificate");
  ss->add_option("--algebra", algebra, "Algebra")->check(CLI::IsMember({"smallram", "partition", "group"}));
  ss->add_option("--n", n, "Rank n")->required()->check(CLI::Range(1, 5));
  ss->add_option("--delta", delta, "Parameter of the partition algebra");
  ss->add_flag("--modular", modular, "Rank modulo large primes (a lower bound; full rank still certifies)");
  ss->add_option("--primes", primes, "Number of primes for --modular")->check(CLI::Range(1, 16));
  ss->add_flag("--center", center, "Also report the dimension of the center");
  bind(ss, [&] { return cmd_semisimple(opt, algebra, n, delta, modular, primes, center); });

  auto* jy = app.add_subcommand("juyumaya", "The algebra E_n and its maps");
  jy->require_subcommand(1);
  jy->fallthrough();
  std::string u_text = "1", target = "smallram";
  auto* rel = jy->add_subcommand("relations", "Check A1-A9 on generator images");
  rel->add_option("--n", n, "Rank n")->required()->check(CLI::Range(2, 5));
  rel->add_option("--u", u_text, "Value of u");
  rel->add_option("--target", target, "Image algebra")->check(CLI::IsMember({"smallram", "group"}));
  bind(rel, [&] { return cmd_relations(opt, n, u_text, target); });
  std::optional<std::string> cu;
  std::optional<int> max_degree;
  bool symbolic = false, allow_large = false;
  auto* comp = jy->add_subcommand("complete", "Complete the presentation and count normal words");
  comp->add_option("--n", n, "Rank n")->required()->check(CLI::Range(2, 4));
  comp->add_option("--u", cu, "Specialise u to this rational");
  comp->add_flag("--symbolic", symbolic, "Work over Q(u) (the default)");
  comp->add_option("--max-degree", max_degree, "Degree bound for overlaps (default 2n+4)")->check(CLI::Range(2, 64));
  comp->add_flag("--allow-large", allow_large, "Permit n = 4");
  bind(comp, [&] { return cmd_complete(opt, n, cu, symbolic, max_degree, allow_large); });
  auto* iso = jy->add_subcommand("verify-iso", "Certify E_n(1) = P_n^⋉");
  iso->add_option("--n", n, "Rank n")->required()->check(CLI::Range(2, 4));
  bind(iso, [&] { return cmd_verify_iso(opt, n); });
  std::size_t samples = 5;
  std::vector<std::string> at;
  auto* scan = jy->add_subcommand("scan", "Semisimplicity of E_n(u0) at sampled u0");
  scan->add_option("--n", n, "Rank n")->required()->check(CLI::Range(2, 3));
  scan->add_option("--samples", samples, "Number of sample points, u0 = 1 included")->check(CLI::Range(1, 1000));
  scan->add_option("--at", at, "Extra fixed sample points");
  scan->add_option("--seed", opt.seed, "Seed for the sample points");
  bind(scan, [&] { return cmd_scan(opt, n, samples, at); });

  std::string diagram;
  std::optional<int> rn;
  auto* render = app.add_subcommand("render", "Draw a (ramified) diagram");
  render->add_option("--diagram", diagram, "e.g. \"{1,2'}{2,1'}\", \"fine | coarse\" or A(1,2)")->required();
  render->add_option("--n", rn, "Rank for named elements")->check(CLI::Range(1, 12));
  bind(render, [&] {
    Options o = opt;
    if (o.format == "json") o.format = "svg";
    return cmd_render(o, diagram, rn);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }
  if (opt.threads) set_thread_count(opt.threads);
  try {
    return run();
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const BadIndex& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const MalformedPartition& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const SizeLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "finding: " << e.what() << "\n";
    return finding;
  }
}
