#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fricke/aut.h"
#include "fricke/graded.h"
#include "fricke/ideal.h"
#include "fricke/identities.h"
#include "fricke/json_io.h"
#include "fricke/oracle.h"
#include "fricke/trace.h"
#include "fricke/word.h"

namespace {

using nlohmann::ordered_json;
using namespace fricke;

bool g_json = false;

void emit(const ordered_json& doc, const std::string& text) {
  if (g_json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

Poly read_poly(const std::string& path) {
  nlohmann::json doc;
  if (path == "-" || path.empty()) {
    std::cin >> doc;
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    in >> doc;
  }
  return poly_from_json(doc);
}

void emit_poly(const Poly& p) { emit(poly_to_json(p), p.str()); }

Automorphism parse_matrix(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad --matrix: ") + e.what());
  }
  if (!doc.is_array() || doc.empty())
    throw std::invalid_argument("--matrix must be a JSON array of rows");
  int n = static_cast<int>(doc.size());
  std::vector<long long> entries;
  entries.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : doc) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("--matrix must be square");
    for (const auto& x : row) {
      if (!x.is_number_integer())
        throw std::invalid_argument("--matrix entries must be integers");
      entries.push_back(x.get<long long>());
    }
  }
  return Automorphism(n, std::move(entries));
}

struct Check {
  std::string name;
  bool pass;
};

int report(const std::string& suite, std::uint64_t seed, int trials,
           const std::vector<Check>& checks) {
  bool all = true;
  for (const auto& c : checks) all = all && c.pass;
  ordered_json doc;
  doc["schema"] = 1;
  doc["suite"] = suite;
  doc["seed"] = seed;
  doc["trials"] = trials;
  doc["checks"] = ordered_json::array();
  std::ostringstream text;
  for (const auto& c : checks) {
    doc["checks"].push_back({{"name", c.name}, {"pass", c.pass}});
    text << (c.pass ? "[ok]   " : "[FAIL] ") << c.name << "\n";
  }
  doc["pass"] = all;
  text << (all ? "all checks passed" : "COUNTEREXAMPLE FOUND");
  emit(doc, text.str());
  return all ? 0 : 1;
}

std::vector<Rational> first_primes(int n) {
  std::vector<Rational> out;
  for (int candidate = 2; static_cast<int>(out.size()) < n; ++candidate) {
    bool prime = true;
    for (int d = 2; d * d <= candidate; ++d)
      if (candidate % d == 0) prime = false;
    if (prime) out.emplace_back(candidate);
  }
  return out;
}

int run_verify(const std::string& suite, std::uint64_t seed, int trials, int order, int n) {
  if (n < 1) throw CLI::ValidationError("--n", "rank must be >= 1");
  std::vector<Check> checks;
  if (suite == "vogt") {
    const std::pair<const char*, TraceIdentity> ids[] = {
        {"inverse-trace", TraceIdentity::InverseTrace},
        {"cyclic-trace", TraceIdentity::CyclicTrace},
        {"product-inverse-sum", TraceIdentity::ProductInverseSum},
        {"triple-swap", TraceIdentity::TripleSwap},
        {"commutator-trace", TraceIdentity::CommutatorTrace},
        {"quad-expansion", TraceIdentity::QuadExpansion}};
    for (auto& [name, id] : ids)
      checks.push_back({name, verify_vogt(id, seed, trials)});
  } else if (suite == "f3") {
    checks.push_back({"f3-kernel-relation", verify_f3_kernel(seed, trials)});
  } else if (suite == "ideal") {
    for (int rank = 1; rank <= n; ++rank) {
      bool laurent_ok = true, nf_ok = true, trivial_ok = true;
      for (const auto& g : ideal_generators(rank)) {
        if (!laurent_image(g.poly, rank).is_zero()) laurent_ok = false;
        if (!normal_form(g.poly).is_zero()) nf_ok = false;
        if (rank == 1 && !g.is_trivial()) trivial_ok = false;
      }
      std::string tag = "n=" + std::to_string(rank);
      checks.push_back({tag + " laurent image zero", laurent_ok});
      checks.push_back({tag + " normal form zero", nf_ok});
      if (rank == 1) checks.push_back({"n=1 all generators trivial", trivial_ok});
    }
  } else if (suite == "oracle-agreement") {
    RationalSampler sampler(seed);
    std::vector<Rational> lambdas = first_primes(n);
    RepAssignment rep = diagonal_rep(lambdas);
    bool eval_ok = true, series_ok = true;
    for (int t = 0; t < trials; ++t) {
      Poly p = sampler.poly(t % 2 ? Coord::T : Coord::TPrime, n, 3, 6);
      LaurentPoly li = laurent_image(p, n);
      Rational direct = p.eval([&](VarId v) {
        AbelianWord w = v.is_pair()
                            ? AbelianWord::generator(n, v.first()) *
                                  AbelianWord::generator(n, v.second())
                            : AbelianWord::generator(n, v.first());
        Rational tr = eval_word_trace(w, rep);
        return p.coord() == Coord::TPrime ? tr - 2 : tr;
      });
      if (li.eval(lambdas) != direct) eval_ok = false;
      if (series_image(p, n, order) != expand_at_one_minus_s(li, order)) series_ok = false;
    }
    checks.push_back({"laurent eval matches matrix traces", eval_ok});
    checks.push_back({"series matches laurent at lambda = 1 - s", series_ok});
  } else {
    throw CLI::ValidationError("--suite", "unknown suite '" + suite + "'");
  }
  return report(suite, seed, trials, checks);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in the ring of Fricke characters of a free abelian group"};
  app.require_subcommand(1);
  app.fallthrough(true);
  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  int n = 0, k = 1, trials = 100, order = 6;
  std::uint64_t seed = kDefaultSeed;
  std::string word_text, input = "-", matrix_text, suite;
  bool shifted = false;

  auto* cmd_char = app.add_subcommand("char", "trace polynomial of a word");
  cmd_char->add_option("word", word_text, "word, e.g. \"x1^3*x2^-2\" or \"[3,-2,0]\"")
      ->required();
  cmd_char->add_option("--n", n, "ambient rank (default: inferred)");
  cmd_char->add_flag("--shifted", shifted, "emit shifted (t') coordinates");

  auto* cmd_nf = app.add_subcommand("normalform", "normal form modulo the relation ideal");
  cmd_nf->add_option("--input", input, "polynomial JSON file, '-' for stdin");

  auto* cmd_weight = app.add_subcommand("weight", "filtration weight of a polynomial");
  cmd_weight->add_option("--input", input, "polynomial JSON file, '-' for stdin");

  auto* cmd_member = app.add_subcommand("member", "membership in the relation ideal");
  cmd_member->add_option("--input", input, "polynomial JSON file, '-' for stdin");

  auto* cmd_basis = app.add_subcommand("basis", "basis monomials of gr^k(J)");
  cmd_basis->add_option("--n", n, "rank")->required();
  cmd_basis->add_option("--k", k, "degree")->required();

  auto* cmd_dim = app.add_subcommand("dim", "dimension of gr^k(J)");
  cmd_dim->add_option("--n", n, "rank")->required();
  cmd_dim->add_option("--k", k, "degree")->required();

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("--suite", suite, "vogt | f3 | ideal | oracle-agreement")
      ->required();
  cmd_verify->add_option("--seed", seed, "random seed (default published constant)");
  cmd_verify->add_option("--trials", trials, "number of random trials");
  cmd_verify->add_option("--order", order, "series truncation order");
  cmd_verify->add_option("--n", n, "max rank (ideal) / rank (oracle-agreement)");

  auto* cmd_act = app.add_subcommand("act", "apply an automorphism to a polynomial");
  cmd_act->add_option("--matrix", matrix_text, "integer matrix, e.g. \"[[1,1],[0,1]]\"")
      ->required();
  cmd_act->add_option("--input", input, "polynomial JSON file, '-' for stdin");

  auto* cmd_ek = app.add_subcommand("ek", "test membership in the filtration subgroup E(k)");
  cmd_ek->add_option("--matrix", matrix_text, "integer matrix")->required();
  cmd_ek->add_option("--k", k, "filtration level")->required();

  try {
    app.parse(argc, argv);
    g_json = format == "json";

    if (app.got_subcommand(cmd_char)) {
      AbelianWord w = parse_word(word_text, n);
      emit_poly(shifted ? char_abelian_shifted(w) : char_abelian(w));
    } else if (app.got_subcommand(cmd_nf)) {
      Poly p = shift_coordinates(read_poly(input), Coord::TPrime);
      emit_poly(normal_form(p).poly());
    } else if (app.got_subcommand(cmd_weight)) {
      auto w = weight(read_poly(input));
      ordered_json doc;
      doc["schema"] = 1;
      doc["weight"] = w ? ordered_json(*w) : ordered_json("inf");
      emit(doc, "weight: " + (w ? std::to_string(*w) : std::string("inf")));
    } else if (app.got_subcommand(cmd_member)) {
      bool in = is_in_ideal(read_poly(input));
      ordered_json doc;
      doc["schema"] = 1;
      doc["in_ideal"] = in;
      emit(doc, in ? "true" : "false");
    } else if (app.got_subcommand(cmd_basis)) {
      auto bs = basis(n, k);
      ordered_json doc;
      doc["schema"] = 1;
      doc["n"] = n;
      doc["k"] = k;
      doc["dim"] = bs.size();
      doc["basis"] = ordered_json::array();
      std::ostringstream text;
      for (size_t i = 0; i < bs.size(); ++i) {
        ordered_json mono = ordered_json::object();
        Monomial m = bs[i].monomial();
        for (const auto& [v, e] : m.exponents()) mono[var_key(v)] = e;
        doc["basis"].push_back(std::move(mono));
        text << bs[i].str() << (i + 1 < bs.size() ? "\n" : "");
      }
      emit(doc, text.str());
    } else if (app.got_subcommand(cmd_dim)) {
      Int d = dim_gr(n, k);
      ordered_json doc;
      doc["schema"] = 1;
      doc["n"] = n;
      doc["k"] = k;
      if (d <= Int(std::numeric_limits<std::int64_t>::max()))
        doc["dim"] = static_cast<std::int64_t>(d);
      else
        doc["dim"] = d.str();
      emit(doc, d.str());
    } else if (app.got_subcommand(cmd_verify)) {
      if (n == 0) n = 4;
      return run_verify(suite, seed, trials, order, n);
    } else if (app.got_subcommand(cmd_act)) {
      Automorphism sigma = parse_matrix(matrix_text);
      emit_poly(act_on_poly(sigma, read_poly(input)));
    } else if (app.got_subcommand(cmd_ek)) {
      Automorphism sigma = parse_matrix(matrix_text);
      bool in = in_E_k(sigma, k);
      ordered_json doc;
      doc["schema"] = 1;
      doc["k"] = k;
      doc["in_E_k"] = in;
      emit(doc, in ? "true" : "false");
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; usage errors exit 2
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
