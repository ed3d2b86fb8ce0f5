#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fqc/cent.hpp"
#include "fqc/nilcommute.hpp"
#include "fqc/typealg.hpp"

using namespace fqc;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitError = 3;

struct DecisionFlags {
  std::uint64_t budget = nil::kDefaultBudget;
  std::uint64_t seed = nil::kDefaultSeed;
  std::string witness_out;
  bool porcelain = false;
};

void add_decision_flags(CLI::App* cmd, DecisionFlags& f) {
  cmd->add_option("--budget", f.budget, "Enumeration budget")->capture_default_str();
  cmd->add_option("--seed", f.seed, "Seed of the randomized phase")->capture_default_str();
  cmd->add_option("--witness-out", f.witness_out, "Write a Yes witness pair to FILE");
  cmd->add_flag("--porcelain", f.porcelain, "Print verdict<TAB>method<TAB>witness-file");
}

nil::DecideOptions options_of(const DecisionFlags& f) {
  nil::DecideOptions o;
  o.budget = f.budget;
  o.seed = f.seed;
  return o;
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream s;
  for (size_t i = 0; i < v.size(); ++i) s << (i ? sep : "") << v[i];
  return s.str();
}

int report(const Verdict& v, const DecisionFlags& f) {
  std::string file = "-";
  if (v.status == Status::Yes && !f.witness_out.empty()) {
    std::ofstream out(f.witness_out);
    if (!out) throw std::runtime_error("cannot write " + f.witness_out);
    typealg::write_witness(out, v.witness->first, v.witness->second);
    file = f.witness_out;
  }
  if (f.porcelain)
    std::cout << to_string(v.status) << '\t' << v.method << '\t' << file << '\n';
  else
    std::cout << to_string(v.status) << " (" << v.method << ")\n";
  switch (v.status) {
    case Status::Yes:
      return kExitYes;
    case Status::No:
      return kExitNo;
    default:
      return kExitUnknown;
  }
}

Matrix load(const std::string& path, const std::string& field) {
  Matrix M = mat::read_file(path);
  if (!field.empty() && Field::parse(field) != M.field())
    throw ParseError("matrix is over " + M.field().name() + ", not " + field);
  return M;
}

std::string set_str(const std::vector<Elem>& s) { return "{" + join(s) + "}"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commuting similarity classes of matrices over finite fields"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 Yes/success, 1 No/negative, 2 Unknown, 3 error.");

  std::string field, matrix_path;
  int code = kExitYes;

  auto* classtype = app.add_subcommand("classtype", "Class type of a matrix file");
  classtype->add_option("--field", field, "Field p^a (checked against the file)");
  classtype->add_option("--matrix", matrix_path, "Matrix file")->required();
  classtype->callback([&] { std::cout << mat::class_type(load(matrix_path, field)).str() << '\n'; });

  auto* cycletype = app.add_subcommand("cycletype", "Cycle type of a matrix file");
  cycletype->add_option("--field", field, "Field p^a (checked against the file)");
  cycletype->add_option("--matrix", matrix_path, "Matrix file")->required();
  cycletype->callback([&] { std::cout << mat::cycle_type(load(matrix_path, field)).str() << '\n'; });

  DecisionFlags df;
  std::string s_text, t_text;
  auto* commute = app.add_subcommand("commute", "Do two class types commute");
  commute->add_option("--field", field, "Field p^a")->required();
  commute->add_option("--S", s_text, "Class type, e.g. \"1^(12,12) 2^(3)\"")->required();
  commute->add_option("--T", t_text, "Class type")->required();
  add_decision_flags(commute, df);
  commute->callback([&] {
    const Field F = Field::parse(field);
    code = report(typealg::types_commute(ClassType::parse(s_text), ClassType::parse(t_text), F,
                                         options_of(df)),
                  df);
  });

  auto* commute_classes = app.add_subcommand("commute-classes", "Do two similarity classes commute");
  commute_classes->add_option("--field", field, "Field p^a")->required();
  commute_classes->add_option("--C", s_text, "Cycle type, e.g. \"x^(2,1) x^2+x+1^(1)\"")->required();
  commute_classes->add_option("--D", t_text, "Cycle type")->required();
  add_decision_flags(commute_classes, df);
  commute_classes->callback([&] {
    const Field F = Field::parse(field);
    code = report(typealg::classes_commute(CycleType::parse(F, s_text), CycleType::parse(F, t_text),
                                           options_of(df)),
                  df);
  });

  std::string lam_text, mu_text, fix = "auto";
  bool no_theorems = false, no_random = false;
  auto* commute_nil = app.add_subcommand("commute-nilpotent", "Do N(lambda) and N(mu) commute");
  commute_nil->add_option("--field", field, "Field p^a")->required();
  commute_nil->add_option("--lambda", lam_text, "Partition, e.g. (6,6)")->required();
  commute_nil->add_option("--mu", mu_text, "Partition")->required();
  commute_nil->add_option("--fix", fix, "Side whose Jordan matrix the search fixes")
      ->check(CLI::IsMember({"auto", "lambda", "mu"}))
      ->capture_default_str();
  commute_nil->add_flag("--no-theorems", no_theorems, "Skip the classification results");
  commute_nil->add_flag("--no-random", no_random, "Skip the randomized phase");
  add_decision_flags(commute_nil, df);
  commute_nil->callback([&] {
    nil::DecideOptions o = options_of(df);
    o.use_theorems = !no_theorems;
    o.randomized = !no_random;
    o.fix = fix == "lambda" ? 1 : fix == "mu" ? 2 : 0;
    code = report(nil::decide(Partition::parse(lam_text), Partition::parse(mu_text), Field::parse(field), o),
                  df);
  });

  bool brute = false;
  std::uint64_t det_budget = cent::kDefaultDetBudget;
  bool porcelain = false;
  auto* detset = app.add_subcommand("detset", "Determinants occurring in the centralizer of a matrix");
  detset->add_option("--field", field, "Field p^a (checked against the file)");
  detset->add_option("--matrix", matrix_path, "Matrix file")->required();
  detset->add_flag("--brute", brute, "Enumerate the centralizer");
  detset->add_option("--budget", det_budget, "Brute-force budget")->capture_default_str();
  detset->add_flag("--porcelain", porcelain, "Print k<TAB>comma-separated set");
  detset->callback([&] {
    const Matrix M = load(matrix_path, field);
    const auto s = cent::det_set(M, brute ? cent::DetMode::Bruteforce : cent::DetMode::Theorem, det_budget);
    const int k = cent::part_size_invariant_of(M);
    if (porcelain)
      std::cout << k << '\t' << join(s) << '\n';
    else
      std::cout << set_str(s) << '\n';
  });

  std::string type_text;
  bool exhaustive = false;
  auto* coverage = app.add_subcommand("det-coverage", "Determinants of the matrices of a class type");
  coverage->add_option("--field", field, "Field p^a")->required();
  coverage->add_option("--type", type_text, "Class type")->required();
  coverage->add_flag("--exhaustive", exhaustive, "Enumerate polynomial assignments");
  coverage->add_flag("--porcelain", porcelain, "Print the comma-separated set");
  coverage->callback([&] {
    const auto s = cent::type_det_coverage(ClassType::parse(type_text), Field::parse(field),
                                           exhaustive ? cent::CoverageMode::Exhaustive : cent::CoverageMode::Fast);
    std::cout << (porcelain ? join(s) : set_str(s)) << '\n';
  });

  int degree = 1;
  long long theta = -1;
  auto* irr_count = app.add_subcommand("irr-count", "Number of monic irreducibles of a degree");
  irr_count->add_option("--field", field, "Field p^a")->required();
  irr_count->add_option("--degree", degree, "Degree")->required();
  irr_count->add_option("--theta", theta, "Required constant term (encoding)");
  irr_count->callback([&] {
    const Field F = Field::parse(field);
    if (theta < 0)
      std::cout << poly::count_irreducibles(F.q(), degree) << '\n';
    else
      std::cout << poly::count_irreducibles_with_constant(F, degree, static_cast<Elem>(theta)) << '\n';
  });

  std::size_t limit = 0;
  auto* irr_list = app.add_subcommand("irr-list", "Monic irreducibles of a degree in encoding order");
  irr_list->add_option("--field", field, "Field p^a")->required();
  irr_list->add_option("--degree", degree, "Degree")->required();
  irr_list->add_option("--limit", limit, "Stop after this many (0 = all)");
  irr_list->callback([&] {
    for (const auto& f : poly::enumerate_irreducibles(Field::parse(field), degree, limit))
      std::cout << poly::format(f) << '\n';
  });

  int m = 1;
  std::vector<long long> pi;
  auto* pi_set = app.add_subcommand("pi-set", "pi-expressible elements of Z_m");
  pi_set->add_option("--m", m, "Group order")->required();
  pi_set->add_option("--pi", pi, "Exponents, e.g. 3,2,1")->delimiter(',')->required();
  pi_set->add_flag("--porcelain", porcelain, "Print the comma-separated set");
  pi_set->callback([&] {
    const auto s = cent::pi_expressible_set(m, cent::canonical_pi(m, pi));
    std::cout << (porcelain ? join(s) : "{" + join(s) + "}") << '\n';
    code = static_cast<int>(s.size()) == m ? kExitYes : kExitNo;
  });

  int max_m = 1;
  auto* pi_conj = app.add_subcommand("pi-conjecture", "Check the pi-expressibility conjecture for m <= M");
  pi_conj->add_option("--max-m", max_m, "Largest group order")->required();
  pi_conj->add_flag("--porcelain", porcelain, "Print m<TAB>disagreements per line");
  pi_conj->callback([&] {
    std::size_t total = 0;
    for (int k = 1; k <= max_m; ++k) {
      const auto d = cent::pi_conjecture_check(k);
      total += d.size();
      if (porcelain) {
        std::cout << k << '\t' << d.size() << '\n';
        continue;
      }
      std::cout << "m=" << k << ": " << d.size() << " disagreements\n";
      for (const auto& x : d)
        std::cout << "  pi=(" << join(x.pi) << ") set={" << join(x.expressible)
                  << "} predicted=" << (x.predicted_full ? "full" : "proper") << '\n';
    }
    code = total == 0 ? kExitYes : kExitNo;
  });

  int n = 1;
  auto* universal = app.add_subcommand("universal", "Partitions of n commuting with every partition of n");
  universal->add_option("--field", field, "Field p^a")->required();
  universal->add_option("--n", n, "Size")->required();
  add_decision_flags(universal, df);
  universal->callback([&] {
    const auto r = nil::universal_check(n, Field::parse(field), options_of(df));
    std::vector<std::string> u;
    for (const auto& l : r.universal) u.push_back(l.str());
    if (df.porcelain) {
      std::cout << join(u, " ") << '\t' << r.unknown_cells.size() << '\n';
    } else {
      std::cout << join(u, " ") << '\n';
      for (const auto& [a, b] : r.unknown_cells) std::cout << "unknown " << a.str() << ' ' << b.str() << '\n';
    }
    code = r.unknown_cells.empty() ? kExitYes : kExitUnknown;
  });

  auto* nn = app.add_subcommand("nn-witness", "Commuting pair in N(n+1,n-1) x N(n,n)");
  nn->add_option("--field", field, "Field p^a")->required();
  nn->add_option("--n", n, "n")->required();
  nn->add_option("--witness-out", df.witness_out, "Write the pair to FILE");
  nn->callback([&] {
    const Field F = Field::parse(field);
    try {
      auto [M, Y] = nil::nn_witness(n, F);
      if (!df.witness_out.empty()) {
        std::ofstream out(df.witness_out);
        typealg::write_witness(out, M, Y);
      } else {
        mat::write(std::cout, M);
        mat::write(std::cout, Y);
      }
    } catch (const NoWitnessExists& e) {
      std::cout << "No (" << e.what() << ")\n";
      code = kExitNo;
    }
  });

  int p = 2, r = 1;
  auto* fd = app.add_subcommand("field-dependence", "Pair commuting over F_{p^a} exactly when a > r");
  fd->add_option("--p", p, "Characteristic")->required();
  fd->add_option("--r", r, "Degree")->required();
  fd->add_flag("--porcelain", porcelain, "Print lambda<TAB>mu<TAB>n<TAB>verified");
  fd->callback([&] {
    const auto x = nil::field_dependence_pair(p, r);
    if (porcelain)
      std::cout << x.lambda.str() << '\t' << x.mu.str() << '\t' << x.n << '\t' << (x.verified ? "yes" : "no") << '\n';
    else
      std::cout << x.lambda.str() << ' ' << x.mu.str() << " n=" << x.n << " verified=" << (x.verified ? "yes" : "no")
                << '\n';
    code = x.verified ? kExitYes : kExitNo;
  });

  auto* table = app.add_subcommand("two-part-table", "Verdicts for all pairs of partitions of n with at most two parts");
  table->add_option("--field", field, "Field p^a")->required();
  table->add_option("--n", n, "Size")->required();
  add_decision_flags(table, df);
  table->callback([&] {
    const Field F = Field::parse(field);
    std::vector<Partition> ps;
    for (const auto& l : partitions_of(n))
      if (l.length() <= 2) ps.push_back(l);
    for (size_t i = 0; i < ps.size(); ++i)
      for (size_t j = i; j < ps.size(); ++j) {
        const Verdict v = nil::decide(ps[i], ps[j], F, options_of(df));
        std::cout << ps[i].str() << (df.porcelain ? "\t" : " ") << ps[j].str() << (df.porcelain ? "\t" : " ")
                  << to_string(v.status) << (df.porcelain ? "\t" : " (") << v.method << (df.porcelain ? "" : ")")
                  << '\n';
      }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return code;
}
