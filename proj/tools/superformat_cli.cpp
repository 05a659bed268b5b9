// superformat: generate, convert and verify Lie superalgebra matrices in
// block and diagonal formats.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation error.

#include "superformat/algebras.hpp"
#include "superformat/embeddings.hpp"
#include "superformat/formats.hpp"
#include "superformat/infinite.hpp"
#include "superformat/rootspace.hpp"
#include "superformat/serialize.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

namespace sf = superformat;
using sf::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct AlgebraOptions {
  std::string family = "sl";
  int n = 0;
  int m = 0;
  std::string layout = "diagonal";

  void add_to(CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--algebra", family, "gl | sl | osp_minus | osp_plus")
                    ->check(CLI::IsMember({"gl", "sl", "osp_minus", "osp_plus"}));
    if (required) opt->required();
    cmd->add_option("--n", n, "parameter n of gl/sl(n+1|n)");
    cmd->add_option("--m", m, "parameter m of osp(2m-1|2m) / osp(2m+1|2m)");
    cmd->add_option("--format", layout, "block | diagonal")->check(CLI::IsMember({"block", "diagonal"}));
  }

  sf::AlgebraId id() const {
    sf::AlgebraId a;
    a.family = sf::parse_family(family);
    a.layout = sf::parse_layout(layout);
    a.parameter = a.is_osp() ? m : n;
    if (a.parameter < 1) {
      throw UsageError(std::string("--") + (a.is_osp() ? "m" : "n") + " >= 1 is required for " + family);
    }
    return a;
  }
};

int verification_threads() {
  if (const char* env = std::getenv("SUPERFORMAT_THREADS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw UsageError("SUPERFORMAT_THREADS must be a positive integer");
    }
  }
  return 1;
}

void print_named(std::ostream& os, const std::string& name, const sf::Matrix& m) {
  os << name << " =\n" << sf::to_aligned_text(m) << '\n';
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + text + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------- generate

struct GenerateOptions {
  AlgebraOptions alg;
  std::string what = "basis";
  std::string out = "json";
  int k = 0;
};

int run_generate(const GenerateOptions& o) {
  const sf::AlgebraId alg = o.alg.id();
  const bool text = o.out == "text";
  json doc;
  std::ostringstream os;

  if (o.what == "basis") {
    const auto b = sf::chevalley_basis(alg);
    doc = b;
    for (int i = 0; i < b.rank(); ++i) {
      const std::string idx = std::to_string(i + 1);
      print_named(os, "h_" + idx, b.h[i].mat);
      print_named(os, "e_" + idx, b.e[i].mat);
      print_named(os, "f_" + idx, b.f[i].mat);
    }
  } else if (o.what == "metric") {
    const sf::Matrix g = sf::supermetric(alg);
    doc = json{{"algebra", alg}, {"metric", g}};
    print_named(os, "G", g);
  } else if (o.what == "cartan") {
    const auto cd = sf::cartan_data(alg.family, alg.rank());
    doc = json{{"algebra", alg}, {"cartan", cd.a}, {"inverse", cd.a_inv}};
    print_named(os, "a", cd.a);
    print_named(os, "a_inv", cd.a_inv);
  } else if (o.what == "osp12") {
    if (alg.layout != sf::Layout::diagonal) throw UsageError("the principal triple is generated in diagonal format");
    const auto t = sf::principal_osp12(sf::chevalley_basis(alg), sf::inverse_cartan(alg.family, alg.rank()));
    const auto x = sf::bosonic_pair(t);
    doc = json{{"algebra", alg}, {"triple", t}, {"bosonic", x}};
    print_named(os, "J_-", t.j_minus.mat);
    print_named(os, "J_+", t.j_plus.mat);
    print_named(os, "H", t.h.mat);
    print_named(os, "X_+", x.x_plus.mat);
    print_named(os, "X_-", x.x_minus.mat);
  } else if (o.what == "highest-weights") {
    const int p = alg.matrix_size();
    json grades = json::array();
    const int lo = o.k > 0 ? o.k : 1;
    const int hi = o.k > 0 ? o.k : p - 1;
    for (int k = lo; k <= hi; ++k) {
      const auto sols = sf::highest_weights_solve(alg, k);
      grades.push_back(json{{"k", k}, {"dimension", sols.size()}, {"basis", sols}});
      os << "k = " << k << ": dimension " << sols.size() << '\n';
      for (std::size_t s = 0; s < sols.size(); ++s) print_named(os, "M_" + std::to_string(k), sols[s].mat);
    }
    doc = json{{"algebra", alg}, {"grades", grades}};
  } else {
    throw UsageError("unknown --what '" + o.what + "'");
  }

  if (text) {
    std::cout << os.str();
  } else {
    std::cout << doc.dump(2) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- cartan

int run_cartan(const AlgebraOptions& ao, const std::string& out) {
  const sf::AlgebraId alg = ao.id();
  const auto cd = sf::cartan_data(alg.family, alg.rank());
  const sf::Matrix from_basis = sf::cartan_from_basis(sf::chevalley_basis(alg));
  const bool closed_form_applies = !(alg.layout == sf::Layout::block && !alg.is_osp());
  const bool agrees = !closed_form_applies || from_basis == cd.a;
  const bool inverse_ok = cd.a * cd.a_inv == sf::Matrix::identity(alg.rank());
  if (out == "text") {
    print_named(std::cout, "a (closed form)", cd.a);
    print_named(std::cout, "a_inv (closed form)", cd.a_inv);
    print_named(std::cout, "a (from basis)", from_basis);
    std::cout << "basis matches closed form: " << (closed_form_applies ? (agrees ? "yes" : "NO") : "n/a") << '\n'
              << "a * a_inv = 1: " << (inverse_ok ? "yes" : "NO") << '\n';
  } else {
    json doc{{"algebra", alg},      {"cartan", cd.a},        {"inverse", cd.a_inv},
             {"from_basis", from_basis}, {"matches", agrees}, {"inverse_ok", inverse_ok}};
    std::cout << doc.dump(2) << '\n';
  }
  return agrees && inverse_ok ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------- convert

struct ConvertOptions {
  std::string input = "-";
  std::string from_signs;
  std::string to_signs;
  std::string perm;
  std::string via_l;
  std::string changer;
  int m = 0;
  bool reverse = false;
  std::string out = "json";
};

int run_convert(const ConvertOptions& o) {
  const json in = json::parse(read_input(o.input));
  sf::GradedMatrix source;
  if (in.contains("format")) {
    source = in.get<sf::GradedMatrix>();
  } else {
    const auto mat = in.get<sf::Matrix>();
    if (o.from_signs.empty()) throw UsageError("plain matrix input needs --from-signs");
    source = sf::GradedMatrix(mat, sf::Format(parse_int_list(o.from_signs)));
  }

  const int chosen = (o.perm.empty() ? 0 : 1) + (o.via_l.empty() ? 0 : 1) + (o.to_signs.empty() ? 0 : 1) +
                     (o.changer.empty() ? 0 : 1);
  if (chosen != 1) throw UsageError("give exactly one of --perm, --to-signs, --via-L, --changer");

  std::optional<sf::FormatChanger> f;
  if (!o.perm.empty()) {
    f = sf::perm_matrix(sf::Permutation(parse_int_list(o.perm)));
  } else if (!o.to_signs.empty()) {
    f = sf::perm_matrix(sf::stable_permutation(source.fmt, sf::Format(parse_int_list(o.to_signs))));
  } else if (!o.via_l.empty()) {
    if (o.m < 1) throw UsageError("--via-L needs --m >= 1");
    const auto variant = o.via_l == "plus" ? sf::OspVariant::plus : sf::OspVariant::minus;
    f = sf::osp_block_to_diagonal(variant, o.m);
  } else {
    f = sf::FormatChanger(json::parse(read_input(o.changer)).get<sf::Matrix>());
  }
  if (o.reverse) f = f->inverse();
  if (f->size() != source.size()) {
    throw UsageError("changer of size " + std::to_string(f->size()) + " for a size-" + std::to_string(source.size()) +
                     " matrix");
  }

  sf::GradedMatrix result;
  try {
    result = sf::change_format(source, *f);
  } catch (const sf::FormatError& e) {
    std::cerr << "superformat: " << e.what() << '\n';
    return kVerificationFailed;
  }
  const auto before = sf::supertrace(source);
  const auto after = sf::supertrace(result);
  if (o.out == "text") {
    print_named(std::cout, "M'", result.mat);
    std::cout << "format: ";
    for (int s : result.fmt.signs()) std::cout << (s > 0 ? '+' : '-');
    std::cout << "\nsupertrace before: " << before << "\nsupertrace after: " << after << '\n';
  } else {
    json doc = result;
    doc["supertrace_before"] = before;
    doc["supertrace_after"] = after;
    std::cout << doc.dump(2) << '\n';
  }
  return before == after ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string suite = "all";
  AlgebraOptions alg;
  bool alg_given = false;
  int max_n = 4;
  int max_m = 2;
  bool inject_fault = false;
  std::string out = "json";
};

struct SuiteResult {
  std::string label;
  sf::VerificationReport report;
};

sf::VerificationReport chevalley_suite(const sf::AlgebraId& alg, bool inject_fault, int threads) {
  auto b = sf::chevalley_basis(alg);
  const bool closed_form = alg.layout == sf::Layout::diagonal || alg.is_osp();
  const sf::Matrix a = closed_form ? sf::cartan_matrix(alg.family, alg.rank()) : sf::cartan_from_basis(b);
  if (inject_fault) b.e.front().mat = -b.e.front().mat;
  return sf::verify_chevalley(b, a, threads);
}

sf::VerificationReport membership_suite(const sf::AlgebraId& alg, bool inject_fault) {
  auto b = sf::chevalley_basis(alg);
  if (inject_fault) b.e.front().mat(1, 1) += sf::Rational(1);
  sf::VerificationReport r;
  const auto add = [&](const std::string& name, const sf::GradedMatrix& g) {
    bool pass = false;
    try {
      pass = sf::is_member(alg, g);
    } catch (const sf::ConsistencyError&) {
      pass = false;
    }
    r.checks.push_back({name + " in " + sf::describe(alg), pass, std::nullopt});
  };
  for (int i = 0; i < b.rank(); ++i) {
    const std::string idx = std::to_string(i + 1);
    add("h" + idx, b.h[i]);
    add("e" + idx, b.e[i]);
    add("f" + idx, b.f[i]);
  }
  return r;
}

sf::VerificationReport osp12_suite(const sf::AlgebraId& alg, bool inject_fault) {
  sf::AlgebraId diag = alg;
  diag.layout = sf::Layout::diagonal;
  auto t = sf::principal_osp12(sf::chevalley_basis(diag), sf::inverse_cartan(diag.family, diag.rank()));
  if (inject_fault) t.j_plus.mat = -t.j_plus.mat;
  auto r = sf::verify_osp12(t);
  const int n = (diag.matrix_size() - 1) / 2;
  const auto closed = sf::principal_closed(n);
  r.checks.push_back({"triple equals closed form", t.j_minus.mat == closed.j_minus.mat &&
                                                       t.j_plus.mat == closed.j_plus.mat && t.h.mat == closed.h.mat,
                      std::nullopt});
  return r;
}

sf::VerificationReport transport_suite(const sf::AlgebraId& alg, bool inject_fault) {
  sf::VerificationReport r;
  sf::AlgebraId block = alg;
  block.layout = sf::Layout::block;
  sf::AlgebraId diag = alg;
  diag.layout = sf::Layout::diagonal;
  const auto variant = alg.osp_variant();
  const auto f = sf::osp_block_to_diagonal(variant, alg.parameter);
  auto bb = sf::chevalley_basis(block);
  const auto bd = sf::chevalley_basis(diag);
  if (inject_fault) bb.f.front().mat = -bb.f.front().mat;
  const sf::Matrix l = sf::osp_L(variant, alg.parameter);
  r.checks.push_back({"L L^T = 1", l * l.transpose() == sf::Matrix::identity(l.size()), std::nullopt});
  const auto compare = [&](const std::string& name, const sf::GradedMatrix& from, const sf::GradedMatrix& to) {
    const auto moved = sf::change_format(from, f);
    sf::RelationCheck c{"L^-1 " + name + "_block L = " + name + "_diag", moved == to, std::nullopt};
    if (!c.pass) c.residual = moved.mat - to.mat;
    r.checks.push_back(std::move(c));
  };
  for (int i = 0; i < bb.rank(); ++i) {
    const std::string idx = std::to_string(i + 1);
    compare("h" + idx, bb.h[i], bd.h[i]);
    compare("e" + idx, bb.e[i], bd.e[i]);
    compare("f" + idx, bb.f[i], bd.f[i]);
  }
  return r;
}

sf::VerificationReport roots_suite(const sf::AlgebraId& alg) {
  sf::VerificationReport r;
  const sf::Format fmt = alg.format();
  const auto roots = sf::simple_root_system(fmt);
  // Evaluate every root on a supertraceless diagonal and compare with [h, E_{i,i+1}].
  const int p = fmt.size();
  std::vector<sf::Rational> diag;
  for (int i = 1; i <= p; ++i) diag.emplace_back(i * i);
  sf::Rational str;
  for (int i = 1; i <= p; ++i) str += fmt.sign(i) * diag[i - 1];
  const int last_even = [&] {
    for (int i = p; i >= 1; --i) {
      if (fmt.sign(i) == 1) return i;
    }
    return 1;
  }();
  diag[last_even - 1] -= str;
  const sf::GradedMatrix h(sf::Matrix::diag_band(0, diag, p), fmt);
  for (int i = 1; i < p; ++i) {
    const sf::GradedMatrix e(sf::Matrix::unit_entry(i, i + 1, p), fmt);
    const auto lhs = sf::graded_commutator(h, e);
    const auto value = sf::evaluate_root(roots[i - 1], fmt, diag);
    r.checks.push_back({"[h,e" + std::to_string(i) + "]=(" + roots[i - 1].to_string() + ")(h) e" + std::to_string(i),
                        lhs.mat == value * e.mat, std::nullopt});
  }
  int odd = 0;
  for (const auto& root : roots) odd += root.parity;
  r.checks.push_back({"odd roots = sign changes", odd == sf::sign_changes(fmt), std::nullopt});
  return r;
}

std::vector<sf::AlgebraId> suite_algebras(const VerifyOptions& o, bool osp_only) {
  if (o.alg_given) {
    const auto a = o.alg.id();
    if (osp_only && !a.is_osp()) throw UsageError("suite requires an osp algebra");
    return {a};
  }
  std::vector<sf::AlgebraId> out;
  for (auto layout : {sf::Layout::diagonal, sf::Layout::block}) {
    if (!osp_only) {
      for (int n = 1; n <= o.max_n; ++n) out.push_back({sf::Family::sl, n, layout});
    }
    for (int m = 1; m <= o.max_m; ++m) {
      out.push_back({sf::Family::osp_minus, m, layout});
      out.push_back({sf::Family::osp_plus, m, layout});
    }
  }
  return out;
}

int run_verify(const VerifyOptions& o) {
  static const std::vector<std::string> kSuites = {"chevalley", "membership", "osp12", "format-transport", "roots"};
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = kSuites;
  } else {
    suites = {o.suite};
  }
  const int threads = verification_threads();

  std::vector<SuiteResult> results;
  for (const auto& suite : suites) {
    if (suite == "chevalley") {
      for (const auto& a : suite_algebras(o, false)) {
        results.push_back({"chevalley " + sf::describe(a), chevalley_suite(a, o.inject_fault, threads)});
      }
    } else if (suite == "membership") {
      for (const auto& a : suite_algebras(o, false)) {
        results.push_back({"membership " + sf::describe(a), membership_suite(a, o.inject_fault)});
      }
    } else if (suite == "osp12") {
      for (const auto& a : suite_algebras(o, false)) {
        if (a.layout != sf::Layout::diagonal) continue;
        results.push_back({"osp12 " + sf::describe(a), osp12_suite(a, o.inject_fault)});
      }
    } else if (suite == "format-transport") {
      for (const auto& a : suite_algebras(o, true)) {
        if (a.layout != sf::Layout::block) continue;
        results.push_back({"format-transport " + sf::describe(a), transport_suite(a, o.inject_fault)});
      }
    } else if (suite == "roots") {
      for (const auto& a : suite_algebras(o, false)) {
        results.push_back({"roots " + sf::describe(a), roots_suite(a)});
      }
    } else {
      throw UsageError("unknown suite '" + suite + "'");
    }
  }

  bool ok = true;
  std::size_t total = 0;
  std::size_t failed = 0;
  json doc = json::array();
  for (const auto& res : results) {
    ok = ok && res.report.all_pass();
    total += res.report.checks.size();
    failed += res.report.failures();
    json entry = res.report;
    entry["suite"] = res.label;
    doc.push_back(std::move(entry));
  }
  if (o.out == "text") {
    for (const auto& res : results) {
      for (const auto& c : res.report.checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << res.label << ": " << c.name << '\n';
        if (!c.pass && c.residual) std::cout << "residual =\n" << sf::to_aligned_text(*c.residual);
      }
    }
    std::cout << total - failed << "/" << total << " checks passed\n";
  } else {
    std::cout << json{{"ok", ok}, {"total", total}, {"failed", failed}, {"suites", doc}}.dump(2) << '\n';
  }
  if (!ok) {
    for (const auto& res : results) {
      for (const auto& c : res.report.checks) {
        if (!c.pass) std::cerr << "superformat: failed " << res.label << ": " << c.name << '\n';
      }
    }
  }
  return ok ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------- roots

int run_roots(const AlgebraOptions& ao, bool alg_given, const std::string& signs, const std::string& out) {
  sf::Format fmt;
  if (!signs.empty()) {
    fmt = sf::Format(parse_int_list(signs));
  } else if (alg_given) {
    fmt = ao.id().format();
  } else {
    throw UsageError("roots needs --signs or --algebra");
  }
  const auto roots = sf::simple_root_system(fmt);
  const int odd = sf::odd_simple_root_count(fmt);
  if (out == "text") {
    for (std::size_t i = 0; i < roots.size(); ++i) {
      std::cout << "alpha_" << i + 1 << " = " << roots[i].to_string() << (roots[i].parity ? "  (odd)" : "  (even)")
                << '\n';
    }
    std::cout << "odd simple roots: " << odd << "\nfermionic: " << (sf::admits_fermionic_srs(fmt) ? "yes" : "no")
              << '\n';
  } else {
    std::cout << json{{"format", fmt}, {"roots", roots}, {"odd_count", odd},
                      {"fermionic", sf::admits_fermionic_srs(fmt)}}
                     .dump(2)
              << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- embed

int run_embed(const AlgebraOptions& ao, bool closed, int n_closed, const std::string& out) {
  sf::PrincipalTriple t;
  json alg_doc;
  if (closed) {
    if (n_closed < 1) throw UsageError("--closed needs --n >= 1");
    t = sf::principal_closed(n_closed);
    alg_doc = json{{"closed_form_n", n_closed}};
  } else {
    auto alg = ao.id();
    alg.layout = sf::Layout::diagonal;
    t = sf::principal_osp12(sf::chevalley_basis(alg), sf::inverse_cartan(alg.family, alg.rank()));
    alg_doc = alg;
  }
  const auto x = sf::bosonic_pair(t);
  const auto report = sf::verify_osp12(t, x);
  if (out == "text") {
    print_named(std::cout, "J_-", t.j_minus.mat);
    print_named(std::cout, "J_+", t.j_plus.mat);
    print_named(std::cout, "H", t.h.mat);
    print_named(std::cout, "X_+", x.x_plus.mat);
    print_named(std::cout, "X_-", x.x_minus.mat);
    for (const auto& c : report.checks) std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << '\n';
  } else {
    std::cout << json{{"algebra", alg_doc}, {"triple", t}, {"bosonic", x}, {"relations", report}}.dump(2) << '\n';
  }
  return report.all_pass() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact matrix formats of Lie superalgebras"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Emit Chevalley bases, metrics, Cartan data, osp(1|2) triples");
  gen.alg.add_to(generate, true);
  generate->add_option("--what", gen.what, "basis | metric | cartan | osp12 | highest-weights")
      ->check(CLI::IsMember({"basis", "metric", "cartan", "osp12", "highest-weights"}));
  generate->add_option("--k", gen.k, "single highest-weight grade (default: all)");
  generate->add_option("--out", gen.out, "json | text")->check(CLI::IsMember({"json", "text"}));

  AlgebraOptions cartan_alg;
  std::string cartan_out = "json";
  auto* cartan = app.add_subcommand("cartan", "Cartan matrix, inverse, and comparison with the basis");
  cartan_alg.add_to(cartan, true);
  cartan->add_option("--out", cartan_out)->check(CLI::IsMember({"json", "text"}));

  ConvertOptions conv;
  auto* convert = app.add_subcommand("convert", "Move a matrix to another format by a similarity transformation");
  convert->add_option("--input", conv.input, "matrix or graded-matrix JSON file ('-' for stdin)");
  convert->add_option("--from-signs", conv.from_signs, "source format signs, e.g. 1,1,1,-1,-1");
  convert->add_option("--to-signs", conv.to_signs, "target format signs (order-preserving permutation)");
  convert->add_option("--perm", conv.perm, "1-based permutation images, e.g. 1,4,2,5,3");
  convert->add_option("--via-L", conv.via_l, "osp block->diagonal changer: plus | minus")
      ->check(CLI::IsMember({"plus", "minus"}));
  convert->add_option("--changer", conv.changer, "general changer matrix JSON file");
  convert->add_option("--m", conv.m, "osp parameter for --via-L");
  convert->add_flag("--reverse", conv.reverse, "apply the inverse transformation");
  convert->add_option("--out", conv.out)->check(CLI::IsMember({"json", "text"}));

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Run exact verification suites");
  verify->add_option("--suite", ver.suite, "chevalley | membership | osp12 | format-transport | roots | all")
      ->check(CLI::IsMember({"chevalley", "membership", "osp12", "format-transport", "roots", "all"}));
  ver.alg.add_to(verify, false);
  verify->add_option("--max-n", ver.max_n, "largest sl parameter when no algebra is given");
  verify->add_option("--max-m", ver.max_m, "largest osp parameter when no algebra is given");
  verify->add_flag("--inject-fault", ver.inject_fault, "corrupt one generator (self-test of the report)");
  verify->add_option("--out", ver.out)->check(CLI::IsMember({"json", "text"}));

  AlgebraOptions roots_alg;
  std::string roots_signs;
  std::string roots_out = "json";
  auto* roots = app.add_subcommand("roots", "Simple root system of a format");
  roots_alg.add_to(roots, false);
  roots->add_option("--signs", roots_signs, "format signs, e.g. 1,-1,1,-1,1");
  roots->add_option("--out", roots_out)->check(CLI::IsMember({"json", "text"}));

  AlgebraOptions embed_alg;
  bool embed_closed = false;
  std::string embed_out = "json";
  auto* embed = app.add_subcommand("embed", "Principal osp(1|2) embedding and its relations");
  embed_alg.add_to(embed, false);
  embed->add_flag("--closed", embed_closed, "use the closed form for size 2n+1");
  embed->add_option("--out", embed_out)->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*cartan) return run_cartan(cartan_alg, cartan_out);
    if (*convert) return run_convert(conv);
    if (*verify) {
      ver.alg_given = verify->count("--algebra") > 0;
      return run_verify(ver);
    }
    if (*roots) return run_roots(roots_alg, roots->count("--algebra") > 0, roots_signs, roots_out);
    if (*embed) {
      if (!embed_closed && embed->count("--algebra") == 0) throw UsageError("embed needs --algebra or --closed");
      return run_embed(embed_alg, embed_closed, embed_alg.n, embed_out);
    }
  } catch (const UsageError& e) {
    std::cerr << "superformat: " << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "superformat: bad JSON input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "superformat: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "superformat: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}
