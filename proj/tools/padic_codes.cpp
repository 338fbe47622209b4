// padic-codes: validate, search and bound p-adic spherical codes.
//
// Exit codes: 0 success, 1 usage/format/I-O error, 2 invalid code or failed hypotheses,
// 3 enumeration budget exceeded.

#include "padic_codes/padic_codes.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace padic_codes;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_invalid = 2;
constexpr int exit_budget = 3;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

Rational rational_flag(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(flag) + ": " + e.what());
  }
}

std::string header(int argc, char** argv) {
  std::string h = "# padic-codes";
  for (int i = 1; i < argc; ++i) h += std::string(" ") + argv[i];
  return h + '\n';
}

struct SearchArgs {
  std::uint64_t prime = 0;
  std::size_t dim = 0;
  bool kissing = false;
  std::string cos_theta;
  std::int64_t level = -1;
  std::uint64_t budget = EnumerationBudget{}.max_enumeration;
  std::uint64_t max_vertices = EnumerationBudget{}.max_vertices;
  unsigned threads = 1;
  std::int64_t precision = 6;
  std::string witness = "exact";
  std::int64_t two_adic_depth = 3;
  std::string output;
  std::string stats;
};

// --level m picks b at the top of that level: p^-m for odd p, 2^(-m-1) for p = 2.
SeparationSpec separation_for(const SearchArgs& a, const Prime& p) {
  if (a.kissing) return SeparationSpec::kissing();
  if (!a.cos_theta.empty()) return SeparationSpec::from_cos_theta(rational_flag(a.cos_theta, "--cos-theta"));
  const std::int64_t e = a.level + (p.is_odd() ? 0 : 1);
  Rational b(BigInt(1), detail::ipow(p.value(), static_cast<std::uint64_t>(e)));
  return SeparationSpec::from_cos_theta(1 - b / 2);
}

int run_validate(const std::string& path) {
  const std::string text = slurp(path);
  if (is_real_code_text(text)) {
    auto r = validate_real_code(read_real_code(text));
    std::cout << format_real_validation(r);
    return r.valid ? exit_ok : exit_invalid;
  }
  auto r = validate_code(read_code(text));
  std::cout << format_validation(r);
  return r.valid ? exit_ok : exit_invalid;
}

int run_search(const SearchArgs& a) {
  const Prime p(a.prime);
  const SeparationSpec spec = separation_for(a, p);
  SearchOptions options;
  options.budget = {a.budget, a.max_vertices};
  options.threads = a.threads;
  if (const char* env = std::getenv("PADIC_THREADS")) {
    try {
      options.threads = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw InputError("PADIC_THREADS must be a non-negative integer");
    }
  }
  options.witness_mode = a.witness == "hensel" ? LiftMode::hensel : LiftMode::exact_rational;
  options.precision = a.precision;
  options.two_adic_depth = a.two_adic_depth;

  SearchResult r = search_max_code(p, a.dim, spec, options);
  std::cout << format_search(r, spec);
  if (!a.output.empty()) spill(a.output, write_code(r.witness));
  if (!a.stats.empty()) spill(a.stats, stats_tsv_header() + '\n' + stats_tsv_row(r) + '\n');
  return exit_ok;
}

int run_certify(const std::string& code_path, const std::string& cert_path, bool synthesize,
                const std::string& output) {
  const PAdicCode code = read_code(slurp(code_path));
  if (!validate_code(code).valid) {
    std::cout << format_validation(validate_code(code));
    return exit_invalid;
  }
  PfenderCertificate cert = synthesize ? synthesize_certificate_lp(code)
                                       : read_certificate(slurp(cert_path), code.prime());
  if (!output.empty()) spill(output, write_certificate(cert));
  BoundResult r = verify_certificate(code, cert);
  std::cout << format_bound(r, cert);
  if (synthesize) {
    for (const auto& [v, q] : cert.phi()) std::cout << "phi\t" << v.str() << '\t' << to_string(q) << '\n';
  }
  return r.hypotheses_ok ? exit_ok : exit_invalid;
}

int run_gegenbauer(unsigned k, unsigned n, const std::string& r_text, bool table) {
  const Rational r = rational_flag(r_text, "-r");
  if (r < -1 || r > 1) throw InputError("-r must lie in [-1, 1]");
  for (unsigned i = table ? 0 : k; i <= k; ++i) {
    std::cout << "G\t" << i << '\t' << n << '\t' << to_string(r) << '\t' << to_string(gegenbauer_eval(i, n, r)) << '\n';
  }
  return exit_ok;
}

int run_delsarte(const std::vector<std::string>& poly, const std::string& cos_theta, unsigned dim_param) {
  std::vector<Rational> c;
  for (const auto& t : poly) c.push_back(rational_flag(t, "--poly"));
  const Rational ct = rational_flag(cos_theta, "--cos-theta");
  if (ct < -1 || ct > 1) throw InputError("--cos-theta must lie in [-1, 1]");
  const Polynomial p(std::move(c));
  if (p.is_zero()) throw InputError("--poly must not be the zero polynomial");
  DelsarteReport r = delsarte_bound(p, ct, dim_param);
  std::cout << format_delsarte(r);
  return r.bound ? exit_ok : exit_invalid;
}

int run_real_pfender(const std::string& code_path, const std::string& cert_path) {
  const std::string text = slurp(code_path);
  if (!is_real_code_text(text)) throw InputError(code_path + " is not a 'prime real' code file");
  const RealCode code = read_real_code(text);
  const auto v = validate_real_code(code);
  if (!v.valid) {
    std::cout << format_real_validation(v);
    return exit_invalid;
  }
  RealBoundResult r = real_pfender_check(code, read_real_certificate(slurp(cert_path), code.radicand()));
  std::cout << format_real_bound(r);
  return r.hypotheses_ok ? exit_ok : exit_invalid;
}

int run_orthogonality(unsigned j, unsigned k, unsigned n) {
  const double value = orthogonality_defect(j, k, n);
  std::cout << "integral\t" << j << '\t' << k << '\t' << n << '\t' << std::setprecision(17) << value
            << "\terror_target\t1e-12\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact p-adic spherical codes: validation, maximum code search and LP bounds"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a code file against the code definition");
  validate->add_option("file", validate_path, "Code file")->required();

  SearchArgs s;
  auto* search = app.add_subcommand("search", "Exact maximum code size by clique search");
  search->add_option("-p,--prime", s.prime, "Prime")->required();
  search->add_option("-d,--dim", s.dim, "Dimension")->required()->check(CLI::PositiveNumber);
  auto* sep = search->add_option_group("separation");
  sep->add_flag("--kissing", s.kissing, "theta = pi/3 (b = 1)");
  sep->add_option("--cos-theta", s.cos_theta, "cos(theta) as a/b");
  sep->add_option("--level", s.level, "Effective level m directly")->check(CLI::NonNegativeNumber);
  sep->require_option(1);
  search->add_option("--budget", s.budget, "Residue enumeration budget");
  search->add_option("--max-vertices", s.max_vertices, "Vertex budget");
  search->add_option("--threads", s.threads, "Worker threads (PADIC_THREADS overrides)");
  search->add_option("--precision", s.precision, "Hensel precision K'")->check(CLI::PositiveNumber);
  search->add_option("--witness", s.witness, "Witness lifting")->check(CLI::IsMember({"exact", "hensel"}));
  search->add_option("--two-adic-depth", s.two_adic_depth, "p = 2 enumeration depth")->check(CLI::NonNegativeNumber);
  search->add_option("-o,--output", s.output, "Write the witness code here");
  search->add_option("--stats", s.stats, "Write search statistics (TSV) here");

  std::string code_path, cert_path, cert_output;
  bool synthesize = false;
  auto* certify = app.add_subcommand("certify", "Verify or synthesize an LP bound certificate");
  certify->add_option("code", code_path, "Code file")->required();
  auto* source = certify->add_option_group("certificate");
  source->add_option("--cert", cert_path, "Certificate file");
  source->add_flag("--synthesize", synthesize, "Solve the certificate LP");
  source->require_option(1);
  certify->add_option("-o,--output", cert_output, "Write the certificate here");

  auto* classical = app.add_subcommand("classical", "Real (Euclidean) bounds for comparison");
  classical->require_subcommand(1);
  unsigned gk = 0, gn = 3;
  std::string gr;
  bool gtable = false;
  auto* gegenbauer = classical->add_subcommand("gegenbauer", "Evaluate G_k^(n)(r) exactly");
  gegenbauer->add_option("-k", gk, "Degree")->required();
  gegenbauer->add_option("-n", gn, "Dimension parameter")->required()->check(CLI::Range(3u, 1000u));
  gegenbauer->add_option("-r", gr, "Point in [-1, 1]")->required();
  gegenbauer->add_flag("--table", gtable, "Print G_0 .. G_k");

  std::vector<std::string> poly;
  std::string dcos;
  unsigned dparam = 3;
  auto* delsarte = classical->add_subcommand("delsarte", "Delsarte LP bound for a polynomial");
  delsarte->add_option("--poly", poly, "Coefficients c_0 .. c_m")->required()->expected(1, -1);
  delsarte->add_option("--cos-theta", dcos, "cos(theta)")->required();
  delsarte->add_option("--dim-param", dparam, "Gegenbauer parameter n")->required()->check(CLI::Range(3u, 1000u));

  std::string rcode, rcert;
  auto* pfender = classical->add_subcommand("pfender", "LP bound certificate for a real code");
  pfender->add_option("--code", rcode, "Real code file")->required();
  pfender->add_option("--cert", rcert, "Certificate file")->required();

  unsigned oj = 0, ok = 0, on = 3;
  auto* orth = classical->add_subcommand("orthogonality", "Weighted integral of G_j G_k by quadrature");
  orth->add_option("-j", oj, "Degree j")->required()->check(CLI::Range(0u, 10u));
  orth->add_option("-k", ok, "Degree k")->required()->check(CLI::Range(0u, 10u));
  orth->add_option("-n", on, "Dimension parameter")->required()->check(CLI::Range(3u, 8u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    std::ostringstream body;
    std::streambuf* saved = std::cout.rdbuf(body.rdbuf());
    int code = exit_ok;
    try {
      if (*validate) {
        code = run_validate(validate_path);
      } else if (*search) {
        code = run_search(s);
      } else if (*certify) {
        code = run_certify(code_path, cert_path, synthesize, cert_output);
      } else if (*gegenbauer) {
        code = run_gegenbauer(gk, gn, gr, gtable);
      } else if (*delsarte) {
        code = run_delsarte(poly, dcos, dparam);
      } else if (*pfender) {
        code = run_real_pfender(rcode, rcert);
      } else if (*orth) {
        code = run_orthogonality(oj, ok, on);
      }
    } catch (...) {
      std::cout.rdbuf(saved);
      throw;
    }
    std::cout.rdbuf(saved);
    std::cout << header(argc, argv) << body.str();
    return code;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return exit_input;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return exit_budget;
  } catch (const InvalidCode& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
}
