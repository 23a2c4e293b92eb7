#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "starq/parse.hpp"
#include "starq/quantize.hpp"
#include "starq/star.hpp"
#include "starq/verify.hpp"

namespace {

using namespace starq;

constexpr int kExitVerify = 1;
constexpr int kExitParse = 2;
constexpr int kExitConfig = 3;
constexpr int kExitIo = 4;

struct CliOptions {
  int n = 1;
  std::string lambda = "1/2";
  std::string geometry = "projective";
  std::string route = "explicit";
  int max_deg = 3;
  int r_max = 3;
  std::string out;
  std::string format = "text";
  std::uint64_t seed = 1;
};

Rational parse_lambda(const std::string& s) {
  try {
    return Rational::from_string(s);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--lambda", "expected a rational like 1/2");
  }
}

// Fills geometry fields of the config; "projective" or "conformal:p,q".
void apply_geometry(RunConfig& cfg, const std::string& s) {
  if (s == "projective") {
    cfg.geometry = GeometryKind::Projective;
    return;
  }
  if (s.rfind("conformal:", 0) == 0) {
    std::string rest = s.substr(10);
    auto comma = rest.find(',');
    if (comma != std::string::npos) {
      try {
        cfg.p = std::stoi(rest.substr(0, comma));
        cfg.q = std::stoi(rest.substr(comma + 1));
      } catch (const std::exception&) {
        throw CLI::ValidationError("--geometry", "bad signature");
      }
      if (cfg.p < 0 || cfg.q < 0 || cfg.p + cfg.q != cfg.n)
        throw CLI::ValidationError("--geometry", "signature must satisfy p+q=n");
      cfg.geometry = GeometryKind::Conformal;
      return;
    }
  }
  throw CLI::ValidationError("--geometry",
                             "expected 'projective' or 'conformal:p,q'");
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::ios_base::failure("cannot open output file " + path);
  return file;
}

// Normal-ordered operator form: each term f(x) h^p xi^b prints as
// h^(p+|b|) f(x) d1^b1 ... dn^bn.
std::string format_operator(const Symbol& total) {
  Symbol shifted(total.dim());
  for (const auto& [e, c] : total.terms()) {
    Exponents d = e;
    d.nu += d.xi_degree();
    shifted.add_term(d, c);
  }
  std::string s = format_symbol(shifted);
  // Render fiber factors as derivatives.
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'x' && i + 1 < s.size() && s[i + 1] == 'i') {
      out += 'd';
      ++i;
    } else {
      out += s[i];
    }
  }
  return out;
}

int cmd_quantize(const CliOptions& opt, const std::string& expr) {
  Symbol F = parse_symbol(expr, opt.n);
  DiffOpSymbol Q = quantize(F, parse_lambda(opt.lambda));
  std::ofstream file;
  std::ostream& os = open_out(opt.out, file);
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["n"] = opt.n;
    j["lambda"] = parse_lambda(opt.lambda).str();
    j["symbol"] = format_symbol(Q.total);
    j["operator"] = format_operator(Q.total);
    os << j.dump(2) << "\n";
  } else {
    os << "symbol: " << format_symbol(Q.total) << "\n";
    os << "operator: " << format_operator(Q.total) << "\n";
  }
  return 0;
}

int cmd_star(const CliOptions& opt, const std::string& exprF,
             const std::string& exprG) {
  Symbol F = parse_symbol(exprF, opt.n);
  Symbol G = parse_symbol(exprG, opt.n);
  Rational lambda = parse_lambda(opt.lambda);

  std::optional<Symbol> via_explicit, via_quant;
  if (opt.route == "explicit" || opt.route == "both")
    via_explicit = star_explicit(F, G);
  if (opt.route == "quant" || opt.route == "both")
    via_quant = star_quant(F, G, lambda);
  if (!via_explicit && !via_quant)
    throw CLI::ValidationError("--route", "expected explicit, quant or both");

  bool equal = true;
  if (via_explicit && via_quant) equal = (*via_explicit == *via_quant);

  std::ofstream file;
  std::ostream& os = open_out(opt.out, file);
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["n"] = opt.n;
    if (via_explicit) j["explicit"] = format_symbol(*via_explicit);
    if (via_quant) j["quant"] = format_symbol(*via_quant);
    if (via_explicit && via_quant) j["equal"] = equal;
    os << j.dump(2) << "\n";
  } else if (opt.route == "both") {
    os << "explicit: " << format_symbol(*via_explicit) << "\n";
    os << "quant: " << format_symbol(*via_quant) << "\n";
    os << "equal: " << (equal ? "true" : "false") << "\n";
  } else {
    os << format_symbol(via_explicit ? *via_explicit : *via_quant) << "\n";
  }
  return equal ? 0 : kExitVerify;
}

int cmd_coeffs(const CliOptions& opt, int k, int l) {
  if (k < 0 || l < 0 || opt.r_max < 0)
    throw CLI::ValidationError("coeffs", "bounds must be nonnegative");
  std::ofstream file;
  std::ostream& os = open_out(opt.out, file);
  bool json = opt.format == "json";
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (!json) os << "n,k,l,alpha,beta,gamma,delta,value\n";
  for (int a = 0; a <= opt.r_max; ++a)
    for (int b = 0; a + b <= opt.r_max; ++b)
      for (int g = 0; a + b + g <= opt.r_max; ++g)
        for (int d = 0; a + b + g + d <= opt.r_max; ++d) {
          Rational v = star_coefficient(opt.n, k, l, a, b, g, d);
          if (json) {
            nlohmann::ordered_json r;
            r["alpha"] = a;
            r["beta"] = b;
            r["gamma"] = g;
            r["delta"] = d;
            r["value"] = v.str();
            rows.push_back(r);
          } else {
            os << opt.n << "," << k << "," << l << "," << a << "," << b << ","
               << g << "," << d << "," << v.str() << "\n";
          }
        }
  if (json) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["n"] = opt.n;
    j["k"] = k;
    j["l"] = l;
    j["r_max"] = opt.r_max;
    j["coefficients"] = rows;
    os << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_verify(const CliOptions& opt, const std::string& suite) {
  RunConfig cfg;
  cfg.n = opt.n;
  apply_geometry(cfg, opt.geometry);
  cfg.lambda = parse_lambda(opt.lambda);
  cfg.max_deg = opt.max_deg;
  cfg.r_max = opt.r_max;
  cfg.seed = opt.seed;
  if (!is_suite(suite))
    throw CLI::ValidationError("verify", "unknown suite '" + suite + "'");
  auto results = run_suite(suite, cfg);
  std::ofstream file;
  std::ostream& os = open_out(opt.out, file);
  if (opt.format == "text")
    os << report_text(suite, cfg, results);
  else
    os << report_json(suite, cfg, results);
  return all_passed(results) ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact equivariant quantization and invariant star-products "
               "on T*R^n"};
  app.require_subcommand(1);
  CliOptions opt;

  std::string expr_f, expr_g, suite = "all";
  int coeff_k = 0, coeff_l = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-n", opt.n, "base dimension")->check(CLI::PositiveNumber);
    sub->add_option("--lambda", opt.lambda, "density weight (rational)");
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", opt.out, "write output to a file");
  };

  CLI::App* q = app.add_subcommand("quantize", "quantize a symbol");
  add_common(q);
  q->add_option("expr", expr_f, "symbol expression")->required();

  CLI::App* s = app.add_subcommand("star", "star-product of two symbols");
  add_common(s);
  s->add_option("--route", opt.route, "computation route")
      ->check(CLI::IsMember({"explicit", "quant", "both"}));
  s->add_option("exprF", expr_f, "left factor")->required();
  s->add_option("exprG", expr_g, "right factor")->required();

  CLI::App* c = app.add_subcommand("coeffs", "emit a coefficient table");
  add_common(c);
  c->add_option("-k", coeff_k, "fiber degree of the left factor");
  c->add_option("-l", coeff_l, "fiber degree of the right factor");
  c->add_option("--r-max", opt.r_max, "maximum total order");

  CLI::App* v = app.add_subcommand("verify", "run a verification suite");
  add_common(v);
  v->add_option("suite", suite, "algebra|operators|quantization|star|hochschild|bivectors|all");
  v->add_option("--geometry", opt.geometry, "projective or conformal:p,q");
  v->add_option("--max-deg", opt.max_deg, "degree bound for sweeps");
  v->add_option("--r-max", opt.r_max, "order bound for residual sweeps");
  v->add_option("--seed", opt.seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (app.got_subcommand(q)) return cmd_quantize(opt, expr_f);
    if (app.got_subcommand(s)) return cmd_star(opt, expr_f, expr_g);
    if (app.got_subcommand(c)) {
      if (c->count("--format") == 0) opt.format = "csv";
      return cmd_coeffs(opt, coeff_k, coeff_l);
    }
    if (app.got_subcommand(v)) {
      if (opt.format == "csv")
        throw CLI::ValidationError("--format", "verify emits text or json");
      if (v->count("--format") == 0) opt.format = "json";
      return cmd_verify(opt, suite);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
