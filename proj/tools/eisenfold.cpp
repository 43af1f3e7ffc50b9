// eisenfold: command-line workbench over the library.
// Exit codes: 0 ok, 1 domain error, 2 budget exhausted or undetermined.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "eisenfold/errors.hpp"
#include "eisenfold/io.hpp"
#include "eisenfold/render.hpp"

using namespace eisenfold;

namespace {

constexpr int kOk = 0, kDomain = 1, kBudget = 2;

LatticePoint parse_beta(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw DomainError("beta must be given as a,b: " + text);
  try {
    std::size_t p1 = 0, p2 = 0;
    const std::string sa = text.substr(0, comma), sb = text.substr(comma + 1);
    const LatticePoint z{std::stoll(sa, &p1), std::stoll(sb, &p2)};
    if (p1 != sa.size() || p2 != sb.size()) throw DomainError("beta must be given as a,b: " + text);
    return z;
  } catch (const std::logic_error&) {
    throw DomainError("beta must be given as a,b: " + text);
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::logic_error&) {
      throw DomainError("expected a comma-separated integer list: " + text);
    }
  }
  return out;
}

PosRational parse_aspect(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw DomainError("aspect must be given as p/q: " + text);
  try {
    const long p = std::stol(text.substr(0, slash)), q = std::stol(text.substr(slash + 1));
    if (p < 1 || q < 1 || p > q) throw DomainError("aspect p/q needs 1 <= p <= q: " + text);
    return PosRational(p, q);
  } catch (const std::logic_error&) {
    throw DomainError("aspect must be given as p/q: " + text);
  }
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw DomainError("cannot write " + out);
  f << text;
}

struct Check {
  std::string name;
  bool pass;
};

int selftest(std::string& text) {
  std::vector<Check> checks;
  const std::vector<std::pair<LatticePoint, std::int64_t>> table{{{1, 2}, 13}, {{2, 3}, 23}, {{3, 5}, 39}};
  for (const auto& [b, f] : table) {
    const auto col = continued_fraction_coloring(to_big(b));
    checks.push_back({"fold count of C(" + std::to_string(b.a) + "+" + std::to_string(b.b) + "alpha)",
                      fold_count(col) == f && is_good(col).good});
  }
  checks.push_back({"alternating coloring on T(2+3alpha) has 57 folds",
                    fold_count(alternating_coloring(make_complex(to_big({2, 3})))) == 57});
  SearchOptions o;
  o.threads = 1;
  const auto r = min_fold_search(make_complex(to_big({1, 2})), o);
  checks.push_back({"exact search on T(1+2alpha) proves 13",
                    r.best_fold == 13 && r.status == SearchStatus::ProvedOptimal});
  const auto lim = eta_limit_numeric(parse_surd("golden"));
  checks.push_back({"golden eta-limit is 9+4sqrt5", lim.eta && *lim.eta == QuadraticSurd::make(9, 4, 5)});
  Json j;
  j["checks"] = Json::array();
  bool ok = true;
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}});
    ok &= c.pass;
  }
  j["ok"] = ok;
  text = dump(j);
  return ok ? kOk : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eisenfold: good colorings of the sphere triangulations T(beta)"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out;
  app.add_option("--out,-o", out, "Write the result here instead of stdout");

  std::string beta_text, in_path, scheme = "cf", zeta_text, mode = "exact", checkpoint, fib_text = "2,3,4", content = "cf",
                                  flower_text;
  int n_max = 12, max_digits = 7000, domains = 1;
  double time_limit = 0, scale = 20;
  std::uint64_t node_limit = 0, seed = 1;
  unsigned threads = 0;
  bool resume = false, timing = false, no_construct = false, no_rhombus = false, no_folds = false;
  std::int64_t b_max = 100;

  auto* build = app.add_subcommand("build", "Emit the complex T(beta) as complex.v1 JSON");
  build->add_option("--beta", beta_text, "beta as a,b (a + b alpha)")->required();

  auto* color = app.add_subcommand("color", "Emit a coloring as coloring.v1 JSON");
  color->add_option("--beta", beta_text, "beta as a,b")->required();
  color->add_option("--scheme", scheme, "cf (continued-fraction coloring C(beta)) or alternating")
      ->check(CLI::IsMember({"cf", "alternating"}));

  auto* validate = app.add_subcommand("validate", "Recompute goodness, folds and eta of a coloring.v1 file");
  validate->add_option("--in", in_path, "coloring.v1 file")->required();

  auto* eta_cmd = app.add_subcommand("eta", "eta = f^2/F of a coloring, of C(beta), or along the approximants of a surd");
  auto* eta_in = eta_cmd->add_option("--in", in_path, "coloring.v1 file");
  auto* eta_beta = eta_cmd->add_option("--beta", beta_text, "beta as a,b (uses C(beta))");
  auto* eta_zeta = eta_cmd->add_option("--zeta", zeta_text, "surd: golden, sqrt:N or surd:R,S,N");
  eta_cmd->add_option("--n", n_max, "number of approximants for --zeta");
  eta_in->excludes(eta_beta)->excludes(eta_zeta);
  eta_beta->excludes(eta_zeta);

  auto* limit = app.add_subcommand("eta-limit", "Reconstruct the exact limit of eta along the approximants of a surd");
  limit->add_option("--zeta", zeta_text, "surd: golden, sqrt:N or surd:R,S,N")->required();
  limit->add_option("--max-digits", max_digits, "largest approximant denominator size, in digits");
  limit->add_option("--time-limit", time_limit, "seconds, 0 for none");

  auto* search = app.add_subcommand("search", "Minimize the fold count over good colorings (search.v1 JSON)");
  search->add_option("--beta", beta_text, "beta as a,b")->required();
  search->add_option("--mode", mode, "exact or anytime")->check(CLI::IsMember({"exact", "anytime"}));
  search->add_option("--time-limit", time_limit, "seconds, 0 for none");
  search->add_option("--node-limit", node_limit, "branch-and-bound nodes, 0 for none");
  search->add_option("--threads", threads, "worker threads (0: all cores; EISENFOLD_THREADS caps it)");
  search->add_option("--seed", seed, "annealing seed");
  search->add_option("--checkpoint", checkpoint, "checkpoint file for exact search");
  search->add_flag("--resume", resume, "resume from --checkpoint");
  search->add_flag("--timing", timing, "include wall time and thread count");

  auto* sweep = app.add_subcommand("sweep-ie", "Check eta(C(beta)) < eta(C(beta')) for all b(beta) <= b' < b-max");
  sweep->add_option("--fib", fib_text, "Fibonacci indices n (beta = a_n + a_{n+1} alpha)");
  sweep->add_option("--b-max", b_max, "exclusive bound on b'");
  sweep->add_flag("--no-construct", no_construct, "use the layer formula only");
  sweep->add_option("--threads", threads, "worker threads");

  auto* render = app.add_subcommand("render", "SVG picture of the universal cover");
  render->add_option("--beta", beta_text, "beta as a,b");
  render->add_option("--in", in_path, "coloring.v1 file to draw");
  render->add_option("--content", content, "cf, alternating or bare")
      ->check(CLI::IsMember({"cf", "alternating", "bare"}));
  render->add_option("--flower", flower_text, "draw the empty flower of aspect p/q instead");
  render->add_option("--domains", domains, "fundamental domains per side");
  render->add_option("--scale", scale, "pixels per unit");
  render->add_flag("--no-rhombus", no_rhombus, "omit the fundamental rhombus");
  render->add_flag("--no-folds", no_folds, "omit fold strokes");

  auto* self = app.add_subcommand("selftest", "Run quick built-in checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kDomain;
  }

  try {
    std::string text;
    int code = kOk;
    if (*build) {
      text = dump(complex_json(*make_complex(to_big(parse_beta(beta_text)))));
    } else if (*color) {
      const auto beta = to_big(parse_beta(beta_text));
      text = dump(coloring_json(scheme == "cf" ? continued_fraction_coloring(beta)
                                               : alternating_coloring(make_complex(beta))));
    } else if (*validate) {
      const auto col = coloring_from_json(read_json(in_path));
      Json j = coloring_json(col);
      const auto g = is_good(col);
      const auto bal = color_balance(col);
      j["mod6"] = g.mod6;
      j["violations"] = g.violations;
      j["balance"] = {{"black", bal.black}, {"white", bal.white}};
      text = dump(j);
    } else if (*eta_cmd) {
      if (!zeta_text.empty()) {
        const auto zeta = parse_surd(zeta_text);
        text = dump(ratio_scan_json(zeta, ratio_scan(zeta, n_max)));
      } else {
        if (in_path.empty() && beta_text.empty()) throw DomainError("eta needs --in, --beta or --zeta");
        const auto col = in_path.empty() ? continued_fraction_coloring(to_big(parse_beta(beta_text)))
                                         : coloring_from_json(read_json(in_path));
        Json j;
        j["beta"] = lattice_json(col.complex().beta());
        j["fold_count"] = fold_count(col);
        j["faces"] = col.face_count();
        j["eta"] = rational_json(eta(col));
        j["eta_value"] = eta(col).get_d();
        j["good"] = is_good(col).good;
        text = dump(j);
      }
    } else if (*limit) {
      EtaLimitOptions o;
      o.max_digits = max_digits;
      o.time_limit_seconds = time_limit;
      const auto r = eta_limit_numeric(parse_surd(zeta_text), o);
      text = dump(eta_limit_json(r));
      if (r.status != EtaLimitReport::Status::Determined) code = kBudget;
    } else if (*search) {
      SearchOptions o;
      o.mode = mode == "exact" ? SearchMode::Exact : SearchMode::Anytime;
      o.time_limit_seconds = time_limit;
      o.node_limit = node_limit;
      o.threads = threads;
      o.seed = seed;
      o.checkpoint_path = checkpoint;
      o.resume = resume;
      if (resume && checkpoint.empty()) throw DomainError("--resume needs --checkpoint");
      const auto r = min_fold_search(make_complex(to_big(parse_beta(beta_text))), o);
      text = dump(search_json(r, timing));
      if (o.mode == SearchMode::Exact && r.status != SearchStatus::ProvedOptimal) code = kBudget;
    } else if (*sweep) {
      IeSweepOptions o;
      o.construct = !no_construct;
      o.threads = threads;
      text = dump(ie_sweep_json(ie_sweep(fibonacci_betas(parse_int_list(fib_text)), b_max, o), b_max));
    } else if (*render) {
      if (!flower_text.empty()) {
        text = render_empty_flower_svg(parse_aspect(flower_text), scale);
      } else {
        RenderSpec spec;
        spec.domains = domains;
        spec.scale = scale;
        spec.show_rhombus = !no_rhombus;
        spec.show_folds = !no_folds;
        if (!in_path.empty()) {
          spec.coloring = coloring_from_json(read_json(in_path));
          spec.beta = spec.coloring->complex().beta();
          spec.content = RenderSpec::Content::Given;
        } else {
          if (beta_text.empty()) throw DomainError("render needs --beta, --in or --flower");
          spec.beta = parse_beta(beta_text);
          spec.content = content == "cf"            ? RenderSpec::Content::ContinuedFraction
                         : content == "alternating" ? RenderSpec::Content::Alternating
                                                    : RenderSpec::Content::Bare;
        }
        text = render_svg(spec);
      }
    } else if (*self) {
      code = selftest(text);
    }
    emit(text, out);
    return code;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const UndeterminedError& e) {
    std::cerr << "undetermined: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kDomain;
  }
}
