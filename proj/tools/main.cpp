#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "gfrac/pick.hpp"
#include "gfrac/schur.hpp"
#include "jout.hpp"
#include "verify_suites.hpp"

namespace {

using namespace gfrac;
using gfrac::cli::JsonValue;

// Exit-code contract: 0 success, 1 verification failure, 2 input/domain
// error, 3 numerical non-convergence.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitNoConverge = 3;

struct RunConfig {
  double a = 0.0, b = 0.1, c = 0.4;
  std::vector<double> z_re, z_im;
  int depth = 2000;
  double tol = 1e-10;
  std::string gap;
  std::string alphas = "example31";
  int k = 1;
  double beta_re = 0.5, beta_im = 0.0;
  std::string function;
  double radius = 0.9;
  int samples = 720;
  int order = 8;
  std::string suite = "all";
  std::string format = "json";
  std::string out;
};

void apply_config_file(RunConfig& rc, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidityError("cannot open config file: " + path);
  nlohmann::json j;
  in >> j;
  auto num = [&](const char* key, double& slot) {
    if (j.contains(key)) slot = j[key].get<double>();
  };
  auto integer = [&](const char* key, int& slot) {
    if (j.contains(key)) slot = j[key].get<int>();
  };
  auto str = [&](const char* key, std::string& slot) {
    if (j.contains(key)) slot = j[key].get<std::string>();
  };
  num("a", rc.a);
  num("b", rc.b);
  num("c", rc.c);
  if (j.contains("z_re")) rc.z_re = j["z_re"].get<std::vector<double>>();
  if (j.contains("z_im")) rc.z_im = j["z_im"].get<std::vector<double>>();
  integer("depth", rc.depth);
  num("tol", rc.tol);
  str("gap", rc.gap);
  str("alphas", rc.alphas);
  integer("k", rc.k);
  num("beta_re", rc.beta_re);
  num("beta_im", rc.beta_im);
  str("function", rc.function);
  num("radius", rc.radius);
  integer("samples", rc.samples);
  integer("order", rc.order);
  str("suite", rc.suite);
  str("format", rc.format);
  str("out", rc.out);
}

void emit(const RunConfig& rc, const std::string& text) {
  if (rc.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(rc.out, std::ios::binary);
  if (!f) throw ValidityError("cannot open output file: " + rc.out);
  f << text;
}

std::vector<Cplx> sample_points(const RunConfig& rc) {
  if (rc.z_re.empty() && rc.z_im.empty())
    return {Cplx(0.1), Cplx(0.3, 0.1), Cplx(-0.25), Cplx(0, 0.4), Cplx(0.5)};
  std::vector<Cplx> out;
  const std::size_t n = std::max(rc.z_re.size(), rc.z_im.size());
  for (std::size_t i = 0; i < n; ++i)
    out.emplace_back(i < rc.z_re.size() ? rc.z_re[i] : 0.0, i < rc.z_im.size() ? rc.z_im[i] : 0.0);
  return out;
}

Cplx single_point(const RunConfig& rc) {
  return {rc.z_re.empty() ? 0.0 : rc.z_re[0], rc.z_im.empty() ? 0.0 : rc.z_im[0]};
}

RatioId parse_family(const std::string& name) {
  if (name == "gauss") return {RatioFamily::gauss, 0};
  if (name == "kustner") return {RatioFamily::kustner, 0};
  if (name == "fgap2" || name == "F-gap2") return {RatioFamily::f_gap2, 0};
  if (name.size() >= 2 && (name[0] == 'g' || name[0] == 'f')) {
    const int n = std::atoi(name.c_str() + 1);
    if (n >= 1) return {name[0] == 'g' ? RatioFamily::g_n : RatioFamily::f_n, n};
  }
  throw ValidityError("unknown fraction family: " + name);
}

SchurParams load_alphas(const std::string& source) {
  if (source == "example31") return SchurParams::example31();
  std::ifstream in(source);
  if (!in) throw ValidityError("cannot open alpha-sequence file: " + source);
  std::vector<Cplx> values;
  double re, im;
  while (in >> re >> im) values.emplace_back(re, im);
  if (values.empty()) throw ValidityError("alpha-sequence file is empty: " + source);
  return SchurParams::from_values(values);
}

JsonValue poly_coeffs_json(const ComplexPoly& p) {
  JsonValue arr = JsonValue::array();
  for (int j = 0; j <= std::max(0, p.degree()); ++j) {
    JsonValue pair = JsonValue::array();
    pair.push(JsonValue::number(p.coeff(j).real()));
    pair.push(JsonValue::number(p.coeff(j).imag()));
    arr.push(std::move(pair));
  }
  return arr;
}

// ---------------------------------------------------------------- eval ----

int cmd_eval(const RunConfig& rc) {
  if (rc.function.empty()) throw ValidityError("eval requires --function");
  const RatioId id = parse_family(rc.function);
  const RatioCf cf = ratio_cf(id, Hyp2F1Params(rc.a, rc.b, rc.c));
  const Cplx z = single_point(rc);
  const CfLimit lim = cf_limit_full(cf.spec, z, rc.tol, rc.depth);

  JsonValue rec = JsonValue::object();
  rec.field("family", JsonValue::str(rc.function))
      .field("a", JsonValue::number(rc.a))
      .field("b", JsonValue::number(rc.b))
      .field("c", JsonValue::number(rc.c))
      .field("z_re", JsonValue::number(z.real()))
      .field("z_im", JsonValue::number(z.imag()))
      .field("value_re", JsonValue::number(lim.value.real()))
      .field("value_im", JsonValue::number(lim.value.imag()))
      .field("depth_used", JsonValue::integer(lim.depth_used))
      .field("converged", JsonValue::boolean(true));
  emit(rc, rec.dump() + "\n");
  return kExitOk;
}

// --------------------------------------------------------- gap-compare ----

GapSpec parse_gap(const std::string& text) {
  if (text.empty()) throw ValidityError("gap-compare requires --gap");
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int k = std::atoi(text.substr(0, dots).c_str());
    const int last = std::atoi(text.substr(dots + 2).c_str());
    if (last < k) throw ValidityError("malformed gap range: " + text);
    return GapSpec::block(k, last - k + 1);
  }
  const auto comma = text.find(',');
  if (comma != std::string::npos) {
    const int k = std::atoi(text.substr(0, comma).c_str());
    const int l = std::atoi(text.substr(comma + 1).c_str());
    return GapSpec::pair(k, l);
  }
  return GapSpec::single(std::atoi(text.c_str()));
}

int cmd_gap_compare(const RunConfig& rc) {
  const std::string family = rc.function.empty() ? "gauss" : rc.function;
  const GSequence g = ratio_cf(parse_family(family), Hyp2F1Params(rc.a, rc.b, rc.c)).gseq;
  const GapSpec gap = parse_gap(rc.gap);
  const Cplx z = single_point(rc);

  const Cplx direct = gap_value_direct(g, gap, z, 1e-13, rc.depth);
  Cplx structural;
  std::string kind;
  switch (gap.kind) {
    case GapSpec::Kind::Single:
      kind = "single";
      structural = gap_value_structural_single(g, gap.k, z, 1e-13, rc.depth);
      break;
    case GapSpec::Kind::Block:
      kind = "block";
      structural = gap_value_structural_block(g, gap.k, gap.second, z, 1e-13, rc.depth);
      break;
    case GapSpec::Kind::Pair:
      kind = "pair";
      structural = gap_value_structural_pair(g, gap.k, gap.second, z, 1e-13, rc.depth);
      break;
  }
  const double diff = std::abs(direct - structural);
  const bool pass = diff <= rc.tol;

  JsonValue rec = JsonValue::object();
  rec.field("family", JsonValue::str(family))
      .field("kind", JsonValue::str(kind))
      .field("k", JsonValue::integer(gap.k))
      .field("second", JsonValue::integer(gap.second))
      .field("a", JsonValue::number(rc.a))
      .field("b", JsonValue::number(rc.b))
      .field("c", JsonValue::number(rc.c))
      .field("z_re", JsonValue::number(z.real()))
      .field("z_im", JsonValue::number(z.imag()))
      .field("direct_re", JsonValue::number(direct.real()))
      .field("direct_im", JsonValue::number(direct.imag()))
      .field("structural_re", JsonValue::number(structural.real()))
      .field("structural_im", JsonValue::number(structural.imag()))
      .field("abs_diff", JsonValue::number(diff))
      .field("tol", JsonValue::number(rc.tol))
      .field("pass", JsonValue::boolean(pass));
  emit(rc, rec.dump() + "\n");
  return pass ? kExitOk : kExitVerifyFail;
}

// -------------------------------------------------------- schur-perturb ----

int cmd_schur_perturb(const RunConfig& rc) {
  const SchurParams params = load_alphas(rc.alphas);
  const Cplx beta(rc.beta_re, rc.beta_im);
  if (std::abs(beta) > 1.0) throw ValidityError("beta outside the closed unit disk");
  const TransferMatrix t = perturb_transfer_matrix(params, rc.k, beta);
  const SchurParams substituted = params.with_replacement(rc.k, beta);
  const bool affine = rc.alphas == "example31";

  JsonValue rec = JsonValue::object();
  rec.field("alphas", JsonValue::str(rc.alphas))
      .field("k", JsonValue::integer(rc.k))
      .field("beta_re", JsonValue::number(beta.real()))
      .field("beta_im", JsonValue::number(beta.imag()))
      .field("scalar_coeff", JsonValue::number(t.scalar_coeff))
      .field("z_power", JsonValue::integer(t.z_power))
      .field("t11", poly_coeffs_json(t.t11))
      .field("t12", poly_coeffs_json(t.t12))
      .field("t21", poly_coeffs_json(t.t21))
      .field("t22", poly_coeffs_json(t.t22));

  JsonValue samples = JsonValue::array();
  for (const Cplx& z : sample_points(rc)) {
    const int depth = std::min(rc.depth, 400);
    const Cplx f_z = schur_approximant(params, depth, z);
    const Cplx fp_z = perturbed_schur_at(t, f_z, z);
    const Cplx sub_z = schur_approximant(substituted, depth, z);
    JsonValue s = JsonValue::object();
    s.field("z_re", JsonValue::number(z.real()))
        .field("z_im", JsonValue::number(z.imag()))
        .field("f_re", JsonValue::number(f_z.real()))
        .field("f_im", JsonValue::number(f_z.imag()))
        .field("f_pert_re", JsonValue::number(fp_z.real()))
        .field("f_pert_im", JsonValue::number(fp_z.imag()))
        .field("f_pert_substituted_re", JsonValue::number(sub_z.real()))
        .field("f_pert_substituted_im", JsonValue::number(sub_z.imag()));
    if (affine && std::abs(z) > 0) {
      // f(z) = z/2 + 1/2, so the conjugating self-map is 2 f_pert - 1
      const Cplx w = 2.0 * fp_z - 1.0;
      s.field("subord_ratio", JsonValue::number(std::abs(w) / std::abs(z)));
    } else {
      s.field("subord_ratio", JsonValue::null());
    }
    samples.push(std::move(s));
  }
  rec.field("samples", std::move(samples));
  emit(rc, rec.dump() + "\n");
  return kExitOk;
}

// ------------------------------------------------------------ map-image ----

int cmd_map_image(const RunConfig& rc) {
  if (rc.function.empty()) throw ValidityError("map-image requires --function");
  if (!(rc.radius > 0.0 && rc.radius < 1.0))
    throw ValidityError("map-image radius must lie in (0,1)");
  if (rc.samples < 8) throw ValidityError("map-image needs at least 8 samples");

  std::function<Cplx(Cplx)> fn;
  const RationalFn f31({Cplx(0.5), Cplx(0.5)}, {Cplx(1)});
  if (rc.function == "f") {
    fn = [f31](Cplx z) { return f31.eval(z); };
  } else if (rc.function == "f-pert") {
    const TransferMatrix t =
        perturb_transfer_matrix(SchurParams::example31(), rc.k, Cplx(rc.beta_re, rc.beta_im));
    const RationalFn fp = perturbed_schur(t, f31);
    fn = [fp](Cplx z) { return fp.eval(z); };
  } else if (rc.function == "carat") {
    const RationalFn c = schur_to_caratheodory(f31);
    fn = [c](Cplx z) { return c.eval(z); };
  } else if (rc.function == "carat-pert") {
    const TransferMatrix t =
        perturb_transfer_matrix(SchurParams::example31(), rc.k, Cplx(rc.beta_re, rc.beta_im));
    const RationalFn cp = perturbed_caratheodory(t, schur_to_caratheodory(f31));
    fn = [cp](Cplx z) { return cp.eval(z); };
  } else if (rc.function == "kustner-F") {
    const GSequence g = GSequence::kustner(rc.a, rc.b, rc.c);
    const int depth = rc.depth;
    fn = [g, depth](Cplx w) { return cf_limit(gfrac_spec(g), w, 1e-12, depth); };
  } else if (rc.function == "F-gap2") {
    const GSequence g = GSequence::kustner(rc.a, rc.b, rc.c);
    const int depth = rc.depth;
    fn = [g, depth](Cplx w) { return gap_value_structural_single(g, 2, w, 1e-12, depth); };
  } else {
    throw ValidityError("unknown map-image function: " + rc.function);
  }

  struct Row {
    double theta;
    Cplx in;
    std::optional<Cplx> out;
  };
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(rc.samples));
  for (int i = 0; i < rc.samples; ++i) {
    const double theta = 2.0 * M_PI * i / rc.samples;
    const Cplx z = std::polar(rc.radius, theta);
    Row row{theta, z, std::nullopt};
    try {
      row.out = fn(z);
    } catch (const Error&) {
      // pole or non-convergence: flagged row with empty output fields
    }
    rows.push_back(row);
  }

  if (rc.format == "csv") {
    std::ostringstream os;
    char buf[40];
    auto num = [&](double v) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      os << buf;
    };
    os << "theta,in_re,in_im,out_re,out_im,flag\n";
    for (const Row& r : rows) {
      num(r.theta);
      os << ',';
      num(r.in.real());
      os << ',';
      num(r.in.imag());
      os << ',';
      if (r.out) {
        num(r.out->real());
        os << ',';
        num(r.out->imag());
        os << ",0\n";
      } else {
        os << ",,1\n";
      }
    }
    emit(rc, os.str());
  } else {
    JsonValue arr = JsonValue::array();
    for (const Row& r : rows) {
      JsonValue rec = JsonValue::object();
      rec.field("theta", JsonValue::number(r.theta))
          .field("in_re", JsonValue::number(r.in.real()))
          .field("in_im", JsonValue::number(r.in.imag()))
          .field("out_re", r.out ? JsonValue::number(r.out->real()) : JsonValue::null())
          .field("out_im", r.out ? JsonValue::number(r.out->imag()) : JsonValue::null())
          .field("flag", JsonValue::integer(r.out ? 0 : 1));
      arr.push(std::move(rec));
    }
    emit(rc, arr.dump() + "\n");
  }
  return kExitOk;
}

// --------------------------------------------------------------- verify ----

int cmd_verify(const RunConfig& rc) {
  unsigned seed = 12345;
  if (const char* env = std::getenv("GFRAC_SEED")) seed = static_cast<unsigned>(std::atoll(env));
  const auto checks = gfrac::cli::run_verify_suite(rc.suite, seed);

  bool all_pass = true;
  JsonValue arr = JsonValue::array();
  for (const auto& ch : checks) {
    all_pass = all_pass && ch.pass;
    JsonValue rec = JsonValue::object();
    rec.field("check", JsonValue::str(ch.check))
        .field("params", JsonValue::str(ch.params))
        .field("worst", JsonValue::number(ch.worst))
        .field("tol", JsonValue::number(ch.tol))
        .field("pass", JsonValue::boolean(ch.pass));
    arr.push(std::move(rec));
  }
  JsonValue rep = JsonValue::object();
  rep.field("suite", JsonValue::str(rc.suite))
      .field("seed", JsonValue::integer(seed))
      .field("checks", std::move(arr))
      .field("all_pass", JsonValue::boolean(all_pass));
  emit(rc, rep.dump() + "\n");
  return all_pass ? kExitOk : kExitVerifyFail;
}

// --------------------------------------------------------- moment-check ----

int cmd_moment_check(const RunConfig& rc) {
  std::vector<double> nu;
  std::string name;
  std::ostringstream params;
  if (!rc.function.empty() && rc.function.rfind("pick-", 0) == 0) {
    const int index = std::atoi(rc.function.c_str() + 5);
    nu = pick_ratio_moments(index, Hyp2F1Params(rc.a, rc.b, rc.c), rc.order);
    name = rc.function;
    params << "(a,b,c)=(" << rc.a << "," << rc.b << "," << rc.c << ")";
  } else if (!rc.function.empty() && rc.function != "file") {
    throw ValidityError("moment-check expects --function pick-1..pick-6 or --function file");
  } else {
    std::ifstream in(rc.alphas);
    if (!in) throw ValidityError("cannot open sequence file: " + rc.alphas);
    double v;
    while (in >> v) nu.push_back(v);
    if (static_cast<int>(nu.size()) < rc.order + 1)
      throw ValidityError("sequence file shorter than order+1 entries");
    name = "file";
    params << rc.alphas;
  }

  const double slack = rc.tol > 0 ? rc.tol : 1e-10;
  const CheckReport rep = totally_monotone_check(nu, rc.order, slack);

  JsonValue rec = JsonValue::object();
  rec.field("check", JsonValue::str(name))
      .field("params", JsonValue::str(params.str()))
      .field("order", JsonValue::integer(rc.order))
      .field("worst", JsonValue::number(rep.worst))
      .field("slack", JsonValue::number(rep.slack))
      .field("pass", JsonValue::boolean(rep.pass))
      .field("fail_j", rep.fail_j >= 0 ? JsonValue::integer(rep.fail_j) : JsonValue::null())
      .field("fail_k", rep.fail_k >= 0 ? JsonValue::integer(rep.fail_k) : JsonValue::null());
  emit(rc, rec.dump() + "\n");
  return rep.pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"continued fractions, Schur-parameter perturbations and moment checks"};
  app.require_subcommand(1);

  RunConfig rc;
  std::string config_path;

  // --config is applied first so that explicit flags override it
  for (int i = 1; i < argc - 1; ++i) {
    if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
  }
  if (!config_path.empty()) {
    try {
      apply_config_file(rc, config_path);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitInput;
    }
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--a", rc.a);
    sub->add_option("--b", rc.b);
    sub->add_option("--c", rc.c);
    sub->add_option("--z-re", rc.z_re);
    sub->add_option("--z-im", rc.z_im);
    sub->add_option("--depth", rc.depth);
    sub->add_option("--tol", rc.tol);
    sub->add_option("--gap", rc.gap);
    sub->add_option("--alphas", rc.alphas);
    sub->add_option("--k", rc.k);
    sub->add_option("--beta-re", rc.beta_re);
    sub->add_option("--beta-im", rc.beta_im);
    sub->add_option("--function", rc.function);
    sub->add_option("--radius", rc.radius);
    sub->add_option("--samples", rc.samples);
    sub->add_option("--order", rc.order);
    sub->add_option("--suite", rc.suite);
    sub->add_option("--format", rc.format);
    sub->add_option("--out", rc.out);
    sub->add_option("--config", config_path);
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a continued fraction");
  CLI::App* gap = app.add_subcommand("gap-compare", "structural vs direct gapped values");
  CLI::App* schur = app.add_subcommand("schur-perturb", "transfer-matrix parameter replacement");
  CLI::App* map = app.add_subcommand("map-image", "boundary-image curve data");
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  CLI::App* moment = app.add_subcommand("moment-check", "Hausdorff moment certification");
  for (CLI::App* sub : {eval, gap, schur, map, verify, moment}) add_common(sub);

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return cmd_eval(rc);
    if (gap->parsed()) return cmd_gap_compare(rc);
    if (schur->parsed()) return cmd_schur_perturb(rc);
    if (map->parsed()) return cmd_map_image(rc);
    if (verify->parsed()) return cmd_verify(rc);
    if (moment->parsed()) return cmd_moment_check(rc);
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConverge;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
