// Command-line surface: build witnesses from rotation specs, certify states
// (PPT / realignment / witness expectations), scan the torus family,
// classify operators by see-saw, and run the verification suites.
//
// Exit codes: 0 ok or inconclusive, 2 usage/input error, 3 entanglement
// detected, 4 verification check failed.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mubw/blockpos.hpp"
#include "mubw/detect.hpp"
#include "mubw/json_io.hpp"
#include "mubw/kernels.hpp"
#include "mubw/linalg.hpp"
#include "mubw/rng.hpp"

namespace {

using namespace mubw;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDetected = 3;
constexpr int kExitCheckFailed = 4;

double parse_number(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("cannot parse number: " + s);
  return v;
}

// Accepts "pi", "2pi/3", "-pi/2", "0.75", "1e-3", ...
double parse_angle_token(std::string tok) {
  if (tok.empty()) throw std::invalid_argument("empty angle token");
  double sign = 1.0;
  std::size_t start = 0;
  if (tok[0] == '+' || tok[0] == '-') {
    sign = tok[0] == '-' ? -1.0 : 1.0;
    start = 1;
  }
  const std::string body = tok.substr(start);
  const std::size_t pos = body.find("pi");
  if (pos == std::string::npos) {
    if (body.empty()) throw std::invalid_argument("bad angle token: " + tok);
    return sign * parse_number(body);
  }
  const std::string coef_str = body.substr(0, pos);
  const std::string rest = body.substr(pos + 2);
  const double coef = coef_str.empty() ? 1.0 : parse_number(coef_str);
  double denom = 1.0;
  if (!rest.empty()) {
    if (rest[0] != '/' || rest.size() < 2) throw std::invalid_argument("bad angle token: " + tok);
    denom = parse_number(rest.substr(1));
    if (denom == 0.0) throw std::invalid_argument("zero denominator in angle: " + tok);
  }
  return sign * coef * M_PI / denom;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<double> parse_angles(const std::string& list) {
  std::vector<double> out;
  for (const auto& tok : split(list, ',')) out.push_back(parse_angle_token(tok));
  return out;
}

std::vector<std::vector<std::size_t>> parse_perms(const std::string& list) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& grp : split(list, ';')) {
    std::vector<std::size_t> perm;
    for (const auto& tok : split(grp, ',')) {
      const double v = parse_number(tok);
      if (v < 0 || v != std::floor(v)) throw std::invalid_argument("bad permutation entry: " + tok);
      perm.push_back(static_cast<std::size_t>(v));
    }
    out.push_back(std::move(perm));
  }
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MUBW_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

ComplexMatrix load_state(const std::string& spec) {
  if (spec == "canonical") return canonical_rho();
  return matrix_from_json(load_json(spec));
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    save_json(out_path, j);
    std::cout << "wrote " << out_path << '\n';
  }
}

BipartiteDims resolve_dims(std::size_t dim, std::size_t d1, std::size_t d2) {
  if (d1 != 0 && d2 != 0) {
    if (d1 * d2 != dim) throw std::invalid_argument("--d1/--d2 do not factor the state dimension");
    return {d1, d2};
  }
  const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(dim))));
  if (root * root != dim) {
    throw std::invalid_argument("state dimension is not a perfect square; pass --d1 and --d2");
  }
  return {root, root};
}

// ---- build ---------------------------------------------------------------

int cmd_build(std::size_t d, std::size_t L, const std::string& angles,
              const std::string& perms, const std::string& matrix_file,
              const std::string& mubs_file, const std::string& out_path) {
  WitnessSpec spec;
  spec.d = d;

  if (!mubs_file.empty()) {
    spec.mub_source = MubSource::Custom;
    spec.custom_mubs = mubs_from_json(load_json(mubs_file));
    if (spec.custom_mubs.d != d) throw std::invalid_argument("--mubs-file dimension != --d");
  } else if (d == 3) {
    spec.mub_source = MubSource::D3Canonical;
  } else {
    spec.mub_source = MubSource::PrimeWeyl;
  }

  const int given = (!angles.empty()) + (!perms.empty()) + (!matrix_file.empty());
  if (given != 1) {
    throw std::invalid_argument("give exactly one of --angles, --perms, --matrix-file");
  }
  if (!angles.empty()) {
    for (const double a : parse_angles(angles)) {
      spec.rotations.push_back(RotationSpec::from_angle(a));
    }
  } else if (!perms.empty()) {
    for (auto& p : parse_perms(perms)) spec.rotations.push_back(RotationSpec::from_perm(std::move(p)));
  } else {
    const json j = load_json(matrix_file);
    if (!j.is_array()) throw std::invalid_argument("--matrix-file must hold an array of rotation specs");
    for (const auto& r : j) spec.rotations.push_back(rotation_spec_from_json(r));
  }

  spec.L = L != 0 ? L : spec.rotations.size();
  if (spec.L != spec.rotations.size()) {
    throw std::invalid_argument("--L does not match the number of rotation specs");
  }
  spec.validate();

  const WitnessFile wf{spec, build_witness(spec)};
  emit(witness_file_to_json(wf), out_path);
  return kExitOk;
}

// ---- check-state ----------------------------------------------------------

int cmd_check_state(const std::string& state_path, const std::vector<std::string>& witness_paths,
                    std::size_t d1, std::size_t d2, const std::string& out_path) {
  const ComplexMatrix rho = load_state(state_path);
  const BipartiteDims dims = resolve_dims(rho.rows(), d1, d2);

  std::vector<std::pair<std::string, ComplexMatrix>> witnesses;
  for (const auto& path : witness_paths) {
    witnesses.emplace_back(path, witness_file_from_json(load_json(path)).matrix);
  }
  const DetectionReport report = analyze_state(rho, dims, witnesses);
  json j = report_to_json(report);
  j["state"] = state_path;
  emit(j, out_path);
  return report.detected ? kExitDetected : kExitOk;
}

// ---- scan ------------------------------------------------------------------

int cmd_scan(const std::string& state_path, const std::string& family, std::size_t grid,
             const std::string& format, const std::string& out_path) {
  const ComplexMatrix rho = load_state(state_path);
  ScanFamily fam;
  if (family == "phi1") fam = ScanFamily::Angle1;
  else if (family == "phi2") fam = ScanFamily::Angle2;
  else if (family == "phi3") fam = ScanFamily::Angle3;
  else if (family == "phi4") fam = ScanFamily::Angle4;
  else if (family == "full") fam = ScanFamily::Full;
  else throw std::invalid_argument("--family must be phi1..phi4 or full");

  const bool csv = format == "csv";
  if (!csv && format != "json") throw std::invalid_argument("--format must be json or csv");

  const ScanResult res = detection_scan(rho, fam, grid, csv);
  if (csv) {
    if (out_path.empty()) {
      scan_to_csv(res, std::cout);
    } else {
      std::ofstream out(out_path);
      if (!out) throw std::invalid_argument("cannot write " + out_path);
      scan_to_csv(res, out);
      std::cout << "wrote " << out_path << '\n';
    }
  } else {
    json j = scan_to_json(res);
    j["state_tests"] = report_to_json(analyze_state(rho, {3, 3}, {}));
    emit(j, out_path);
  }
  return res.detected ? kExitDetected : kExitOk;
}

// ---- classify ---------------------------------------------------------------

int cmd_classify(const std::string& witness_path, std::size_t d1, std::size_t d2,
                 int restarts, int max_iters, double conv_tol, std::uint64_t seed,
                 const std::string& out_path) {
  const WitnessFile wf = witness_file_from_json(load_json(witness_path));
  const BipartiteDims dims = resolve_dims(wf.matrix.rows(), d1, d2);
  const SeeSawConfig cfg{restarts, max_iters, conv_tol, seed};
  const WitnessClass cls = classify(wf.matrix, dims, cfg);
  json j = classification_to_json(cls, cfg);
  j["witness"] = witness_path;
  emit(j, out_path);
  return kExitOk;
}

// ---- export-mubs -------------------------------------------------------------

int cmd_export_mubs(std::size_t d, const std::string& source, const std::string& out_path) {
  MubFamily f;
  if (source == "d3-canonical" || (source.empty() && d == 3)) {
    if (d != 3) throw std::invalid_argument("d3-canonical needs --d 3");
    f = mub_d3();
  } else if (source == "prime-weyl" || source.empty()) {
    f = mub_from_families(d);
  } else {
    throw std::invalid_argument("--source must be d3-canonical or prime-weyl");
  }
  emit(mubs_to_json(f), out_path);
  return kExitOk;
}

// ---- verify -------------------------------------------------------------------

struct CheckTally {
  int failures = 0;
  void check(const std::string& name, bool ok, double margin) {
    std::cout << (ok ? "pass" : "FAIL") << "  " << name << "  (margin " << margin << ")\n";
    if (!ok) ++failures;
  }
};

int verify_mub_suite(std::size_t d_opt) {
  CheckTally t;
  const std::vector<std::size_t> ds =
      d_opt != 0 ? std::vector<std::size_t>{d_opt} : std::vector<std::size_t>{2, 3, 5, 7};
  for (const std::size_t d : ds) {
    const MubFamily f = mub_from_families(d);
    double worst = 0.0;
    for (std::size_t a = 0; a < f.L; ++a)
      for (std::size_t b = a + 1; b < f.L; ++b)
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t l = 0; l < d; ++l) {
            cplx dot = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
              dot += std::conj(f.bases[a].u(i, k)) * f.bases[b].u(i, l);
            }
            worst = std::max(worst, std::abs(std::norm(dot) - 1.0 / static_cast<double>(d)));
          }
    t.check("weyl-family bases unbiased, d=" + std::to_string(d), verify_mub(f), worst);
  }
  if (d_opt == 0 || d_opt == 3) {
    t.check("canonical quartet unbiased, d=3", verify_mub(mub_d3()), 0.0);
  }
  return t.failures == 0 ? kExitOk : kExitCheckFailed;
}

int verify_weyl_suite(std::size_t d_opt) {
  CheckTally t;
  const std::vector<std::size_t> ds =
      d_opt != 0 ? std::vector<std::size_t>{d_opt} : std::vector<std::size_t>{2, 3, 5};
  for (const std::size_t d : ds) {
    t.check("weyl product/dagger relations, d=" + std::to_string(d),
            weyl_relation_check(d), 0.0);
    double worst = 0.0;
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = 0; l < d; ++l) {
        const ComplexMatrix u = weyl_operator(d, {k, l});
        worst = std::max(worst, max_abs_diff(u * u.dagger(), ComplexMatrix::identity(d)));
      }
    t.check("weyl unitarity, d=" + std::to_string(d), worst < 1e-13, worst);
  }
  if (d_opt == 0 || d_opt == 3) {
    const auto fams = commuting_families(3);
    const std::vector<std::vector<WeylIndex>> expected{
        {{1, 0}, {2, 0}}, {{1, 1}, {2, 2}}, {{1, 2}, {2, 1}}, {{0, 1}, {0, 2}}};
    t.check("commuting families, d=3", fams == expected, 0.0);
  }
  return t.failures == 0 ? kExitOk : kExitCheckFailed;
}

int verify_ball_suite(std::size_t samples, std::uint64_t seed) {
  CheckTally t;
  Rng rng(seed);
  std::cout << "seed " << seed << "\n";
  for (const std::size_t L : {2, 3, 4}) {
    for (int rep = 0; rep < 3; ++rep) {
      TorusPoint tp;
      for (std::size_t i = 0; i < L; ++i) tp.angles.push_back(rng.uniform() * 2.0 * M_PI);
      const MapOperator phi = build_map(torus_spec(tp));
      const MapProbeReport rep_out = map_positivity_probe(phi, samples, rng.next_u64());
      const double margin = rep_out.purity_bound + 1e-10 - rep_out.max_purity;
      t.check("outputs PSD, L=" + std::to_string(L), rep_out.all_psd,
              rep_out.worst_output_min_eig);
      t.check("outputs inside ball, L=" + std::to_string(L), rep_out.all_in_ball, margin);
      if (L == 4) {
        const double sphere_dev =
            std::max(std::abs(rep_out.max_purity - rep_out.purity_bound),
                     std::abs(rep_out.min_purity - rep_out.purity_bound));
        t.check("L=4 outputs on the sphere", sphere_dev < 1e-10, sphere_dev);
      }
    }
  }
  return t.failures == 0 ? kExitOk : kExitCheckFailed;
}

int verify_closedform_suite() {
  CheckTally t;
  for (const std::size_t L : {2, 3, 4}) {
    double worst = 0.0;
    const std::size_t steps = 5;
    std::vector<std::size_t> idx(L, 0);
    while (true) {
      TorusPoint tp;
      for (std::size_t i = 0; i < L; ++i) {
        tp.angles.push_back(2.0 * M_PI * static_cast<double>(idx[i]) / static_cast<double>(steps));
      }
      worst = std::max(worst, max_abs_diff(witness_d3_closed_form(tp),
                                           build_witness(torus_spec(tp))));
      std::size_t pos = 0;
      while (pos < L && ++idx[pos] == steps) idx[pos++] = 0;
      if (pos == L) break;
    }
    t.check("closed form = constructor on 5^" + std::to_string(L) + " grid, L=" +
                std::to_string(L),
            worst < 1e-12, worst);
  }
  return t.failures == 0 ? kExitOk : kExitCheckFailed;
}

int verify_known_values_suite() {
  CheckTally t;
  const ComplexMatrix rho = canonical_rho();
  const TorusPoint flag{{M_PI, M_PI, 0.0, 0.0}};
  const ComplexMatrix w = build_witness(torus_spec(flag));

  const double expectation = witness_expectation(rho, w);
  t.check("flagship expectation -2/15", std::abs(expectation + 2.0 / 15.0) < 1e-12,
          std::abs(expectation + 2.0 / 15.0));

  const ComplexMatrix pt = partial_transpose(rho, {3, 3}, Subsystem::Second);
  const double min_pt = min_eigenvalue(pt);
  t.check("state is PPT", min_pt >= -1e-12, min_pt);

  const double r = realignment_value(rho, {3, 3});
  t.check("realignment value 17/15", std::abs(r - 17.0 / 15.0) < 1e-9,
          std::abs(r - 17.0 / 15.0));

  TorusPoint zero{{0.0, 0.0, 0.0, 0.0}};
  const MapOperator phi = build_map(torus_spec(zero));
  Rng rng(11);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ComplexMatrix x = rng.matrix(3, 3);
    ComplexMatrix expect = ComplexMatrix::identity(3);
    expect *= x.trace();
    expect -= x;
    expect *= 0.5;
    worst = std::max(worst, max_abs_diff(phi.apply(x), expect));
  }
  t.check("identity rotations give the reduction map", worst < 1e-12, worst);
  return t.failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entanglement witnesses from mutually unbiased bases"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "construct a witness and write it as json");
  std::size_t b_d = 3, b_L = 0;
  std::string b_angles, b_perms, b_matrix_file, b_mubs_file, b_out;
  build->add_option("--d", b_d, "local dimension");
  build->add_option("--L", b_L, "number of bases (defaults to the rotation count)");
  build->add_option("--angles", b_angles, "comma list of torus angles (pi, 2pi/3, 0.5, ...)");
  build->add_option("--perms", b_perms, "semicolon-separated permutations, e.g. 1,2,0;0,1,2");
  build->add_option("--matrix-file", b_matrix_file, "json array of rotation specs");
  build->add_option("--mubs-file", b_mubs_file, "json file with custom bases");
  build->add_option("--out", b_out, "output path (stdout when omitted)");

  // check-state
  auto* check = app.add_subcommand("check-state", "run PPT/realignment/witness tests on a state");
  std::string c_state, c_out;
  std::vector<std::string> c_witnesses;
  std::size_t c_d1 = 0, c_d2 = 0;
  check->add_option("--state", c_state, "state json path, or 'canonical'")->required();
  check->add_option("--witness", c_witnesses, "witness json path (repeatable)");
  check->add_option("--d1", c_d1, "first factor dimension");
  check->add_option("--d2", c_d2, "second factor dimension");
  check->add_option("--out", c_out, "output path");

  // scan
  auto* scan = app.add_subcommand("scan", "minimize Tr(rho W) over a torus grid");
  std::string s_state, s_family = "full", s_format = "json", s_out;
  std::size_t s_grid = 24;
  scan->add_option("--state", s_state, "state json path, or 'canonical'")->required();
  scan->add_option("--family", s_family, "phi1|phi2|phi3|phi4|full");
  scan->add_option("--grid", s_grid, "points per angle (default 24)");
  scan->add_option("--format", s_format, "json|csv (csv lists every grid point)");
  scan->add_option("--out", s_out, "output path");

  // classify
  auto* cls = app.add_subcommand("classify", "classify an operator by spectrum and see-saw");
  std::string k_witness, k_out;
  std::size_t k_d1 = 0, k_d2 = 0;
  int k_restarts = 50, k_iters = 200;
  double k_tol = 1e-12;
  std::uint64_t k_seed = default_seed();
  cls->add_option("--witness", k_witness, "witness json path")->required();
  cls->add_option("--d1", k_d1, "first factor dimension");
  cls->add_option("--d2", k_d2, "second factor dimension");
  cls->add_option("--restarts", k_restarts, "see-saw restarts");
  cls->add_option("--max-iters", k_iters, "iteration cap per restart");
  cls->add_option("--conv-tol", k_tol, "convergence tolerance");
  cls->add_option("--seed", k_seed, "rng seed (default from MUBW_SEED)");
  cls->add_option("--out", k_out, "output path");

  // verify
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string v_suite;
  std::size_t v_d = 0, v_samples = 1000;
  std::uint64_t v_seed = default_seed();
  ver->add_option("suite", v_suite, "mub|weyl|ball|closedform|known-values")->required();
  ver->add_option("--d", v_d, "restrict to one dimension");
  ver->add_option("--samples", v_samples, "random samples for the ball suite");
  ver->add_option("--seed", v_seed, "rng seed (default from MUBW_SEED)");

  // export-mubs
  auto* exp = app.add_subcommand("export-mubs", "write a family of bases as json");
  std::size_t e_d = 3;
  std::string e_source, e_out;
  exp->add_option("--d", e_d, "dimension");
  exp->add_option("--source", e_source, "d3-canonical|prime-weyl (default by dimension)");
  exp->add_option("--out", e_out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (build->parsed()) {
      return cmd_build(b_d, b_L, b_angles, b_perms, b_matrix_file, b_mubs_file, b_out);
    }
    if (check->parsed()) return cmd_check_state(c_state, c_witnesses, c_d1, c_d2, c_out);
    if (scan->parsed()) return cmd_scan(s_state, s_family, s_grid, s_format, s_out);
    if (cls->parsed()) {
      return cmd_classify(k_witness, k_d1, k_d2, k_restarts, k_iters, k_tol, k_seed, k_out);
    }
    if (ver->parsed()) {
      if (v_suite == "mub") return verify_mub_suite(v_d);
      if (v_suite == "weyl") return verify_weyl_suite(v_d);
      if (v_suite == "ball") return verify_ball_suite(v_samples, v_seed);
      if (v_suite == "closedform") return verify_closedform_suite();
      if (v_suite == "known-values") return verify_known_values_suite();
      throw std::invalid_argument("unknown suite: " + v_suite);
    }
    if (exp->parsed()) return cmd_export_mubs(e_d, e_source, e_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
