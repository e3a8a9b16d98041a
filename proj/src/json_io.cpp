#include "mubw/json_io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace mubw {

namespace {

json complex_to_json(cplx v) { return json::array({v.real(), v.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("complex entry must be a [re, im] pair");
  }
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw std::invalid_argument("complex entry must be finite");
  }
  return {re, im};
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) entries.push_back(complex_to_json(m.data()[i]));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw std::invalid_argument("matrix json needs rows, cols, entries");
  }
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix json: empty dimensions");
  if (!entries.is_array() || entries.size() != rows * cols) {
    throw std::invalid_argument("matrix json: entry count does not match rows*cols");
  }
  std::vector<cplx> data;
  data.reserve(rows * cols);
  for (const auto& e : entries) data.push_back(complex_from_json(e));
  return ComplexMatrix(rows, cols, std::move(data));
}

json mubs_to_json(const MubFamily& f) {
  json bases = json::array();
  for (const auto& b : f.bases) {
    json basis = json::array();
    for (std::size_t k = 0; k < f.d; ++k) {
      json vec = json::array();
      for (std::size_t i = 0; i < f.d; ++i) vec.push_back(complex_to_json(b.u(i, k)));
      basis.push_back(std::move(vec));
    }
    bases.push_back(std::move(basis));
  }
  return json{{"d", f.d}, {"bases", std::move(bases)}};
}

MubFamily mubs_from_json(const json& j) {
  if (!j.contains("d") || !j.contains("bases")) {
    throw std::invalid_argument("mubs json needs d and bases");
  }
  MubFamily f;
  f.d = j.at("d").get<std::size_t>();
  const auto& bases = j.at("bases");
  if (!bases.is_array() || bases.empty()) throw std::invalid_argument("mubs json: no bases");
  for (const auto& basis : bases) {
    if (!basis.is_array() || basis.size() != f.d) {
      throw std::invalid_argument("mubs json: basis must hold d vectors");
    }
    ComplexMatrix u(f.d, f.d);
    for (std::size_t k = 0; k < f.d; ++k) {
      const auto& vec = basis[k];
      if (!vec.is_array() || vec.size() != f.d) {
        throw std::invalid_argument("mubs json: vector must have d components");
      }
      for (std::size_t i = 0; i < f.d; ++i) u(i, k) = complex_from_json(vec[i]);
    }
    f.bases.push_back({std::move(u)});
  }
  f.L = f.bases.size();
  if (!verify_mub(f)) {
    throw std::invalid_argument("mubs json: bases are not mutually unbiased");
  }
  return f;
}

json rotation_spec_to_json(const RotationSpec& r) {
  switch (r.kind) {
    case RotationSpec::Kind::Angle:
      return json{{"angle", r.angle}};
    case RotationSpec::Kind::Permutation:
      return json{{"perm", r.perm}};
    case RotationSpec::Kind::Matrix: {
      json rows = json::array();
      for (std::size_t i = 0; i < r.matrix.d; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < r.matrix.d; ++j) row.push_back(r.matrix(i, j));
        rows.push_back(std::move(row));
      }
      return json{{"matrix", std::move(rows)}};
    }
  }
  throw std::logic_error("rotation spec: unknown kind");
}

RotationSpec rotation_spec_from_json(const json& j) {
  if (j.contains("angle")) return RotationSpec::from_angle(j.at("angle").get<double>());
  if (j.contains("perm")) {
    return RotationSpec::from_perm(j.at("perm").get<std::vector<std::size_t>>());
  }
  if (j.contains("matrix")) {
    const auto& rows = j.at("matrix");
    if (!rows.is_array() || rows.empty()) {
      throw std::invalid_argument("rotation json: matrix must be an array of rows");
    }
    const std::size_t d = rows.size();
    AxisRotation m{d, std::vector<double>(d * d)};
    for (std::size_t i = 0; i < d; ++i) {
      if (!rows[i].is_array() || rows[i].size() != d) {
        throw std::invalid_argument("rotation json: matrix must be square");
      }
      for (std::size_t jx = 0; jx < d; ++jx) {
        const double v = rows[i][jx].get<double>();
        if (!std::isfinite(v)) throw std::invalid_argument("rotation json: non-finite entry");
        m(i, jx) = v;
      }
    }
    return RotationSpec::from_matrix(std::move(m));
  }
  throw std::invalid_argument("rotation json: need one of angle, perm, matrix");
}

namespace {
std::string mub_source_name(MubSource s) {
  switch (s) {
    case MubSource::D3Canonical: return "d3-canonical";
    case MubSource::PrimeWeyl: return "prime-weyl";
    case MubSource::Custom: return "file";
  }
  return "file";
}

MubSource mub_source_from_name(const std::string& s) {
  if (s == "d3-canonical") return MubSource::D3Canonical;
  if (s == "prime-weyl") return MubSource::PrimeWeyl;
  if (s == "file") return MubSource::Custom;
  throw std::invalid_argument("unknown mub source: " + s);
}
}  // namespace

json witness_spec_to_json(const WitnessSpec& spec) {
  json rotations = json::array();
  for (const auto& r : spec.rotations) rotations.push_back(rotation_spec_to_json(r));
  json out{{"d", spec.d},
           {"L", spec.L},
           {"mub_source", mub_source_name(spec.mub_source)},
           {"rotations", std::move(rotations)}};
  if (spec.mub_source == MubSource::Custom) out["mubs"] = mubs_to_json(spec.custom_mubs);
  return out;
}

WitnessSpec witness_spec_from_json(const json& j) {
  WitnessSpec spec;
  spec.d = j.at("d").get<std::size_t>();
  spec.L = j.at("L").get<std::size_t>();
  spec.mub_source = mub_source_from_name(j.at("mub_source").get<std::string>());
  for (const auto& r : j.at("rotations")) spec.rotations.push_back(rotation_spec_from_json(r));
  if (spec.mub_source == MubSource::Custom) spec.custom_mubs = mubs_from_json(j.at("mubs"));
  spec.validate();
  return spec;
}

json witness_file_to_json(const WitnessFile& w) {
  return json{{"spec", witness_spec_to_json(w.spec)}, {"matrix", matrix_to_json(w.matrix)}};
}

WitnessFile witness_file_from_json(const json& j) {
  WitnessFile out{witness_spec_from_json(j.at("spec")), matrix_from_json(j.at("matrix"))};
  if (out.matrix.rows() != out.spec.d * out.spec.d || !out.matrix.is_square()) {
    throw std::invalid_argument("witness json: matrix dimension does not match spec");
  }
  return out;
}

json report_to_json(const DetectionReport& r) {
  json values = json::array();
  for (const auto& [id, v] : r.witness_values) {
    json entry{{"id", id}, {"value", v}};
    entry["detects"] = v < -kDetectionTol;
    entry["inconclusive"] = v >= -kDetectionTol && v < 0.0;
    values.push_back(std::move(entry));
  }
  return json{{"ppt", r.ppt},
              {"realignment", r.realignment},
              {"realignment_detects", r.realignment > 1.0 + 1e-9},
              {"witness_values", std::move(values)},
              {"purity", r.purity},
              {"in_ball", r.in_ball},
              {"detected", r.detected}};
}

namespace {
std::string family_name(ScanFamily f) {
  switch (f) {
    case ScanFamily::Angle1: return "phi1";
    case ScanFamily::Angle2: return "phi2";
    case ScanFamily::Angle3: return "phi3";
    case ScanFamily::Angle4: return "phi4";
    case ScanFamily::Full: return "full";
  }
  return "full";
}
}  // namespace

json scan_to_json(const ScanResult& r) {
  return json{{"family", family_name(r.family)},
              {"grid", r.points_per_angle},
              {"min_value", r.min_value},
              {"argmin", r.argmin.angles},
              {"detected", r.detected},
              {"inconclusive", r.inconclusive}};
}

void scan_to_csv(const ScanResult& r, std::ostream& os) {
  os << "phi1,phi2,phi3,phi4,value\n";
  char buf[64];
  for (const auto& s : r.samples) {
    for (std::size_t i = 0; i < 4; ++i) {
      const double a = i < s.point.angles.size() ? s.point.angles[i] : 0.0;
      std::snprintf(buf, sizeof buf, "%.17g,", a);
      os << buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g\n", s.value);
    os << buf;
  }
}

json classification_to_json(const WitnessClass& c, const SeeSawConfig& cfg) {
  json x = json::array(), y = json::array();
  for (const auto& e : c.x) x.push_back(complex_to_json(e));
  for (const auto& e : c.y) y.push_back(complex_to_json(e));
  return json{{"label", to_string(c.label)},
              {"min_eig", c.min_eig},
              {"min_product_value", c.min_product_value},
              {"x", std::move(x)},
              {"y", std::move(y)},
              {"seed", cfg.seed},
              {"restarts", cfg.restarts},
              {"max_iters", cfg.max_iters},
              {"conv_tol", cfg.conv_tol}};
}

json probe_to_json(const MapProbeReport& r) {
  return json{{"samples", r.samples},
              {"worst_output_min_eig", r.worst_output_min_eig},
              {"max_purity", r.max_purity},
              {"min_purity", r.min_purity},
              {"purity_bound", r.purity_bound},
              {"max_trace_dev", r.max_trace_dev},
              {"all_psd", r.all_psd},
              {"all_in_ball", r.all_in_ball}};
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed json in " + path.string() + ": " + e.what());
  }
  return j;
}

void save_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace mubw
