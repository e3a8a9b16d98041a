#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "mubw/blockpos.hpp"
#include "mubw/complex_matrix.hpp"
#include "mubw/detect.hpp"
#include "mubw/mub.hpp"
#include "mubw/witness.hpp"

namespace mubw {

using json = nlohmann::json;

// {"rows": n, "cols": m, "entries": [[re, im], ...]} row-major. Parsers
// reject entry-count mismatches and non-finite values.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

// {"d": d, "bases": [[[re, im], ...vector], ...basis]}. Loading verifies
// the mutually-unbiased invariants.
json mubs_to_json(const MubFamily& f);
MubFamily mubs_from_json(const json& j);

json rotation_spec_to_json(const RotationSpec& r);
RotationSpec rotation_spec_from_json(const json& j);

json witness_spec_to_json(const WitnessSpec& spec);
WitnessSpec witness_spec_from_json(const json& j);

// {"spec": {...}, "matrix": {...}}.
struct WitnessFile {
  WitnessSpec spec;
  ComplexMatrix matrix;
};
json witness_file_to_json(const WitnessFile& w);
WitnessFile witness_file_from_json(const json& j);

json report_to_json(const DetectionReport& r);
json scan_to_json(const ScanResult& r);
void scan_to_csv(const ScanResult& r, std::ostream& os);
json classification_to_json(const WitnessClass& c, const SeeSawConfig& cfg);
json probe_to_json(const MapProbeReport& r);

json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const json& j);

}  // namespace mubw
