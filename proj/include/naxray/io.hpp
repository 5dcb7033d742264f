#pragma once

#include <json.hpp>

#include <string>

#include "naxray/field.hpp"
#include "naxray/plan.hpp"
#include "naxray/reconstruction.hpp"

namespace naxray {

using json = nlohmann::json;

// All documents carry {"format": "naxray/1"}. Complex numbers serialize as
// [re, im]; matrices as row-major nested arrays of such pairs; rationals
// as exact "p/q" strings so geometry survives a round trip bit for bit.
inline constexpr const char* kFormatTag = "naxray/1";

json to_json(const Mat& m);
Mat mat_from_json(const json& j);

json to_json(const LatticeField& f);
LatticeField field_from_json(const json& j);

json to_json(const Sinogram& s);
Sinogram sinogram_from_json(const json& j);

json to_json(const ReconstructionPlan& p);
ReconstructionPlan plan_from_json(const json& j);

json to_json(const ReconReport& r);

// Deterministic serialization: object keys sorted (nlohmann's default
// map), floating-point numbers printed with 17 significant digits so
// equal documents are byte-identical and doubles round-trip exactly.
std::string dump_deterministic(const json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

json load_document(const std::string& path);  // parses and checks the format tag

// FNV-1a 64 over the file bytes; stamps sinograms with the plan identity.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace naxray
