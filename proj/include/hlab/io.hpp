#pragma once

#include <string>

#include <json.hpp>

#include "hlab/arrangement.hpp"
#include "hlab/cone.hpp"
#include "hlab/hirzform.hpp"

namespace hlab {

using Json = nlohmann::json;

Json read_json_file(const std::string& path);
/// File contents as bytes; InputError if unreadable.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// 64-bit FNV-1a digest, lowercase hex.
std::string fnv1a_hex(const std::string& bytes);

Source source_from_json(const Json& j);
Json source_to_json(const Source& s);

VecQ weights_from_json(const Json& j);
Json weights_to_json(const VecQ& a);

MatQ symmetric_matrix_from_json(const Json& j);
Json symmetric_matrix_to_json(const MatQ& m);

Json to_json(const Rational& r);
Json to_json(const VecQ& v);
Json to_json(const MatQ& m);
Json to_json(ElementSet s);
Json to_json(const Flat& f);
Json to_json(const Inertia& i);
Json to_json(const FlatSlack& f);
Json to_json(const StabilityReport& r);
Json to_json(const HirzebruchVerdict& v);
Json to_json(const SimplexMinimum& m);

}  // namespace hlab
