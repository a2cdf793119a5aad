#pragma once

#include <string>

#include "json.hpp"

#include "bilform/bounds.hpp"
#include "bilform/partition.hpp"
#include "bilform/resolving.hpp"

namespace bilform {

// JSON interchange formats. Objects serialize with sorted keys, so identical
// inputs always produce byte-identical artifacts; volatile data (timings,
// worker counts) never enters the canonical forms.

nlohmann::json field_to_json(const Field& f);
FieldPtr field_from_json(const nlohmann::json& j);

nlohmann::json mat_to_json(const Mat& m);  // array of row arrays
Mat mat_from_json(FieldPtr field, std::uint32_t rows, std::uint32_t cols,
                  const nlohmann::json& j);

nlohmann::json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(FieldPtr field, const nlohmann::json& j);

nlohmann::json landmark_set_to_json(const LandmarkSet& set,
                                    const ConstructionContext* ctx = nullptr);
LandmarkSet landmark_set_from_json(const nlohmann::json& j);

// One base-q digit string per vertex, row-major from the top left (equal to
// the base-q numeral of the vertex index). Supports q <= 36.
std::string landmarks_to_csv(const LandmarkSet& set);

nlohmann::json certificate_to_json(const GraphSpec& spec, std::size_t landmark_count,
                                   const Certificate& cert, bool include_stats);

nlohmann::json partition_to_json(const STPartition& p);
STPartition partition_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const Witness& w);

nlohmann::json bounds_row_to_json(const BoundsRow& row);
nlohmann::json bounds_rows_to_json(std::span<const BoundsRow> rows);
std::string bounds_rows_to_csv(std::span<const BoundsRow> rows);

std::string dump_canonical(const nlohmann::json& j);  // dump(2) + newline

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace bilform
