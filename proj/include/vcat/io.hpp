#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "vcat/coalgebra.hpp"
#include "vcat/quantale.hpp"
#include "vcat/vcat.hpp"

namespace vcat::io {

using json = nlohmann::ordered_json;

json load_json(const std::filesystem::path& path);

// Named quantales: boolean-2, lawvere, ultrametric, chain-N, chain-N-eK.
qptr named_quantale(const std::string& name);
// A name, a path (relative to base), or an inline description.
qptr quantale_from_json(const json& j, const std::filesystem::path& base = {});
json quantale_to_json(const quantale& q);

space space_from_json(const json& j, const std::filesystem::path& base = {});
json space_to_json(const space& x, const json& meta = nullptr);

preorder preorder_from_json(const json& j);
json preorder_to_json(const preorder& p);

machine machine_from_json(const json& j, const std::filesystem::path& base = {});
kripke kripke_from_json(const json& j);

std::string format_table(const space& x);
std::string format_matrix_table(const quantale& q, const std::vector<std::string>& labels, const std::vector<elem>& dist);

} // namespace vcat::io
