#pragma once

#include <string>

#include <json.hpp>

#include "skb/brace.hpp"
#include "skb/group.hpp"

namespace skb {

/// {"format":"group-table/v1","order":n,"op":[[...]],"name":...}
/// Row-major, 0-based, identity 0 after validation.
nlohmann::json group_to_json(const Group& g);
Group group_from_json(const nlohmann::json& j, const CheckOptions& opts = {});
Group load_group(const std::string& path, const CheckOptions& opts = {});
void save_group(const Group& g, const std::string& path);

/// Dense format {"format":"skewbrace-table/v1","order":n,"add":..,"mul":..}
/// up to the dense cap; braces built as central products serialize as
/// {"format":"skewbrace-centralproduct/v1","left":..,"right":..,
///  "left_ideal":[..],"right_ideal":[..],"alpha":[[i,j],..]} instead.
/// The loader runs full validation (dense) or the sampled checks (factored).
nlohmann::json brace_to_json(const SkewBrace& b);
SkewBrace brace_from_json(const nlohmann::json& j, const CheckOptions& opts = {});
SkewBrace load_brace(const std::string& path, const CheckOptions& opts = {});
void save_brace(const SkewBrace& b, const std::string& path);

/// Witness files {"format":"morphism/v1","map":[...]}.
nlohmann::json morphism_to_json(const BraceMorphism& m);
std::vector<Elem> morphism_map_from_json(const nlohmann::json& j);

}  // namespace skb
