#pragma once

#include <string>

#include <json.hpp>

#include "skb/brace.hpp"

namespace skb {

/// Flags, verification modes and the standard ideal sizes of a brace.
/// Consistency of the flag logic (e.g. trivial implies two_sided) and
/// Lagrange divisibility of the sizes are asserted at construction.
struct AnalysisReport {
  int order = 0;
  std::string name;
  BraceFlags flags;
  bool perfect = false;
  bool simple = false;
  bool quasi_simple = false;
  int socle_size = 0;
  int center_size = 0;
  int square_size = 0;
  int square_op_size = 0;
  int commutator_ideal_size = 0;
};

AnalysisReport analyze(const SkewBrace& b, const CheckOptions& opts = {});

nlohmann::json analysis_to_json(const AnalysisReport& r);
std::string analysis_to_text(const AnalysisReport& r);

}  // namespace skb
