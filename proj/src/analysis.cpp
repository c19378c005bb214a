#include "skb/analysis.hpp"

#include <sstream>

#include "skb/structure.hpp"

namespace skb {

AnalysisReport analyze(const SkewBrace& b, const CheckOptions& opts) {
  AnalysisReport r;
  r.order = b.order();
  r.name = b.name();
  r.flags = classify(b, opts);
  r.perfect = is_perfect_brace(b);
  r.simple = is_simple_brace(b);
  r.quasi_simple = is_quasi_simple_brace(b, opts);
  r.socle_size = socle(b).size();
  r.center_size = center_brace(b).size();
  r.square_size = square(b).size();
  r.square_op_size = square_op(b).size();
  r.commutator_ideal_size = commutator_ideal(b).size();

  for (int s : {r.socle_size, r.center_size, r.square_size, r.square_op_size,
                r.commutator_ideal_size})
    if (s <= 0 || r.order % s != 0)
      fail(Errc::internal_inconsistency,
           "ideal size " + std::to_string(s) + " does not divide the order");
  if (r.flags.trivial != (r.square_size == 1) ||
      r.flags.almost_trivial != (r.square_op_size == 1) ||
      r.perfect != (r.commutator_ideal_size == r.order))
    fail(Errc::internal_inconsistency, "analysis flags disagree with sizes");
  return r;
}

nlohmann::json analysis_to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["format"] = "analysis/v1";
  j["order"] = r.order;
  j["name"] = r.name;
  j["flags"] = {{"two_sided", r.flags.two_sided},
                {"trivial", r.flags.trivial},
                {"almost_trivial", r.flags.almost_trivial},
                {"left_brace", r.flags.left_brace},
                {"abelian", r.flags.abelian},
                {"perfect", r.perfect},
                {"simple", r.simple},
                {"quasi_simple", r.quasi_simple}};
  j["modes"] = {{"two_sided", r.flags.two_sided_mode},
                {"provenance", r.flags.provenance_note}};
  j["sizes"] = {{"socle", r.socle_size},
                {"center", r.center_size},
                {"square", r.square_size},
                {"square_op", r.square_op_size},
                {"commutator_ideal", r.commutator_ideal_size}};
  return j;
}

std::string analysis_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "brace " << (r.name.empty() ? "(unnamed)" : r.name) << " of order "
     << r.order << "\n";
  os << "  two_sided=" << r.flags.two_sided << " (" << r.flags.two_sided_mode
     << ")"
     << " trivial=" << r.flags.trivial
     << " almost_trivial=" << r.flags.almost_trivial
     << " left_brace=" << r.flags.left_brace << " abelian=" << r.flags.abelian
     << "\n";
  os << "  perfect=" << r.perfect << " simple=" << r.simple
     << " quasi_simple=" << r.quasi_simple << "\n";
  os << "  |Soc|=" << r.socle_size << " |Z|=" << r.center_size
     << " |B2|=" << r.square_size << " |B2op|=" << r.square_op_size
     << " |[B,B]|=" << r.commutator_ideal_size << "\n";
  return os.str();
}

}  // namespace skb
