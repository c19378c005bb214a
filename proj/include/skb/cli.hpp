#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skb {

/// Batch front door. Commands: validate, analyze, decompose,
/// construct {triv|atriv|exactfact|extraspecial|central-product|example},
/// enumerate, isocheck. Reports are JSON on `out`; diagnostics with a
/// machine-readable code go to `err`.
/// Exit status: 0 success / verdict true, 1 verdict false, 2 input error,
/// 3 internal inconsistency or violated conclusion.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace skb
