#include "skb/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "skb/analysis.hpp"
#include "skb/central_product.hpp"
#include "skb/constructions.hpp"
#include "skb/enumeration.hpp"
#include "skb/io.hpp"
#include "skb/structure.hpp"

namespace skb {

namespace {

using nlohmann::json;

std::vector<Elem> parse_elem_list(const std::string& text) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(static_cast<Elem>(std::stol(item)));
  return out;
}

AlphaMap parse_alpha(const std::string& text) {
  AlphaMap out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t sep = item.find("->");
    std::size_t skip = 2;
    if (sep == std::string::npos) {
      sep = item.find(":");
      skip = 1;
    }
    if (sep == std::string::npos) {
      sep = item.find("→");  // also accept the arrow glyph
      skip = 3;
    }
    if (sep == std::string::npos)
      fail(Errc::format_error, "alpha entries look like 'i->j'");
    out.push_back({static_cast<Elem>(std::stol(item.substr(0, sep))),
                   static_cast<Elem>(std::stol(item.substr(sep + skip)))});
  }
  return out;
}

std::vector<std::vector<int>> parse_form(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<int> r;
    std::stringstream rs(row);
    std::string entry;
    while (std::getline(rs, entry, ','))
      if (!entry.empty()) r.push_back(static_cast<int>(std::stol(entry)));
    rows.push_back(std::move(r));
  }
  return rows;
}

// --group arguments accept a file path or a builtin name.
Group group_arg(const std::string& spec, const CheckOptions& opts) {
  if (std::filesystem::exists(spec)) return load_group(spec, opts);
  return builtin_group(spec);
}

void emit_brace(const SkewBrace& b, const std::string& out_path,
                std::ostream& out) {
  if (out_path.empty())
    out << brace_to_json(b).dump(1) << "\n";
  else
    save_brace(b, out_path);
}

json decomposition_to_json(const DecompositionReport& r) {
  json j;
  j["format"] = "decomposition/v1";
  j["verdict"] = r.verdict();
  j["square_order"] = r.square.size();
  j["square_op_order"] = r.square_op.size();
  j["intersection_order"] = r.internal.intersection.size();
  j["conditions"] = {{"sum_is_whole", r.internal.sum_is_whole},
                     {"additive_commuting", r.internal.additive_commuting},
                     {"mixed_stars_vanish", r.internal.mixed_stars_vanish},
                     {"intersection_central", r.internal.intersection_central}};
  j["components"] = {
      {"square",
       {{"almost_trivial", r.square_almost_trivial},
        {"additive_perfect", r.square_additive_perfect}}},
      {"square_op",
       {{"trivial", r.square_op_trivial},
        {"additive_perfect", r.square_op_additive_perfect}}}};
  j["additive_group_perfect"] = r.additive_group_perfect;
  j["square_star_square"] = r.square_star_square;
  j["isomorphism_verified"] = r.iso_verified;
  return j;
}

struct CliConfig {
  CheckOptions checks;
  int iso_cap = kDefaultIsoOrderCap;
  std::string format = "json";
};

int dispatch(CLI::App& app, const CliConfig& cfg, std::ostream& out) {
  const CheckOptions& opts = cfg.checks;

  if (auto* cmd = app.get_subcommand("validate"); cmd->parsed()) {
    std::string path = cmd->get_option("file")->as<std::string>();
    bool as_group = cmd->get_option("--group")->as<bool>();
    json j;
    if (as_group) {
      Group g = load_group(path, opts);
      j = {{"valid", true}, {"kind", "group"}, {"order", g.order()},
           {"name", g.name()}};
    } else {
      SkewBrace b = load_brace(path, opts);
      j = {{"valid", true}, {"kind", "skewbrace"}, {"order", b.order()},
           {"name", b.name()}};
    }
    out << j.dump(1) << "\n";
    return 0;
  }

  if (auto* cmd = app.get_subcommand("analyze"); cmd->parsed()) {
    SkewBrace b = load_brace(cmd->get_option("file")->as<std::string>(), opts);
    AnalysisReport r = analyze(b, opts);
    if (cfg.format == "text")
      out << analysis_to_text(r);
    else
      out << analysis_to_json(r).dump(1) << "\n";
    return 0;
  }

  if (auto* cmd = app.get_subcommand("decompose"); cmd->parsed()) {
    SkewBrace b = load_brace(cmd->get_option("file")->as<std::string>(), opts);
    DecompositionReport r = decompose_perfect_two_sided(b, opts);
    json j = decomposition_to_json(r);
    if (cfg.format == "text") {
      out << "verdict: " << (r.verdict() ? "true" : "false") << "\n"
          << "components: |B2|=" << r.square.size()
          << " |B2op|=" << r.square_op.size()
          << " |intersection|=" << r.internal.intersection.size() << "\n";
    } else {
      out << j.dump(1) << "\n";
    }
    return r.verdict() ? 0 : 1;
  }

  if (auto* cmd = app.get_subcommand("construct"); cmd->parsed()) {
    std::string out_path = cmd->get_option("--out")->as<std::string>();
    if (auto* sub = cmd->get_subcommand("triv"); sub->parsed()) {
      emit_brace(triv(group_arg(sub->get_option("--group")->as<std::string>(), opts)),
                 out_path, out);
      return 0;
    }
    if (auto* sub = cmd->get_subcommand("atriv"); sub->parsed()) {
      emit_brace(atriv(group_arg(sub->get_option("--group")->as<std::string>(), opts)),
                 out_path, out);
      return 0;
    }
    if (auto* sub = cmd->get_subcommand("exactfact"); sub->parsed()) {
      Group g = group_arg(sub->get_option("--group")->as<std::string>(), opts);
      ElementSet h = ElementSet::from_elements(
          g.order(), parse_elem_list(sub->get_option("--h")->as<std::string>()));
      ElementSet k = ElementSet::from_elements(
          g.order(), parse_elem_list(sub->get_option("--k")->as<std::string>()));
      emit_brace(exact_factorization_brace(g, h, k), out_path, out);
      return 0;
    }
    if (auto* sub = cmd->get_subcommand("extraspecial"); sub->parsed()) {
      BilinearFormSpec spec;
      spec.p = sub->get_option("--p")->as<int>();
      spec.form = parse_form(sub->get_option("--form")->as<std::string>());
      spec.d = static_cast<int>(spec.form.size());
      emit_brace(extraspecial_brace(spec).brace, out_path, out);
      return 0;
    }
    if (auto* sub = cmd->get_subcommand("central-product"); sub->parsed()) {
      CentralProductSpec spec;
      spec.b1 = load_brace(sub->get_option("--left")->as<std::string>(), opts);
      spec.b2 = load_brace(sub->get_option("--right")->as<std::string>(), opts);
      spec.i1 = ElementSet::from_elements(
          spec.b1.order(),
          parse_elem_list(sub->get_option("--left-ideal")->as<std::string>()));
      spec.i2 = ElementSet::from_elements(
          spec.b2.order(),
          parse_elem_list(sub->get_option("--right-ideal")->as<std::string>()));
      spec.alpha = parse_alpha(sub->get_option("--alpha")->as<std::string>());
      emit_brace(external_central_product(spec, opts).product, out_path, out);
      return 0;
    }
    if (auto* sub = cmd->get_subcommand("example"); sub->parsed()) {
      std::string which = sub->get_option("which")->as<std::string>();
      if (which == "a5c5")
        emit_brace(example_a5_factorization(), out_path, out);
      else if (which == "sl25lift")
        emit_brace(example_sl25_lift(), out_path, out);
      else
        fail(Errc::unknown_name, "examples: a5c5, sl25lift");
      return 0;
    }
    fail(Errc::format_error, "construct needs a sub-command");
  }

  if (auto* cmd = app.get_subcommand("enumerate"); cmd->parsed()) {
    Group g = group_arg(cmd->get_option("--additive-group")->as<std::string>(), opts);
    int cap = cmd->get_option("--cap")->as<int>();
    std::string dir = cmd->get_option("--out")->as<std::string>();
    std::vector<SkewBrace> classes = enumerate_braces_on(g, cap);
    json manifest;
    manifest["format"] = "enumeration-manifest/v1";
    manifest["additive_group"] = g.name();
    manifest["classes"] = json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      std::string file;
      if (!dir.empty()) {
        std::filesystem::create_directories(dir);
        std::ostringstream fname;
        fname << "brace_" << i << ".json";
        file = (std::filesystem::path(dir) / fname.str()).string();
        save_brace(classes[i], file);
      }
      AnalysisReport r = analyze(classes[i], opts);
      json row = analysis_to_json(r);
      row["file"] = file;
      manifest["classes"].push_back(std::move(row));
    }
    if (!dir.empty()) {
      std::ofstream mf(std::filesystem::path(dir) / "manifest.json");
      mf << manifest.dump(1) << "\n";
    }
    out << manifest.dump(1) << "\n";
    return 0;
  }

  if (auto* cmd = app.get_subcommand("isocheck"); cmd->parsed()) {
    SkewBrace a = load_brace(cmd->get_option("left")->as<std::string>(), opts);
    SkewBrace b = load_brace(cmd->get_option("right")->as<std::string>(), opts);
    BraceIsoOptions iso;
    iso.order_cap = cfg.iso_cap;
    std::vector<Elem> witness;
    std::string witness_path = cmd->get_option("--witness")->as<std::string>();
    if (!witness_path.empty()) {
      std::ifstream wf(witness_path);
      if (!wf) fail(Errc::format_error, "cannot open '" + witness_path + "'");
      try {
        witness = morphism_map_from_json(json::parse(wf));
      } catch (const json::parse_error& e) {
        fail(Errc::format_error, std::string("witness parse error: ") + e.what());
      }
      iso.candidate = &witness;
    }
    std::optional<BraceMorphism> found = find_brace_isomorphism(a, b, iso);
    json j;
    j["found"] = found.has_value();
    if (found) j["map"] = found->map;
    out << j.dump(1) << "\n";
    return found ? 0 : 1;
  }

  fail(Errc::format_error, "no command given (try --help)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"skewbrace: a workbench for finite skew braces"};
  app.require_subcommand(0, 1);

  CliConfig cfg;
  app.add_option("--seed", cfg.checks.seed, "seed for sampled checks");
  app.add_option("--spot-checks", cfg.checks.samples,
                 "sample count for lazy-backend checks");
  app.add_option("--max-iso-order", cfg.iso_cap, "isomorphism search cap");
  app.add_option("--format", cfg.format, "report format: json|text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* validate = app.add_subcommand("validate", "validate a brace (or group) file");
  validate->add_option("file", "input file")->required();
  validate->add_flag("--group", "treat the input as a group file");

  auto* analyze_cmd = app.add_subcommand("analyze", "flags and ideal sizes");
  analyze_cmd->add_option("file", "brace file")->required();

  auto* decompose = app.add_subcommand(
      "decompose", "the central-product decomposition of a perfect two-sided brace");
  decompose->add_option("file", "brace file")->required();

  auto* construct = app.add_subcommand("construct", "build braces");
  construct->require_subcommand(0, 1);
  construct->add_option("--out", "output file (stdout when omitted)");
  auto* c_triv = construct->add_subcommand("triv", "trivial brace over a group");
  c_triv->add_option("--group", "group file or builtin name")->required();
  auto* c_atriv = construct->add_subcommand("atriv", "almost trivial brace");
  c_atriv->add_option("--group", "group file or builtin name")->required();
  auto* c_exact = construct->add_subcommand("exactfact", "exact factorization brace");
  c_exact->add_option("--group", "group file or builtin name")->required();
  c_exact->add_option("--h", "H subgroup elements, comma separated")->required();
  c_exact->add_option("--k", "K subgroup elements, comma separated")->required();
  auto* c_extra = construct->add_subcommand("extraspecial", "extraspecial p-brace");
  c_extra->add_option("--p", "prime")->required();
  c_extra->add_option("--form", "bilinear form rows 'a,b;c,d'")->required();
  auto* c_cp = construct->add_subcommand("central-product", "external central product");
  c_cp->add_option("--left", "left brace file")->required();
  c_cp->add_option("--right", "right brace file")->required();
  c_cp->add_option("--left-ideal", "central ideal of the left factor")->required();
  c_cp->add_option("--right-ideal", "central ideal of the right factor")->required();
  c_cp->add_option("--alpha", "amalgamation map 'i->j,...'")->required();
  auto* c_example = construct->add_subcommand("example", "named example braces");
  c_example->add_option("which", "a5c5 | sl25lift")->required();

  auto* enumerate = app.add_subcommand("enumerate", "braces on an additive group");
  enumerate->add_option("--additive-group", "group file or builtin name")->required();
  enumerate->add_option("--cap", "order cap")->default_val(16);
  enumerate->add_option("--out", "output directory");

  auto* isocheck = app.add_subcommand("isocheck", "search or verify a brace isomorphism");
  isocheck->add_option("left", "first brace file")->required();
  isocheck->add_option("right", "second brace file")->required();
  isocheck->add_option("--witness", "candidate morphism file to verify");

  std::vector<const char*> argv;
  argv.push_back("skewbrace");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    return dispatch(app, cfg, out);
  } catch (const Error& e) {
    err << json{{"error", errc_name(e.code())}, {"message", e.what()}}.dump()
        << "\n";
    return e.is_internal() ? 3 : 2;
  } catch (const std::exception& e) {
    err << json{{"error", "InternalInconsistency"}, {"message", e.what()}}.dump()
        << "\n";
    return 3;
  }
}

}  // namespace skb
