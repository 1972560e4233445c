#pragma once

// Command-line front end: argument parsing, dispatch, and report rendering.
// Requires CLI11 and nlohmann/json.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "glfix/action.hpp"
#include "glfix/error.hpp"
#include "glfix/field.hpp"
#include "glfix/invariant.hpp"
#include "glfix/irreducible.hpp"
#include "glfix/psubgroup.hpp"
#include "glfix/text.hpp"
#include "glfix/verify.hpp"

namespace glfix::cli {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct Command {
  std::vector<std::string> path;  // e.g. {"count", "translation"}
  std::optional<std::uint32_t> p;
  std::uint32_t k = 1;
  std::optional<std::string> modulus;
  std::optional<std::string> subspace;
  std::optional<std::string> scalar;
  std::optional<std::string> matrix;
  std::optional<std::string> generators;
  std::optional<std::string> poly;
  std::optional<std::uint64_t> degree;
  std::optional<std::uint64_t> max_degree;
  std::optional<std::uint64_t> max_q;
  std::string mode = "projective";
  bool brute_force = false;
  std::uint64_t cap = kDefaultCap;
  bool json = false;

  std::string name() const {
    std::string out;
    for (const auto& s : path) out += (out.empty() ? "" : " ") + s;
    return out;
  }
  friend bool operator==(const Command&, const Command&) = default;
};

// Thrown by parse_command for --help; carries the help text.
struct HelpRequested {
  std::string text;
};

namespace detail {

struct Leaf {
  std::vector<std::string> path;
  const char* description;
  std::vector<std::string> options;  // a leading '!' marks a required option
};

inline const std::vector<Leaf>& leaves() {
  static const std::vector<Leaf> table{
      {{"count", "translation"}, "count irreducibles invariant under x -> x+s, s in S",
       {"!p", "k", "modulus", "!subspace", "!degree", "brute-force", "cap", "json"}},
      {{"count", "homothety"}, "count irreducibles with f(ax) = f(x)",
       {"!p", "k", "modulus", "!scalar", "!degree", "brute-force", "cap", "json"}},
      {{"count", "psubgroup"}, "count irreducibles fixed by a p-subgroup of GL_2",
       {"!p", "k", "modulus", "!generators", "!degree", "brute-force", "cap", "json"}},
      {{"enumerate", "translation"}, "list the S-translation-invariant irreducibles",
       {"!p", "k", "modulus", "!subspace", "!degree", "cap", "json"}},
      {{"enumerate", "homothety"}, "list the irreducibles with f(ax) = f(x)",
       {"!p", "k", "modulus", "!scalar", "!degree", "cap", "json"}},
      {{"decompose", "translation"}, "write g = f(P_S(x))", {"!p", "k", "modulus", "!subspace", "!poly", "json"}},
      {{"decompose", "homothety"}, "write f = g(x^k - 1)", {"!p", "k", "modulus", "!scalar", "!poly", "json"}},
      {{"act"}, "apply (cx+d)^n f((ax+b)/(cx+d))", {"!p", "k", "modulus", "!matrix", "!poly", "json"}},
      {{"fixed"}, "test whether matrices fix a monic irreducible",
       {"!p", "k", "modulus", "matrix", "generators", "!poly", "mode", "json"}},
      {{"pgl-scan"}, "irreducibles fixed by all of PGL_2(F_q)",
       {"!p", "k", "modulus", "!max-degree", "mode", "cap", "json"}},
      {{"psubgroup", "conjugate"}, "conjugate a p-subgroup into the translations",
       {"!p", "k", "modulus", "!generators", "json"}},
      {{"verify", "all"}, "run the verification suite", {"max-q", "max-degree", "cap", "json"}},
  };
  return table;
}

inline const char* group_description(const std::string& name) {
  if (name == "count") return "count invariant irreducibles by formula";
  if (name == "enumerate") return "list invariant irreducibles";
  if (name == "decompose") return "recover the outer factor of an invariant polynomial";
  if (name == "psubgroup") return "p-subgroups of GL_2(F_q)";
  return "consistency checks";
}

inline void add_option(CLI::App* app, Command& cmd, const std::string& spec) {
  const bool required = spec.front() == '!';
  const std::string name = required ? spec.substr(1) : spec;
  CLI::Option* opt = nullptr;
  if (name == "p") opt = app->add_option("--p", cmd.p, "field characteristic");
  if (name == "k") opt = app->add_option("--k", cmd.k, "extension degree (default 1)");
  if (name == "modulus") opt = app->add_option("--modulus", cmd.modulus, "monic irreducible in t over F_p");
  if (name == "subspace") opt = app->add_option("--subspace", cmd.subspace, "generators of S, e.g. 1,t");
  if (name == "scalar") opt = app->add_option("--scalar", cmd.scalar, "homothety scalar a");
  if (name == "degree") opt = app->add_option("--degree", cmd.degree, "polynomial degree n");
  if (name == "max-degree") opt = app->add_option("--max-degree", cmd.max_degree, "largest degree to scan");
  if (name == "max-q") opt = app->add_option("--max-q", cmd.max_q, "largest field order (default 5)");
  if (name == "matrix") opt = app->add_option("--matrix", cmd.matrix, "matrix [[a,b],[c,d]]");
  if (name == "generators") opt = app->add_option("--generators", cmd.generators, "matrices separated by ';'");
  if (name == "poly") opt = app->add_option("--poly", cmd.poly, "polynomial in x");
  if (name == "mode")
    opt = app->add_option("--mode", cmd.mode, "strict or projective (default)")
              ->check(CLI::IsMember({"strict", "projective"}));
  if (name == "brute-force") opt = app->add_flag("--brute-force", cmd.brute_force, "also count by exhaustive search");
  if (name == "cap") opt = app->add_option("--cap", cmd.cap, "enumeration size limit (default 2^22)");
  if (name == "json") opt = app->add_flag("--json", cmd.json, "print the JSON report");
  if (!opt) throw std::logic_error("unknown option " + name);
  if (required) opt->required();
}

}  // namespace detail

// Parses arguments (without the program name).
inline Command parse_command(const std::vector<std::string>& args) {
  Command cmd;
  CLI::App app{"Irreducible polynomials fixed by subgroups of GL_2(F_q)", "glfix"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  std::map<std::string, CLI::App*> groups;
  std::vector<std::pair<CLI::App*, const detail::Leaf*>> leaf_apps;
  for (const auto& leaf : detail::leaves()) {
    CLI::App* parent = &app;
    if (leaf.path.size() == 2) {
      auto& g = groups[leaf.path[0]];
      if (!g) {
        g = app.add_subcommand(leaf.path[0], detail::group_description(leaf.path[0]));
        g->require_subcommand(1);
      }
      parent = g;
    }
    CLI::App* sub = parent->add_subcommand(leaf.path.back(), leaf.description);
    for (const auto& o : leaf.options) detail::add_option(sub, cmd, o);
    leaf_apps.emplace_back(sub, &leaf);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto& [group_name, group] : groups)
      if (group->parsed()) target = group;
    for (const auto& [sub, leaf] : leaf_apps)
      if (sub->parsed()) target = sub;
    throw HelpRequested{target->help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::CallForVersion&) {
    throw HelpRequested{std::string(kVersion) + "\n"};
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::InvalidArgument, e.what());
  }
  for (const auto& [sub, leaf] : leaf_apps)
    if (sub->parsed()) cmd.path = leaf->path;
  return cmd;
}

// Arguments that parse back to cmd.
inline std::vector<std::string> format_command(const Command& cmd) {
  std::vector<std::string> out = cmd.path;
  const Command defaults;
  auto opt = [&](const char* flag, const auto& value) {
    // --flag=value keeps values such as "-1" from reading as options.
    if (value) {
      if constexpr (std::is_same_v<std::decay_t<decltype(*value)>, std::string>)
        out.push_back(std::string(flag) + "=" + *value);
      else
        out.push_back(std::string(flag) + "=" + std::to_string(*value));
    }
  };
  opt("--p", cmd.p);
  if (cmd.k != defaults.k) opt("--k", std::optional<std::uint32_t>(cmd.k));
  opt("--modulus", cmd.modulus);
  opt("--subspace", cmd.subspace);
  opt("--scalar", cmd.scalar);
  opt("--degree", cmd.degree);
  opt("--max-degree", cmd.max_degree);
  opt("--max-q", cmd.max_q);
  opt("--matrix", cmd.matrix);
  opt("--generators", cmd.generators);
  opt("--poly", cmd.poly);
  if (cmd.mode != defaults.mode) opt("--mode", std::optional<std::string>(cmd.mode));
  if (cmd.brute_force) out.push_back("--brute-force");
  if (cmd.cap != defaults.cap) opt("--cap", std::optional<std::uint64_t>(cmd.cap));
  if (cmd.json) out.push_back("--json");
  return out;
}

struct Report {
  Json doc;

  // False when any check failed or any count mismatched.
  bool ok() const {
    for (const auto& c : doc.at("checks"))
      if (!c.at("passed").get<bool>()) return false;
    return true;
  }
};

inline int exit_status(const Report& r) { return r.ok() ? 0 : 1; }

namespace detail {

inline FieldSpec field_of(const Command& cmd) {
  if (!cmd.p) throw Error(ErrorCode::InvalidArgument, "--p is required");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (cmd.modulus) modulus = parse_modulus(*cmd.p, *cmd.modulus);
  return make_field(*cmd.p, cmd.k, modulus);
}

inline Json params_of(const Command& cmd, const std::optional<FieldSpec>& F) {
  Json j = Json::object();
  if (F) {
    j["p"] = F->p();
    j["k"] = F->k();
    j["q"] = F->q();
    j["modulus"] = format_modulus(*F);
  }
  if (cmd.subspace) j["subspace"] = *cmd.subspace;
  if (cmd.scalar) j["scalar"] = *cmd.scalar;
  if (cmd.matrix) j["matrix"] = *cmd.matrix;
  if (cmd.generators) j["generators"] = *cmd.generators;
  if (cmd.poly) j["poly"] = *cmd.poly;
  if (cmd.degree) j["degree"] = *cmd.degree;
  if (cmd.max_degree) j["max_degree"] = *cmd.max_degree;
  if (cmd.max_q) j["max_q"] = *cmd.max_q;
  if (cmd.path.front() == "fixed" || cmd.path.front() == "pgl-scan") j["mode"] = cmd.mode;
  if (cmd.path.front() == "count") j["brute_force"] = cmd.brute_force;
  j["cap"] = cmd.cap;
  return j;
}

inline Json poly_list(const std::vector<Poly>& polys) {
  Json arr = Json::array();
  for (const auto& f : polys) arr.push_back(format_poly(f));
  return arr;
}

inline Json check(const std::string& name, bool passed, const std::string& detail = {}) {
  Json j{{"name", name}, {"passed", passed}};
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

inline void count_result(const CountReport& r, Json& result, Json& checks) {
  result["family"] = r.family;
  result["group_order"] = r.group_order;
  result["degree"] = r.degree;
  result["formula_count"] = r.formula_count;
  if (r.brute_force_count) result["brute_force_count"] = *r.brute_force_count;
  if (r.match) {
    result["match"] = *r.match;
    checks.push_back(check("formula_count == brute_force_count", *r.match));
  }
  if (r.composition_count) {
    result["composition_count"] = *r.composition_count;
    result["composition_match"] = *r.composition_match;
    checks.push_back(check("formula_count == composition_count", *r.composition_match));
  }
}

inline FixMode mode_of(const Command& cmd) { return cmd.mode == "strict" ? FixMode::Strict : FixMode::Projective; }

}  // namespace detail

inline Report run(const Command& cmd) {
  if (cmd.path.empty()) throw Error(ErrorCode::InvalidArgument, "no subcommand");
  const std::string name = cmd.name();
  Json result = Json::object();
  Json checks = Json::array();
  std::optional<FieldSpec> field;

  if (name == "verify all") {
    const std::uint64_t max_q = cmd.max_q.value_or(5);
    const std::uint64_t max_degree = cmd.max_degree.value_or(6);
    Json criteria = Json::array();
    for (const auto& c : verify::verify_all(max_q, max_degree, cmd.cap)) {
      Json items = Json::array();
      for (const auto& k : c.checks) {
        items.push_back(detail::check(k.name, k.passed, k.detail));
        checks.push_back(detail::check(c.id + ": " + k.name, k.passed, k.detail));
      }
      criteria.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed()}, {"checks", items}});
    }
    result["criteria"] = criteria;
  } else {
    field = detail::field_of(cmd);
    const FieldSpec& F = *field;
    if (name == "count translation") {
      const auto S = parse_subspace(F, *cmd.subspace);
      detail::count_result(count_translation_invariant(S, *cmd.degree, cmd.brute_force, cmd.cap), result, checks);
      result["subspace_basis"] = format_subspace(S);
    } else if (name == "count homothety") {
      const auto a = parse_element(F, *cmd.scalar);
      detail::count_result(count_homothety_invariant(a, *cmd.degree, cmd.brute_force, cmd.cap), result, checks);
    } else if (name == "count psubgroup") {
      const auto gens = parse_generators(F, *cmd.generators);
      const auto H = PSubgroup::closure(F, gens);
      detail::count_result(count_fixed_by_p_subgroup(H, *cmd.degree, cmd.brute_force, cmd.cap), result, checks);
      result["subspace_basis"] = format_subspace(conjugate_to_translations(H).translations);
    } else if (name == "enumerate translation") {
      const auto S = parse_subspace(F, *cmd.subspace);
      const auto polys = enumerate_translation_invariant(S, *cmd.degree, cmd.cap);
      const auto expected = translation_invariant_formula(F, S.dimension(), *cmd.degree);
      result["count"] = polys.size();
      result["polynomials"] = detail::poly_list(polys);
      checks.push_back(detail::check("count == formula_count", polys.size() == expected,
                                     "formula " + std::to_string(expected)));
    } else if (name == "enumerate homothety") {
      const auto a = parse_element(F, *cmd.scalar);
      const auto polys = enumerate_homothety_invariant(a, *cmd.degree, cmd.cap);
      const auto expected = homothety_invariant_formula(F, element_order(a), *cmd.degree);
      result["count"] = polys.size();
      result["polynomials"] = detail::poly_list(polys);
      checks.push_back(detail::check("count == formula_count", polys.size() == expected,
                                     "formula " + std::to_string(expected)));
    } else if (name == "decompose translation") {
      const auto S = parse_subspace(F, *cmd.subspace);
      const auto g = parse_poly(F, *cmd.poly);
      const auto P_S = subspace_polynomial(S);
      const auto f = decompose_translation_invariant(g, S);
      result["subspace_polynomial"] = format_poly(P_S);
      result["outer"] = format_poly(f);
      checks.push_back(detail::check("outer(P_S(x)) == input", compose(f, P_S) == g));
    } else if (name == "decompose homothety") {
      const auto a = parse_element(F, *cmd.scalar);
      const auto f = parse_poly(F, *cmd.poly);
      const auto P_a = homothety_polynomial(a);
      const auto g = decompose_homothety(f, a);
      result["order"] = element_order(a);
      result["homothety_polynomial"] = format_poly(P_a);
      result["outer"] = format_poly(g);
      checks.push_back(detail::check("outer(x^k - 1) == input", compose(g, P_a) == f));
    } else if (name == "act") {
      const auto A = parse_matrix(F, *cmd.matrix);
      const auto f = parse_poly(F, *cmd.poly);
      const auto g = act(A, f);
      result["image"] = format_poly(g);
      result["monic_image"] = format_poly(normalize_monic(g));
    } else if (name == "fixed") {
      if (cmd.matrix.has_value() == cmd.generators.has_value())
        throw Error(ErrorCode::InvalidArgument, "fixed takes exactly one of --matrix and --generators");
      const auto f = parse_poly(F, *cmd.poly);
      const auto mats = cmd.matrix ? std::vector<Mat2>{parse_matrix(F, *cmd.matrix)} : parse_generators(F, *cmd.generators);
      result["fixed"] = fixed_by_set(f, mats, detail::mode_of(cmd));
      Json images = Json::array();
      for (const auto& A : mats) images.push_back(format_poly(act(A, f)));
      result["images"] = images;
    } else if (name == "pgl-scan") {
      const auto found = pgl_fixed_scan(F, *cmd.max_degree, detail::mode_of(cmd), cmd.cap);
      result["group_order"] = std::uint64_t(F.q()) * F.q() * F.q() - F.q();
      result["count"] = found.size();
      result["polynomials"] = detail::poly_list(found);
    } else if (name == "psubgroup conjugate") {
      const auto gens = parse_generators(F, *cmd.generators);
      const auto H = PSubgroup::closure(F, gens);
      const auto c = conjugate_to_translations(H);
      const Mat2 Ainv = c.conjugator.inverse();
      bool unitriangular = true;
      for (const auto& E : H.elements()) unitriangular = unitriangular && (Ainv * E * c.conjugator).is_upper_unitriangular();
      result["order"] = H.order();
      result["conjugator"] = format_matrix(c.conjugator);
      result["subspace_basis"] = format_subspace(c.translations);
      result["dimension"] = c.translations.dimension();
      checks.push_back(detail::check("A^-1 E A is unitriangular for every E in H", unitriangular));
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown command '" + name + "'");
    }
  }

  Report r;
  r.doc = Json{{"version", kVersion},
               {"command", name},
               {"params", detail::params_of(cmd, field)},
               {"result", result},
               {"checks", checks}};
  return r;
}

inline Json error_document(const Command* cmd, const Error& e) {
  Json err{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (const auto* se = dynamic_cast<const SyntaxError*>(&e)) err["position"] = se->position();
  return Json{{"version", kVersion}, {"command", cmd ? cmd->name() : ""}, {"error", err}};
}

namespace detail {

inline std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace detail

// Human-readable rendering of a report.
inline std::string render_table(const Report& r) {
  std::ostringstream out;
  const auto& d = r.doc;
  out << d.at("command").get<std::string>() << "\n";
  for (const auto& [key, v] : d.at("params").items()) out << "  " << key << ": " << detail::scalar_text(v) << "\n";
  for (const auto& [key, v] : d.at("result").items()) {
    if (key == "criteria") continue;
    if (v.is_array()) {
      out << key << " (" << v.size() << "):\n";
      for (const auto& item : v) out << "  " << detail::scalar_text(item) << "\n";
    } else {
      out << key << ": " << detail::scalar_text(v) << "\n";
    }
  }
  if (d.at("result").contains("criteria")) {
    for (const auto& c : d.at("result").at("criteria")) {
      out << (c.at("passed").get<bool>() ? "PASS " : "FAIL ") << c.at("id").get<std::string>() << "  "
          << c.at("title").get<std::string>() << "\n";
      for (const auto& k : c.at("checks")) {
        out << "    " << (k.at("passed").get<bool>() ? "ok   " : "FAIL ") << k.at("name").get<std::string>();
        if (k.contains("detail")) out << "  [" << k.at("detail").get<std::string>() << "]";
        out << "\n";
      }
    }
  } else {
    for (const auto& k : d.at("checks"))
      out << (k.at("passed").get<bool>() ? "ok   " : "FAIL ") << k.at("name").get<std::string>() << "\n";
  }
  return out.str();
}

// Full CLI behavior: 0 on success, 1 if any check fails, 2 on error.
inline int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<Command> cmd;
  bool json = std::find(args.begin(), args.end(), "--json") != args.end();
  try {
    cmd = parse_command(args);
    json = cmd->json;
    const Report r = run(*cmd);
    out << (json ? r.doc.dump(2) + "\n" : render_table(r));
    return exit_status(r);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const Error& e) {
    if (json)
      out << error_document(cmd ? &*cmd : nullptr, e).dump(2) << "\n";
    else
      err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace glfix::cli
