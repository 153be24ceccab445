// Command-line front end: workspace-backed object construction, tensor and
// decomposition queries, enumeration tables, cohomology queries, and the
// verification suites.  All output is canonical JSON (CSV on request),
// byte-deterministic for a fixed workspace and flags.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rigisoc/json_io.hpp"
#include "rigisoc/workspace.hpp"

using namespace rigisoc;

namespace {

struct CliState {
  std::string workspace_path;
  std::optional<Workspace> ws;

  Workspace &workspace() {
    if (!ws) {
      std::string path = workspace_path;
      if (path.empty()) {
        const char *env = std::getenv("RIGISOC_WORKSPACE");
        if (env)
          path = env;
      }
      if (path.empty())
        fail("UsageError",
             "no workspace: pass --workspace or set RIGISOC_WORKSPACE");
      ws = load_workspace_file(path);
    }
    return *ws;
  }
};

json load_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail("ParseError", "cannot open file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception &e) {
    fail("ParseError", std::string("invalid JSON: ") + e.what());
  }
  return j;
}

SkeletonObject resolve_object(CliState &st, const std::string &operand,
                              bool as_file) {
  if (as_file) {
    json j = load_json_file(operand);
    const Level &lvl = st.workspace().level(j.at("level").get<std::string>());
    return object_from_json(j, lvl);
  }
  return st.workspace().object(operand);
}

// Exactly one of a workspace name and a --file path.
SkeletonObject resolve_operand(CliState &st, const std::string &name,
                               const std::string &file) {
  if (name.empty() == file.empty())
    fail("UsageError", "give either an object name or --file, not both");
  return file.empty() ? resolve_object(st, name, false)
                      : resolve_object(st, file, true);
}

void emit(const json &j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(item);
  return out;
}

json decomposition_to_json(const SkeletonObject &X) {
  json parts = json::array();
  for (const auto &[lbl, mult] : decompose(X)) {
    json row = label_row_to_json(lbl);
    json entry{{"label", label_to_json(lbl)}, {"multiplicity", mult}};
    entry["index"] = row["index"];
    entry["s"] = row["s"];
    entry["sigma"] = row["sigma"];
    entry["dim"] = row["dim"];
    parts.push_back(std::move(entry));
  }
  return parts;
}

int run_verify_reports(const std::vector<CheckReport> &reports,
                       const std::string &suite) {
  bool all_pass = true;
  for (const auto &r : reports) {
    emit(check_report_to_json(r));
    all_pass = all_pass && r.pass;
  }
  emit(json{{"suite", suite}, {"pass", all_pass}});
  return all_pass ? 0 : 1;
}

std::vector<CheckReport> descent_suite(const RamificationDatum &d,
                                       const std::string &tag) {
  std::vector<CheckReport> out;
  out.push_back(check_action_homomorphism(d, 2));
  out.push_back(check_lift_independence(d));
  out.push_back(check_canonical_frobenius(d));
  out.push_back(check_mu_cocycle(d));
  for (auto &r : out)
    r.name = tag + "/" + r.name;
  return out;
}

std::vector<CheckReport> transition_suite() {
  std::vector<CheckReport> out;
  {
    RamificationDatum d = ramified_quadratic_datum();
    std::vector<int> id{0, 1};
    TowerDatum trivial_tower =
        make_tower(d, d, make_group_hom(d.gal, d.gal, id));
    CheckReport r = check_transition_scalar(trivial_tower);
    r.name = "identity_tower/" + r.name;
    out.push_back(r);
  }
  {
    CheckReport r = check_transition_scalar(biquadratic_tower());
    r.name = "biquadratic_over_ramified_quadratic/" + r.name;
    out.push_back(r);
  }
  {
    CheckReport r = check_transition_scalar(ramified_quadratic_over_base_tower());
    r.name = "ramified_quadratic_over_base/" + r.name;
    out.push_back(r);
  }
  return out;
}

std::vector<CheckReport> cohomology_suite() {
  std::vector<CheckReport> out;
  {
    KernelReport k = presentation_kernel_check(make_coh_group(2, 2), 2);
    out.push_back(CheckReport{"presentation_kernel(m=2,s=2,N=2)", k.pass,
                              k.pairs, k.counterexample});
  }
  {
    ImageReport r = presentation_image_check(make_coh_group(2, 2), 4);
    out.push_back(CheckReport{"presentation_image(m=2,s=2,N=4)", r.pass,
                              r.members,
                              r.pass ? "" : "missing " + r.missing});
  }
  for (long long m = 1; m <= 3; ++m)
    for (long long s = 1; s <= 3; ++s) {
      BasicCohGroup G = make_coh_group(m, s);
      bool ok = true;
      long long checked = 0;
      for (long long N = 1; N <= 6 && ok; ++N) {
        long long members = static_cast<long long>(
            enumerate_torsion_members(G, N).size());
        long long order = torsion_order(torsion_structure(G, N));
        ++checked;
        ok = members == order;
      }
      out.push_back(CheckReport{
          "torsion_vs_enumeration(m=" + std::to_string(m) +
              ",s=" + std::to_string(s) + ",N<=6)",
          ok, checked, ok ? "" : "order mismatch"});
    }
  return out;
}

std::vector<CheckReport> carry_suite() {
  std::vector<CheckReport> out;
  // Pointwise identity over every value triple with denominator <= 6.
  std::vector<QmodZ> values;
  for (long long q = 1; q <= 6; ++q)
    for (long long p = 0; p < q; ++p)
      if (std::gcd(p, q) == 1)
        values.emplace_back(p, q);
  Level pt = make_level("point", FiniteGroup::trivial(), 60);
  CheckReport r{"carry_cocycle_identity(denom<=6)", true, 0, ""};
  for (const QmodZ &a : values)
    for (const QmodZ &b : values)
      for (const QmodZ &c : values) {
        GradingCharacter fa = constant_character(pt, a);
        GradingCharacter fb = constant_character(pt, b);
        GradingCharacter fc = constant_character(pt, c);
        int lhs = carry_cocycle(fa, fb)[0] +
                  carry_cocycle(add_characters(fa, fb), fc)[0];
        int rhs = carry_cocycle(fb, fc)[0] +
                  carry_cocycle(fa, add_characters(fb, fc))[0];
        ++r.checked;
        if (lhs != rhs) {
          r.pass = false;
          r.counterexample = a.str() + "," + b.str() + "," + c.str();
          out.push_back(r);
          return out;
        }
      }
  out.push_back(r);
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"rigid-isocrystal skeleton calculator"};
  app.require_subcommand(1);
  CliState st;
  app.add_option("--workspace", st.workspace_path,
                 "workspace JSON file (default: $RIGISOC_WORKSPACE)");

  int exit_code = 0;

  // --- level ---------------------------------------------------------------
  auto *cmd_level = app.add_subcommand("level", "show level definitions");
  std::string level_name;
  cmd_level->add_option("name", level_name, "level name (all when omitted)");
  cmd_level->callback([&] {
    Workspace &ws = st.workspace();
    if (!level_name.empty()) {
      const Level &lvl = ws.level(level_name);
      json maps = json::array();
      for (const auto &m : ws.maps)
        if (m.fine.name == lvl.name)
          maps.push_back(
              json{{"coarse", m.coarse.name}, {"proj", m.proj.map}});
      emit(json{{"name", lvl.name},
                {"group", group_to_json(lvl.gal)},
                {"denom", lvl.denom},
                {"maps", std::move(maps)}});
      return;
    }
    json out = json::array();
    for (const auto &[name, lvl] : ws.levels)
      out.push_back(json{{"name", name},
                         {"order", lvl.gal->order()},
                         {"denom", lvl.denom}});
    emit(out);
  });

  // --- object --------------------------------------------------------------
  auto *cmd_object = app.add_subcommand("object", "validate and print an object");
  std::string object_name, object_file;
  cmd_object->add_option("name", object_name, "workspace object name");
  cmd_object->add_option("--file", object_file, "object JSON file");
  cmd_object->callback([&] {
    SkeletonObject X = resolve_operand(st, object_name, object_file);
    json out = object_to_json(X);
    out["fiber_dimension"] = fiber_dimension(X);
    emit(out);
  });

  // --- tensor --------------------------------------------------------------
  auto *cmd_tensor = app.add_subcommand("tensor", "tensor product of two objects");
  std::vector<std::string> tensor_operands;
  std::string tensor_level;
  bool tensor_files = false;
  cmd_tensor->add_option("operands", tensor_operands, "two object names")
      ->expected(2);
  cmd_tensor->add_option("--level", tensor_level,
                         "require both operands at this level");
  cmd_tensor->add_flag("--files", tensor_files, "operands are file paths");
  cmd_tensor->callback([&] {
    SkeletonObject A = resolve_object(st, tensor_operands[0], tensor_files);
    SkeletonObject B = resolve_object(st, tensor_operands[1], tensor_files);
    if (!tensor_level.empty()) {
      const Level &lvl = st.workspace().level(tensor_level);
      require_same_level(A.level, lvl);
      require_same_level(B.level, lvl);
    }
    emit(object_to_json(tensor(A, B)));
  });

  // --- decompose -----------------------------------------------------------
  auto *cmd_decompose =
      app.add_subcommand("decompose", "decompose into simples");
  std::string decompose_name, decompose_file;
  cmd_decompose->add_option("name", decompose_name, "workspace object name");
  cmd_decompose->add_option("--file", decompose_file, "object JSON file");
  cmd_decompose->callback([&] {
    SkeletonObject X = resolve_operand(st, decompose_name, decompose_file);
    emit(json{{"level", X.level.name},
              {"parts", decomposition_to_json(X)}});
  });

  // --- newton --------------------------------------------------------------
  auto *cmd_newton = app.add_subcommand("newton", "Newton datum and basicness");
  std::string newton_name, newton_file;
  cmd_newton->add_option("name", newton_name, "workspace object name");
  cmd_newton->add_option("--file", newton_file, "object JSON file");
  cmd_newton->callback([&] {
    SkeletonObject X = resolve_operand(st, newton_name, newton_file);
    json out = object_to_json(newton(X));
    out["is_basic"] = is_basic(X);
    emit(out);
  });

  // --- enumerate -----------------------------------------------------------
  auto *cmd_enumerate =
      app.add_subcommand("enumerate", "table of simple labels at a level");
  std::string enum_level;
  long long enum_max_denom = 1;
  long long enum_dim_bound = 0;
  long long enum_cap = 50'000'000;
  bool enum_csv = false;
  cmd_enumerate->add_option("--level", enum_level, "level name")->required();
  cmd_enumerate->add_option("--max-denom", enum_max_denom,
                            "maximum value denominator")
      ->required();
  cmd_enumerate->add_option("--dim-bound", enum_dim_bound,
                            "keep only labels with dim <= bound");
  cmd_enumerate->add_option("--cap", enum_cap, "enumeration state cap");
  cmd_enumerate->add_flag("--csv", enum_csv, "CSV output");
  cmd_enumerate->callback([&] {
    const Level &lvl = st.workspace().level(enum_level);
    std::vector<SimpleLabel> labels =
        enumerate_simples(lvl, enum_max_denom, enum_cap);
    long long orbit_count = static_cast<long long>(labels.size());
    long long burnside = burnside_simple_count(lvl, enum_max_denom);
    if (enum_dim_bound > 0) {
      std::erase_if(labels, [&](const SimpleLabel &l) {
        return l.dim > enum_dim_bound;
      });
    }
    if (enum_csv) {
      std::cout << "rep,index,s,sigma,dim\n";
      for (const auto &lbl : labels)
        std::cout << join_vals(lbl.orbit.rep().vals, ";") << ","
                  << lbl.H.index() << "," << lbl.s << "," << lbl.Sigma.str()
                  << "," << lbl.dim << "\n";
      std::cout << "# orbit_count=" << orbit_count
                << " burnside_count=" << burnside << " agree="
                << (orbit_count == burnside ? "true" : "false") << "\n";
      return;
    }
    json rows = json::array();
    for (const auto &lbl : labels)
      rows.push_back(label_row_to_json(lbl));
    emit(json{{"level", lvl.name},
              {"max_denom", enum_max_denom},
              {"rows", std::move(rows)},
              {"orbit_count", orbit_count},
              {"burnside_count", burnside},
              {"agree", orbit_count == burnside}});
  });

  // --- cohom ---------------------------------------------------------------
  auto *cmd_cohom = app.add_subcommand("cohom", "basic cohomology queries");
  long long coh_m = 1, coh_s = 1;
  cmd_cohom->add_option("--m", coh_m, "degree m = [E:F]")->required();
  cmd_cohom->add_option("--s", coh_s, "rank s")->required();
  cmd_cohom->require_subcommand(1);

  auto *coh_member = cmd_cohom->add_subcommand("member", "membership test");
  std::vector<std::string> member_vals;
  coh_member->add_option("values", member_vals, "tuple entries p/q")
      ->expected(-1);
  coh_member->callback([&] {
    std::vector<QmodZ> t;
    for (const auto &v : member_vals)
      t.push_back(QmodZ::parse(v));
    emit(json{{"member", contains(make_coh_group(coh_m, coh_s), t)}});
  });

  auto *coh_torsion =
      cmd_cohom->add_subcommand("torsion", "N-torsion invariant factors");
  long long torsion_n = 1;
  coh_torsion->add_option("--n", torsion_n, "torsion bound N")->required();
  coh_torsion->callback([&] {
    auto factors = torsion_structure(make_coh_group(coh_m, coh_s), torsion_n);
    emit(json{{"invariant_factors", factors},
              {"order", torsion_order(factors)}});
  });

  auto *coh_map =
      cmd_cohom->add_subcommand("map", "explicit presentation map");
  std::string map_a, map_b;
  coh_map->add_option("--a", map_a, "comma list of a_i (mod s)")->required();
  coh_map->add_option("--b", map_b, "comma list of b_i, sum zero")
      ->required();
  coh_map->callback([&] {
    BasicCohGroup G = make_coh_group(coh_m, coh_s);
    std::vector<long long> a;
    for (const auto &s : split_list(map_a))
      a.push_back(std::stoll(s));
    std::vector<Rat> b;
    for (const auto &s : split_list(map_b))
      b.push_back(Rat::parse(s));
    BasicCohClass c =
        presentation_map(make_presentation_element(G, a, b), G);
    emit(json{{"class", vals_to_json(c.tuple)}});
  });

  // --- isoc ----------------------------------------------------------------
  auto *cmd_isoc =
      app.add_subcommand("isoc", "classical isocrystal to rigid skeleton");
  std::string isoc_file, isoc_level;
  cmd_isoc->add_option("--file", isoc_file, "isocrystal JSON")->required();
  cmd_isoc->add_option("--level", isoc_level, "target level")->required();
  cmd_isoc->callback([&] {
    IsocrystalDatum d = isocrystal_from_json(load_json_file(isoc_file));
    const Level &lvl = st.workspace().level(isoc_level);
    emit(object_to_json(isoc_to_rigisoc(d, lvl)));
  });

  // --- verify --------------------------------------------------------------
  auto *cmd_verify = app.add_subcommand("verify", "run an invariant suite");
  std::string suite;
  std::string verify_datum;
  cmd_verify->add_option("suite", suite,
                         "descent | transition | cohomology | carry | all")
      ->required();
  cmd_verify->add_option("--datum", verify_datum,
                         "restrict descent to one bundled datum");
  cmd_verify->callback([&] {
    std::vector<CheckReport> reports;
    auto add_descent = [&] {
      if (!verify_datum.empty()) {
        auto more = descent_suite(bundled_datum(verify_datum), verify_datum);
        reports.insert(reports.end(), more.begin(), more.end());
        return;
      }
      for (const auto &[name, d] : bundled_data()) {
        auto more = descent_suite(d, name);
        reports.insert(reports.end(), more.begin(), more.end());
      }
    };
    if (suite == "descent") {
      add_descent();
    } else if (suite == "transition") {
      reports = transition_suite();
    } else if (suite == "cohomology") {
      reports = cohomology_suite();
    } else if (suite == "carry") {
      reports = carry_suite();
    } else if (suite == "all") {
      add_descent();
      auto t = transition_suite();
      reports.insert(reports.end(), t.begin(), t.end());
      auto c = cohomology_suite();
      reports.insert(reports.end(), c.begin(), c.end());
      auto k = carry_suite();
      reports.insert(reports.end(), k.begin(), k.end());
    } else {
      fail("UsageError", "unknown suite '" + suite + "'");
    }
    exit_code = run_verify_reports(reports, suite);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) { // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << json{{"error", "UsageError"}, {"detail", e.what()}}.dump()
              << "\n";
    return 2;
  } catch (const Error &e) {
    std::cerr << json{{"error", e.code()}, {"detail", e.detail()}}.dump()
              << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << json{{"error", "InternalError"}, {"detail", e.what()}}.dump()
              << "\n";
    return 2;
  }
  return exit_code;
}
