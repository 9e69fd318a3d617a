#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gray2/gray.hpp"
#include "gray2/json_io.hpp"
#include "gray2/phi.hpp"
#include "gray2/suites.hpp"

using namespace gray2;

namespace {

// exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 budget exceeded

void emit_poset(const FinPoset& p, const std::string& format) {
  if (format == "json")
    std::cout << poset_to_json(p).dump(2) << '\n';
  else if (format == "dot")
    std::cout << poset_dot(p);
  else
    std::cout << poset_text(p);
}

void emit_cat(const FinCat& c, const std::string& format) {
  if (format == "json")
    std::cout << cat_to_json(c).dump(2) << '\n';
  else if (format == "dot")
    std::cout << cat_dot(c);
  else
    std::cout << cat_text(c);
}

void emit_twocat(const TwoCat& t, const std::string& format) {
  if (format == "json")
    std::cout << twocat_to_json(t).dump(2) << '\n';
  else if (format == "dot")
    std::cout << twocat_dot(t);
  else
    std::cout << twocat_text(t);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ';')) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

// key = value lines; '#' starts a comment. Known keys: bound, budget,
// probes (names separated by ';'), corrupt.
void apply_config_file(const std::string& path, Config& cfg) {
  std::istringstream in(slurp(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "bound")
        cfg.bound = std::stoi(value);
      else if (key == "budget")
        cfg.budget = std::stoll(value);
      else if (key == "probes")
        cfg.probe_names = split_names(value);
      else if (key == "corrupt")
        cfg.corrupt = value == "true" || value == "1";
      else
        throw std::invalid_argument("unknown key \"" + key + "\"");
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact finite-scale calculator for cell shapes, Gray tensor products,\n"
               "their comparison maps, and mate calculus"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  Config cfg;
  int bound_flag = 0;
  long long budget_flag = 0;
  std::vector<std::string> probes_flag;
  bool corrupt_flag = false;
  std::string config_path;
  auto* opt_bound = app.add_option("--bound", bound_flag, "size cap for generated inputs");
  auto* opt_budget =
      app.add_option("--budget", budget_flag, "enumeration budget (GRAY2_BUDGET as fallback)");
  app.add_option("--probes", probes_flag, "probe names, ';' separated")->delimiter(';');
  app.add_flag("--corrupt", corrupt_flag, "inject a known fault before verifying");
  app.add_option("--config", config_path, "key = value configuration file");

  auto* cmd_shuffles = app.add_subcommand("shuffles", "shuffle poset of (k,m) lattice paths");
  int sh_k = 0, sh_m = 0;
  cmd_shuffles->add_option("k", sh_k, "horizontal steps")->required();
  cmd_shuffles->add_option("m", sh_m, "vertical steps")->required();

  auto* cmd_gray = app.add_subcommand("gray", "Gray tensor product of two cell shapes");
  std::string gr_i, gr_j;
  cmd_gray->add_option("I", gr_i, "first shape, like [2](1,0)")->required();
  cmd_gray->add_option("J", gr_j, "second shape")->required();

  auto* cmd_phi = app.add_subcommand("phi", "free 2-category on the (shape, ordinal) grid");
  std::string ph_i;
  int ph_m = 0;
  cmd_phi->add_option("I", ph_i, "cell shape")->required();
  cmd_phi->add_option("m", ph_m, "ordinal length")->required();

  auto* cmd_nu = app.add_subcommand("nu", "comparison map out of the Gray tensor");
  std::string nu_i;
  int nu_m = 0;
  cmd_nu->add_option("I", nu_i, "cell shape")->required();
  cmd_nu->add_option("m", nu_m, "ordinal length")->required();

  auto* cmd_cotensor = app.add_subcommand("cotensor", "cotensor of a realized shape by an ordinal");
  std::string ct_i;
  int ct_n = 0;
  cmd_cotensor->add_option("I", ct_i, "cell shape")->required();
  cmd_cotensor->add_option("n", ct_n, "ordinal length")->required();

  auto* cmd_localize =
      app.add_subcommand("localize", "underlying category of a Gray tensor, 2-cells inverted");
  std::string lo_i, lo_j;
  cmd_localize->add_option("I", lo_i, "first shape")->required();
  cmd_localize->add_option("J", lo_j, "second shape")->required();

  auto* cmd_mates = app.add_subcommand("mates", "adjunctions and mate calculus");
  cmd_mates->require_subcommand(1);
  auto* cmd_find = cmd_mates->add_subcommand("find", "list adjunctions in a two-category");
  std::string find_file;
  cmd_find->add_option("file", find_file, "JSON file with a \"twocat\" entry")->required();
  auto* cmd_mate = cmd_mates->add_subcommand("mate", "mate of a square through two adjunctions");
  std::string mate_file;
  cmd_mate
      ->add_option("file", mate_file,
                   "JSON file with \"twocat\", \"square\", \"left_adjunction\", "
                   "\"right_adjunction\"")
      ->required();

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  cmd_verify->add_option("suite", suite, "segal, graytenscolim, phieq, odot, mates, or all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (const char* env = std::getenv("GRAY2_BUDGET"); env && opt_budget->count() == 0) {
      try {
        cfg.budget = std::stoll(env);
      } catch (const std::exception&) {
        throw std::invalid_argument(std::string("GRAY2_BUDGET is not a number: ") + env);
      }
    }
    if (!config_path.empty()) apply_config_file(config_path, cfg);
    if (opt_bound->count() > 0) cfg.bound = bound_flag;
    if (opt_budget->count() > 0) cfg.budget = budget_flag;
    if (!probes_flag.empty()) cfg.probe_names = probes_flag;
    if (corrupt_flag) cfg.corrupt = true;

    Budget budget(cfg.budget);

    if (cmd_shuffles->parsed()) {
      if (sh_k < 0 || sh_m < 0 || sh_k > cfg.bound || sh_m > cfg.bound)
        throw std::invalid_argument("k and m must lie in 0.." + std::to_string(cfg.bound) +
                                    " (raise with --bound)");
      emit_poset(max_chain_poset(sh_k, sh_m), format);
    } else if (cmd_gray->parsed()) {
      emit_twocat(*gray_colax(parse_theta2(gr_i), parse_theta2(gr_j)), format);
    } else if (cmd_phi->parsed()) {
      emit_twocat(*phi_obj(parse_theta2(ph_i), ph_m), format);
    } else if (cmd_nu->parsed()) {
      if (format == "dot") throw std::invalid_argument("nu has no dot form; use json or text");
      const TwoFunctor n = nu(parse_theta2(nu_i), nu_m);
      if (format == "json")
        std::cout << two_functor_to_json(n).dump(2) << '\n';
      else
        std::cout << two_functor_text(n);
    } else if (cmd_cotensor->parsed()) {
      emit_twocat(*cotensor(realize(parse_theta2(ct_i)), ct_n, &budget), format);
    } else if (cmd_localize->parsed()) {
      emit_cat(localize_2morphisms(*gray_colax(parse_theta2(lo_i), parse_theta2(lo_j))), format);
    } else if (cmd_find->parsed()) {
      if (format == "dot")
        throw std::invalid_argument("mates find has no dot form; use json or text");
      const TwoCatPtr t = parse_find_input(slurp(find_file));
      const std::vector<AdjunctionData> adjs = find_adjunctions(t, &budget);
      if (format == "json") {
        nlohmann::json out;
        out["adjunctions"] = nlohmann::json::array();
        for (const AdjunctionData& a : adjs) out["adjunctions"].push_back(adjunction_to_json(a));
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << adjs.size() << " adjunctions\n";
        for (const AdjunctionData& a : adjs) std::cout << adjunction_text(a);
      }
    } else if (cmd_mate->parsed()) {
      if (format == "dot")
        throw std::invalid_argument("mates mate has no dot form; use json or text");
      const MateInput in = parse_mate_input(slurp(mate_file));
      const Square2 m = mate(in.square, in.left_adj, in.right_adj);
      if (format == "json") {
        nlohmann::json out;
        out["square"] = square_to_json(m);
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << square_text(m);
      }
    } else if (cmd_verify->parsed()) {
      if (format == "dot") throw std::invalid_argument("verify has no dot form; use json or text");
      const auto t0 = std::chrono::steady_clock::now();
      const std::vector<RunReport> reports = run_suite(suite, cfg);
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
      std::cout << (format == "json" ? report_json(reports) : report_text(reports));
      std::cerr << "verify " << suite << ": " << ms << " ms\n";
      for (const RunReport& r : reports)
        if (!r.pass) return 1;
      return 0;
    }
    return 0;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
