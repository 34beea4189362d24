// Command-line surface: lemma verification campaigns over parameter grids,
// table reproduction, graph export, and single-query computation, with
// machine-readable JSON reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gk/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

json report_json(const gk::VerificationReport& r) {
  json j;
  j["lemma"] = r.lemma;
  j["grid"] = r.grid;
  j["checks"] = r.checks;
  j["status"] = r.pass() ? "pass" : "fail";
  j["failures"] = json::array();
  for (const auto& f : r.failures)
    j["failures"].push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
  j["notes"] = r.notes;
  return j;
}

json descriptor_json(const gk::GroupDescriptor& d) {
  json j;
  j["name"] = d.name();
  j["family"] = d.family == gk::Family::LinearUnitary    ? "linear-unitary"
                : d.family == gk::Family::Symplectic     ? "symplectic"
                : d.family == gk::Family::OddOrthogonal  ? "odd-orthogonal"
                                                         : "even-orthogonal";
  j["sign"] = std::string(1, gk::sign_char(d.sign));
  j["n"] = d.n;
  j["q"] = d.q;
  j["p"] = d.p;
  j["f"] = d.f;
  j["dim"] = gk::dim_of(d);
  j["in_theorem_range"] = gk::in_theorem_range(d);
  return j;
}

json coclique_json(const gk::CocliqueReport& r) {
  json j;
  j["indices"] = r.indices;
  j["size"] = r.size;
  j["includes_char"] = r.includes_char;
  j["source"] =
      r.source == gk::CocliqueReport::Source::ExactSearch ? "exact-search" : "table-formula";
  return j;
}

json elimination_json(const gk::EliminationOutcome& out) {
  json j;
  if (const auto* rep = std::get_if<gk::ContradictionReport>(&out)) {
    j["pair"] = {{"L", rep->L.name()}, {"S", rep->S.name()}};
    j["pattern"] = rep->pattern;
    j["witnesses"] = rep->witnesses;
    j["narrative"] = json::array();
    for (const auto& f : rep->narrative) {
      json e;
      e["fact"] = f.fact;
      e["source-lemma"] = f.source;
      if (f.assumed) e["assumed"] = true;
      j["narrative"].push_back(e);
    }
    j["verified"] = rep->verified;
  } else {
    j["eliminated"] = false;
    j["reason"] = std::get<gk::NotEliminated>(out).reason;
  }
  return j;
}

json graph_json(const gk::GroupDescriptor& d) {
  auto gd = gk::make_group_data(d);
  json j;
  j["group"] = descriptor_json(d);
  j["t"] = gd.zt.t;
  j["vertices"] = json::array();
  for (int i : gd.g.verts) {
    json v;
    v["i"] = i;
    v["phi"] = gk::phi_of_index(i, d);
    v["large"] = gd.zt.zeta.at(i) == gd.zt.t;
    v["t_r"] = gd.zt.zeta.at(i);
    j["vertices"].push_back(v);
  }
  j["characteristic"] = d.p;
  json edges = json::array();
  for (size_t a = 0; a < gd.g.verts.size(); ++a) {
    for (size_t b = a + 1; b < gd.g.verts.size(); ++b)
      if (gd.g.adj[a][b]) edges.push_back({gd.g.verts[a], gd.g.verts[b]});
    if (gd.g.adj[a][size_t(gd.g.char_id())]) edges.push_back({gd.g.verts[a], 0});
  }
  j["edges"] = edges;
  return j;
}

std::string graph_dot(const gk::GroupDescriptor& d) {
  auto gd = gk::make_group_data(d);
  std::ostringstream os;
  os << "graph \"" << d.name() << "\" {\n";
  os << "  node [shape=circle];\n";
  os << "  p [label=\"p=" << d.p << "\", shape=doublecircle];\n";
  for (int i : gd.g.verts) {
    os << "  i" << i << " [label=\"" << i << "\", phi=" << gk::phi_of_index(i, d)
       << ", large=" << (gd.zt.zeta.at(i) == gd.zt.t ? "true" : "false") << "];\n";
  }
  for (size_t a = 0; a < gd.g.verts.size(); ++a) {
    for (size_t b = a + 1; b < gd.g.verts.size(); ++b)
      if (gd.g.adj[a][b]) os << "  i" << gd.g.verts[a] << " -- i" << gd.g.verts[b] << ";\n";
    if (gd.g.adj[a][size_t(gd.g.char_id())]) os << "  i" << gd.g.verts[a] << " -- p;\n";
  }
  os << "}\n";
  return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text << std::endl;
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw std::runtime_error("cannot open output file " + out_path);
  os << text << '\n';
}

// The optional config file is a flat key = value list whose keys are flag
// names of the chosen subcommand; explicit command-line flags win.
std::vector<std::string> inject_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string file;
  std::vector<std::string> kept;
  for (size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config" && k + 1 < args.size()) {
      file = args[k + 1];
      ++k;
    } else if (args[k].rfind("--config=", 0) == 0) {
      file = args[k].substr(9);
    } else {
      kept.push_back(args[k]);
    }
  }
  if (file.empty()) return kept;
  std::ifstream is(file);
  if (!is) throw std::domain_error("cannot read config file " + file);
  auto trim = [](std::string v) {
    size_t a = v.find_first_not_of(" \t\r");
    size_t b = v.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : v.substr(a, b - a + 1);
  };
  std::vector<std::string> conf;
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::domain_error("config line without '=': " + line);
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    conf.push_back("--" + key);
    if (!value.empty()) conf.push_back(value);
  }
  if (kept.empty()) return conf;
  kept.insert(kept.begin() + 1, conf.begin(), conf.end());
  return kept;
}

std::vector<std::pair<gk::Family, gk::Sign>> parse_families(const std::string& spec) {
  if (spec == "all" || spec.empty()) return {};
  std::vector<std::pair<gk::Family, gk::Sign>> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "L+")
      out.push_back({gk::Family::LinearUnitary, gk::Sign::Plus});
    else if (tok == "L-")
      out.push_back({gk::Family::LinearUnitary, gk::Sign::Minus});
    else if (tok == "S")
      out.push_back({gk::Family::Symplectic, gk::Sign::Plus});
    else if (tok == "O")
      out.push_back({gk::Family::OddOrthogonal, gk::Sign::Plus});
    else if (tok == "O+")
      out.push_back({gk::Family::EvenOrthogonal, gk::Sign::Plus});
    else if (tok == "O-")
      out.push_back({gk::Family::EvenOrthogonal, gk::Sign::Minus});
    else
      throw CLI::ValidationError("--families", "unknown family token '" + tok + "'");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arithmetic of prime graphs of finite simple classical groups"};
  app.require_subcommand(1);

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run lemma verification campaigns");
  std::vector<std::string> lemmas;
  bool all = false;
  std::string families_spec = "all";
  gk::GridSpec grid;
  std::string json_out;
  verify->add_option("--lemma", lemmas, "lemma ids (see --list)");
  verify->add_flag("--all", all, "run the full acceptance campaign");
  bool list_only = false;
  verify->add_flag("--list", list_only, "list available lemma ids");
  verify->add_option("--families", families_spec, "comma list of L+,L-,S,O,O+,O- (default all)");
  verify->add_option("--nmin", grid.n_min, "grid rank floor (clamped per table)");
  verify->add_option("--nmax", grid.n_max, "grid rank ceiling");
  verify->add_option("--qs", grid.qs, "field sizes");
  verify->add_option("--amax", grid.amax, "base range for arithmetic lemmas");
  verify->add_option("--imax", grid.imax, "index range for arithmetic lemmas");
  verify->add_option("--nsieve", grid.nmax, "sieve bound for intervalprime");
  verify->add_option("--bmax", grid.bmax, "endpoint bound for etacount");
  verify->add_option("--workers", grid.workers, "worker count (default 1)");
  verify->add_option("--json", json_out, "write the JSON report stream to a file ('-' = stdout)");
  std::string config_help;
  verify->add_option("--config", config_help, "key = value file whose keys are flag names");
  for (auto* o : verify->get_options())
    if (o->get_type_size_max() == 1)
      o->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  // query -------------------------------------------------------------------
  auto* query = app.add_subcommand("query", "single-descriptor invariants");
  std::string q_desc, q_what = "t";
  query->add_option("descriptor", q_desc, "group descriptor, e.g. L45+(q=9)")->required();
  query->add_option("what", q_what, "t | cocliques | zeta | graph | bigk | pexp");

  // eliminate ---------------------------------------------------------------
  auto* elim = app.add_subcommand("eliminate", "run the cross-characteristic case analysis");
  std::string e_L, e_S;
  bool e_scan = false;
  elim->add_option("L", e_L, "target group descriptor")->required();
  elim->add_option("S", e_S, "candidate descriptor (field size key may be u=)");
  elim->add_flag("--scan", e_scan, "scan all candidates with matching t");
  elim->add_option("--config", config_help, "key = value file whose keys are flag names");

  // export ------------------------------------------------------------------
  auto* exp = app.add_subcommand("export", "export the index graph");
  std::string x_desc, x_format = "json", x_out;
  exp->add_option("descriptor", x_desc)->required();
  exp->add_option("--format", x_format, "dot | json");
  exp->add_option("--out", x_out, "output path (default stdout)");

  std::vector<std::string> tokens;
  try {
    tokens = inject_config(argc, argv);
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << std::endl;
    return 2;
  }
  std::vector<const char*> ptrs = {argv[0]};
  for (const auto& tkn : tokens) ptrs.push_back(tkn.c_str());
  try {
    app.parse(int(ptrs.size()), ptrs.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << std::endl;
    return 2;
  }

  try {
    if (verify->parsed()) {
      if (list_only) {
        for (const auto& info : gk::lemma_registry())
          std::cout << info.id << (info.in_acceptance ? "  [acceptance]  " : "              ")
                    << info.description << '\n';
        return 0;
      }
      grid.families = parse_families(families_spec);
      if (lemmas.empty() && !all) {
        std::cerr << "verify: give --lemma <id> (repeatable) or --all" << std::endl;
        return 2;
      }
      std::vector<gk::VerificationReport> reports;
      if (all) {
        reports = gk::run_campaign(grid, true);
      } else {
        for (const auto& id : lemmas) reports.push_back(gk::run_lemma(id, grid));
      }
      json stream = json::array();
      bool ok = true;
      for (const auto& r : reports) {
        stream.push_back(report_json(r));
        ok = ok && r.pass();
        std::cerr << (r.pass() ? "PASS " : "FAIL ") << r.lemma << "  (" << r.checks
                  << " checks, " << r.failures.size() << " failures)" << std::endl;
      }
      if (!json_out.empty()) emit(stream.dump(2), json_out);
      return ok ? 0 : 1;
    }

    if (query->parsed()) {
      auto d = gk::parse_descriptor(q_desc);
      json j;
      j["query"] = q_what;
      j["group"] = descriptor_json(d);
      if (q_what == "t") {
        auto gd = gk::make_group_data(d);
        j["t"] = gd.zt.t;
        j["t_formula"] = gd.t1.t;
        j["source"] = "exact-search = table-formula";
      } else if (q_what == "cocliques") {
        auto gd = gk::make_group_data(d);
        auto sets = gk::enumerate_max_cocliques(gd.g);
        j["t"] = sets.size;
        j["count"] = sets.count;
        j["E"] = sets.common;
        j["J"] = sets.united;
        j["witness"] = coclique_json(gk::max_coclique_exact(gd.g));
      } else if (q_what == "zeta") {
        auto gd = gk::make_group_data(d);
        j["t"] = gd.zt.t;
        j["M"] = gd.zt.M;
        j["N"] = gd.zt.N;
        j["T"] = gd.zt.T;
        json z;
        for (auto& [i, v] : gd.zt.zeta) z[std::to_string(i)] = v;
        j["zeta"] = z;
        json offs = json::array();
        for (int x : gd.zt.T) offs.push_back(gd.zt.t - x);
        j["T_as_t_minus"] = offs;
      } else if (q_what == "graph") {
        j["graph"] = graph_json(d);
      } else if (q_what == "bigk") {
        auto big = gk::big_spectral_element(d);
        j["value"] = big.value.get_str();
        j["witness_j"] = big.witness_j;
        j["power_of_two_fallback"] = big.power_of_two_fallback;
        j["max_bound"] = gk::max_spectral_bound(d).get_str();
      } else if (q_what == "pexp") {
        j["pexp"] = gk::p_exponent(d).get_str();
        j["max_root_height"] = gk::max_root_height(d);
      } else {
        std::cerr << "query: unknown invariant '" << q_what
                  << "' (want t | cocliques | zeta | graph | bigk | pexp)" << std::endl;
        return 2;
      }
      std::cout << j.dump(2) << std::endl;
      return 0;
    }

    if (elim->parsed()) {
      auto L = gk::parse_descriptor(e_L);
      if (e_scan != e_S.empty()) {
        std::cerr << "eliminate: give either a candidate descriptor or --scan" << std::endl;
        return 2;
      }
      auto LD = gk::make_group_data(L);
      json stream = json::array();
      bool all_eliminated = true;
      if (e_scan) {
        for (const auto& S : gk::scan_candidates(L)) {
          auto out = gk::eliminate(LD, gk::make_group_data(S));
          all_eliminated = all_eliminated && std::holds_alternative<gk::ContradictionReport>(out);
          stream.push_back(elimination_json(out));
        }
      } else {
        auto out = gk::eliminate(LD, gk::make_group_data(gk::parse_descriptor(e_S)));
        all_eliminated = std::holds_alternative<gk::ContradictionReport>(out);
        stream.push_back(elimination_json(out));
      }
      std::cout << stream.dump(2) << std::endl;
      return all_eliminated ? 0 : 1;
    }

    if (exp->parsed()) {
      auto d = gk::parse_descriptor(x_desc);
      if (x_format == "dot")
        emit(graph_dot(d), x_out);
      else if (x_format == "json")
        emit(graph_json(d).dump(2), x_out);
      else {
        std::cerr << "export: unknown format '" << x_format << "'" << std::endl;
        return 2;
      }
      return 0;
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const std::range_error& e) {
    std::cerr << "range error: " << e.what() << std::endl;
    return 2;
  } catch (const gk::lemma_violation& e) {
    std::cerr << "lemma violation: " << e.what() << std::endl;
    return 1;
  }
  return 2;
}
