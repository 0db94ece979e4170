// Copyright 2026 The gwbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <unistd.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gwb/classify_f3.hpp"
#include "gwb/classify_gp.hpp"
#include "gwb/errors.hpp"
#include "gwb/fl_bounds.hpp"
#include "gwb/genetics.hpp"
#include "gwb/offspring.hpp"
#include "gwb/report.hpp"
#include "gwb/sinf_estimates.hpp"

namespace {

using json = nlohmann::json;
using gwb::Cell;
using gwb::Table;

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitDomain = 2;
constexpr int kExitApplicability = 3;

const char* const kRealFlags[] = {"m",   "p",  "pi",        "rho",   "p0",  "p2",
                                  "p3",  "mu", "lambda",    "s",     "eps", "tau",
                                  "Ne",  "theta-mut", "alpha", "samples"};
const char* const kIntFlags[] = {"n", "r", "nmax", "N", "seed", "digits", "id"};
const char* const kTextFlags[] = {"dist", "format", "out", "fig", "kind"};

// Command plus every flag given on the command line.
struct RunSpec {
  std::string command;
  std::map<std::string, double> real;
  std::map<std::string, long long> integer;
  std::map<std::string, std::string> text;

  bool has(const std::string& k) const {
    return real.count(k) || integer.count(k) || text.count(k);
  }
  double get(const std::string& k) const {
    auto it = real.find(k);
    if (it == real.end()) throw gwb::DomainError("missing required flag --" + k);
    return it->second;
  }
  double get(const std::string& k, double fallback) const {
    auto it = real.find(k);
    return it == real.end() ? fallback : it->second;
  }
  long long get_int(const std::string& k) const {
    auto it = integer.find(k);
    if (it == integer.end()) throw gwb::DomainError("missing required flag --" + k);
    return it->second;
  }
  long long get_int(const std::string& k, long long fallback) const {
    auto it = integer.find(k);
    return it == integer.end() ? fallback : it->second;
  }
  std::string get_text(const std::string& k, const std::string& fallback) const {
    auto it = text.find(k);
    return it == text.end() ? fallback : it->second;
  }
};

json ToJson(const RunSpec& spec) {
  json j;
  j["command"] = spec.command;
  j["real"] = spec.real;
  j["integer"] = spec.integer;
  j["text"] = spec.text;
  return j;
}

RunSpec FromJson(const json& j) {
  RunSpec spec;
  spec.command = j.at("command").get<std::string>();
  if (j.contains("real")) spec.real = j["real"].get<std::map<std::string, double>>();
  if (j.contains("integer")) {
    spec.integer = j["integer"].get<std::map<std::string, long long>>();
  }
  if (j.contains("text")) spec.text = j["text"].get<std::map<std::string, std::string>>();
  return spec;
}

struct Bindings {
  std::map<std::string, double> real;
  std::map<std::string, long long> integer;
  std::map<std::string, std::string> text;
  std::map<std::string, CLI::Option*> opts;
  bool emit_spec = false;
  bool strict = false;
  std::string spec_file;
};

void AddFlags(CLI::App* app, Bindings& b) {
  for (const char* f : kRealFlags) {
    b.opts[f] = app->add_option(std::string("--") + f, b.real[f]);
  }
  for (const char* f : kIntFlags) {
    b.opts[f] = app->add_option(std::string("--") + f, b.integer[f]);
  }
  for (const char* f : kTextFlags) {
    b.opts[f] = app->add_option(std::string("--") + f, b.text[f]);
  }
  b.opts["dist"]->check(
      CLI::IsMember({"poisson", "binomial", "negbinomial", "fl", "f3", "gp"}));
  b.opts["format"]->check(CLI::IsMember({"csv", "json"}));
  app->add_flag("--emit-spec", b.emit_spec, "Print the run specification as JSON and exit");
  b.opts["strict"] = app->add_flag("--strict", b.strict,
                                   "Fail when a bound's applicability condition is violated");
}

RunSpec Collect(const std::string& command, const Bindings& b) {
  RunSpec spec;
  spec.command = command;
  for (const auto& [k, opt] : b.opts) {
    if (opt->count() == 0) continue;
    if (b.real.count(k)) spec.real[k] = b.real.at(k);
    if (b.integer.count(k)) spec.integer[k] = b.integer.at(k);
    if (b.text.count(k)) spec.text[k] = b.text.at(k);
  }
  if (b.strict) spec.integer["strict"] = 1;
  return spec;
}

void WriteAtomic(const std::string& path, const std::string& data) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << data;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

void Emit(const RunSpec& spec, const std::string& data) {
  const std::string out = spec.get_text("out", "");
  if (out.empty() || out == "-") {
    std::cout << data;
    std::cout.flush();
  } else {
    WriteAtomic(out, data);
  }
}

json CellJson(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c)) return nullptr;
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  const double v = std::get<double>(c);
  if (!std::isfinite(v)) return nullptr;
  return v;
}

std::string Render(const RunSpec& spec, const Table& t) {
  const int digits = static_cast<int>(spec.get_int("digits", 6));
  if (spec.get_text("format", "csv") == "json") {
    json j;
    j["header"] = t.header;
    j["rows"] = json::array();
    for (const auto& row : t.rows) {
      json r = json::array();
      for (const auto& c : row) r.push_back(CellJson(c));
      j["rows"].push_back(r);
    }
    return j.dump(2) + "\n";
  }
  return gwb::to_csv(t, digits);
}

gwb::OffspringModel ModelFrom(const RunSpec& spec) {
  const std::string dist = spec.get_text("dist", "");
  if (dist.empty()) throw gwb::DomainError("missing required flag --dist");
  const bool by_s = spec.real.count("s") > 0;
  if (dist == "poisson") {
    return gwb::OffspringModel::poisson(by_s ? 1.0 + spec.get("s") : spec.get("m"));
  }
  if (dist == "binomial") {
    const int n = static_cast<int>(spec.get_int("n"));
    if (!spec.real.count("p") && by_s) {
      return gwb::model_at(gwb::FamilySpec::binomial(n), spec.get("s"));
    }
    return gwb::OffspringModel::binomial(n, spec.get("p"));
  }
  if (dist == "negbinomial") {
    const int r = static_cast<int>(spec.get_int("r"));
    if (!spec.real.count("p") && by_s) {
      return gwb::model_at(gwb::FamilySpec::neg_binomial(r), spec.get("s"));
    }
    return gwb::OffspringModel::neg_binomial(r, spec.get("p"));
  }
  if (dist == "fl") {
    if (!spec.real.count("rho") && by_s) {
      return gwb::model_at(gwb::FamilySpec::fractional_linear(spec.get("pi")), spec.get("s"));
    }
    return gwb::OffspringModel::fractional_linear(spec.get("pi"), spec.get("rho"));
  }
  if (dist == "f3") {
    return gwb::OffspringModel::finite_three(spec.get("p0"), spec.get("p2"), spec.get("p3"));
  }
  const double lambda = spec.get("lambda", 0.0);
  if (!spec.real.count("mu") && by_s) return gwb::gp_model(spec.get("s"), lambda);
  return gwb::OffspringModel::generalized_poisson(spec.get("mu"), lambda);
}

gwb::FamilySpec FamilyFrom(const RunSpec& spec) {
  const std::string dist = spec.get_text("dist", "poisson");
  if (dist == "poisson") return gwb::FamilySpec::poisson();
  if (dist == "binomial") return gwb::FamilySpec::binomial(static_cast<int>(spec.get_int("n")));
  if (dist == "negbinomial") {
    return gwb::FamilySpec::neg_binomial(static_cast<int>(spec.get_int("r")));
  }
  if (dist == "gp") return gwb::FamilySpec::generalized_poisson(spec.get("lambda", 0.0));
  if (dist == "fl") return gwb::FamilySpec::fractional_linear(spec.get("pi"));
  throw gwb::DomainError("series quantities are not available for --dist " + dist);
}

std::string CmdTable(const RunSpec& spec) {
  const long long id = spec.get_int("id");
  if (id == 1) return Render(spec, gwb::table1());
  if (id == 2) return Render(spec, gwb::table2(spec.get("s", 0.2)));
  if (id == 3) return Render(spec, gwb::table3());
  throw gwb::DomainError("--id must be 1, 2 or 3");
}

json ThresholdJson(const gwb::F3Thresholds& t) {
  return json{{"p0_plus", t.p0_plus},
              {"p0_r", t.p0_r},
              {"p0_gamma", t.p0_gamma},
              {"p0_plus_admissible", t.plus_admissible},
              {"p0_gamma_admissible", t.gamma_admissible}};
}

std::string CmdClassify(const RunSpec& spec) {
  const std::string kind = spec.get_text("kind", spec.get_text("dist", ""));
  json j;
  if (kind == "f3") {
    const double p0 = spec.get("p0");
    const double p2 = spec.get("p2");
    const double p3 = spec.get("p3");
    const gwb::F3Class c = p3 == 0.0 ? gwb::f3_p3zero(p0, p2).second
                                     : gwb::classify_f3(p0, p2, p3);
    j["kind"] = "f3";
    j["region"] = gwb::f3_region_name(c.region);
    j["case"] = c.case_label;
    j["subcase"] = c.subcase;
    j["sign_profile"] = c.sign_profile;
    if (p3 != 0.0) j["thresholds"] = ThresholdJson(c.thresholds);
    j["p_inf"] = c.fp.p_inf;
    j["gamma"] = c.fp.gamma;
    j["switch_n"] = c.switch_n ? json(*c.switch_n) : json(nullptr);
    const auto model = gwb::OffspringModel::finite_three(p0, p2, p3);
    const auto scan = gwb::scan_fl_gap(model, 0.0, 1.0, 4096);
    j["scan"] = {{"min_f", scan.min_value},
                 {"max_f", scan.max_value},
                 {"sign_changes", scan.sign_changes}};
  } else if (kind == "gp") {
    const double s = spec.get("s");
    const double lambda = spec.get("lambda");
    const gwb::BoundDirection d = gwb::classify_gp(s, lambda);
    const gwb::GPThresholds t = gwb::gp_thresholds(s);
    const auto model = gwb::gp_model(s, lambda);
    const auto fp = gwb::extinction_probability(model);
    const auto scan = gwb::scan_fl_gap(model, 0.0, fp.p_inf, 2048);
    j["kind"] = "gp";
    j["s"] = s;
    j["lambda"] = lambda;
    j["class"] = gwb::direction_kind_name(d.kind);
    j["switch_n"] = d.switch_n ? json(*d.switch_n) : json(nullptr);
    j["conjectured"] = d.conjectured;
    j["note"] = d.note;
    j["thresholds"] = {{"lambda_c0", t.lambda_c0}, {"lambda_c1", t.lambda_c1},
                       {"lambda_c2", t.lambda_c2}, {"approx_c0", t.approx_c0},
                       {"approx_c1", t.approx_c1}, {"approx_c2", t.approx_c2}};
    j["p_inf"] = fp.p_inf;
    j["gamma"] = fp.gamma;
    j["scan"] = {{"min_f", scan.min_value},
                 {"max_f", scan.max_value},
                 {"sign_changes", scan.sign_changes}};
  } else {
    throw gwb::DomainError("classify requires --kind f3 or --kind gp");
  }
  return j.dump(2) + "\n";
}

std::string CmdSurvival(const RunSpec& spec) {
  const auto model = ModelFrom(spec);
  const int nmax = static_cast<int>(spec.get_int("nmax", 20));
  const auto s = gwb::survival_curve(model, nmax);
  Table t;
  t.header = {"n", "S", "fl_bound", "simple_bound", "pollak_bound"};
  for (int n = 0; n <= nmax; ++n) {
    Cell pollak = n >= 1 ? Cell(gwb::sn_pollak_bound(model, n)) : Cell(std::monostate{});
    t.rows.push_back({static_cast<long long>(n), s[n], gwb::sn_fl_bound(model, n),
                      gwb::sn_simple_bound(model, n), pollak});
  }
  return Render(spec, t);
}

std::string CmdSinf(const RunSpec& spec) {
  const gwb::FamilySpec fam = FamilyFrom(spec);
  const double s = spec.get("s");
  if (spec.get_int("strict", 0) != 0) {
    const auto model = gwb::model_at(fam, s);
    gwb::quine_bounds(model, gwb::QuineMode::kStrict);
    gwb::dn_upper(gwb::moments(model));
  }
  const gwb::SinfBounds b = gwb::sinf_bounds(fam, s);
  Table t;
  t.header = {"family", "s",      "beta",   "quine_lower", "quine_upper", "s_inf",
              "series", "dn_upper", "theta_s", "note"};
  std::string note;
  if (!b.quine_condition_met) note = "quine condition 2*beta < min(1, 3b/(2c)) violated";
  if (!b.dn_note.empty()) note += (note.empty() ? "" : "; ") + std::string(b.dn_note);
  t.rows.push_back({fam.label(), s, b.beta, b.quine_lower,
                    b.quine_upper ? Cell(*b.quine_upper) : Cell(std::monostate{}), b.exact,
                    b.series3, b.dn_upper ? Cell(*b.dn_upper) : Cell(std::monostate{}),
                    b.haldane, note});
  return Render(spec, t);
}

std::string CmdTeps(const RunSpec& spec) {
  const auto model = ModelFrom(spec);
  const double eps = spec.get("eps");
  const auto fp = gwb::extinction_probability(model);
  Table t;
  t.header = {"eps", "t_exact", "t_app", "t_fl", "t_ser", "simple"};
  Cell ser = std::monostate{};
  Cell simple = std::monostate{};
  if (spec.real.count("s") && spec.get_text("dist", "") != "f3") {
    const double s = spec.get("s");
    ser = static_cast<long long>(gwb::t_ser(FamilyFrom(spec), s, eps));
    simple = static_cast<long long>(std::ceil(std::log1p(1.0 / eps) / s));
  }
  t.rows.push_back({eps, static_cast<long long>(gwb::t_eps_exact(model, eps)),
                    static_cast<long long>(gwb::t_app(fp, eps)), gwb::t_eps_fl(fp, eps), ser,
                    simple});
  return Render(spec, t);
}

std::string CmdGenetics(const RunSpec& spec) {
  const int n = static_cast<int>(spec.get_int("N"));
  const double s = spec.get("s");
  const double ne = spec.get("Ne", static_cast<double>(n));
  Table t;
  t.header = {"quantity", "value"};
  auto add = [&](const char* name, double v) { t.rows.push_back({std::string(name), v}); };
  const gwb::WFModel wf{n, s, ne};
  if (n <= gwb::kWfMaxSize) add("wf_exact", gwb::wf_fixation_exact(wf));
  add("wf_diffusion", gwb::wf_fixation_diffusion(wf));
  add("wf_A_improved", gwb::wf_fixation_A(n, s, 2.0, gwb::improved_a2(n, s)));
  const gwb::FamilySpec fam = FamilyFrom(spec);
  add("s_inf", gwb::extinction_probability(gwb::model_at(fam, s)).s_inf);
  if (spec.real.count("alpha")) {
    const gwb::TraitModel tm{spec.get("theta-mut", 1.0), spec.get("alpha"), s, n};
    const gwb::VgInf v = gwb::vg_inf(tm, fam);
    add("v1_inf", v.v1);
    add("vg_inf_leading", v.leading);
    add("vg_inf_simple", v.simple);
    add("response_inf", v.response);
    if (spec.real.count("tau")) {
      const auto model = gwb::model_at(fam, std::expm1(s * tm.alpha));
      add("vg_tau", gwb::vg_tau(tm, model, spec.get("tau")));
    }
  }
  return Render(spec, t);
}

std::string CmdFigdata(const RunSpec& spec) {
  const std::string fig = spec.get_text("fig", "");
  if (fig == "1") return Render(spec, gwb::fig1_data(spec.get("m", 1.5)));
  if (fig == "2") return Render(spec, gwb::fig2_data(spec.get("s", 0.3)));
  if (fig == "4") {
    return Render(spec, gwb::fig4_data(spec.get("s", 0.1),
                                       static_cast<int>(spec.get_int("nmax", 40))));
  }
  if (fig == "3-volumes") {
    const double samples = spec.get("samples", 1e6);
    if (!(samples >= 1.0)) throw gwb::DomainError("--samples must be >= 1");
    return Render(spec, gwb::fig3_volumes(static_cast<long long>(samples),
                                          static_cast<std::uint64_t>(spec.get_int("seed", 42))));
  }
  throw gwb::DomainError("--fig must be one of 1, 2, 3-volumes, 4");
}

std::string Dispatch(const RunSpec& spec) {
  if (spec.command == "table") return CmdTable(spec);
  if (spec.command == "classify") return CmdClassify(spec);
  if (spec.command == "survival") return CmdSurvival(spec);
  if (spec.command == "sinf") return CmdSinf(spec);
  if (spec.command == "teps") return CmdTeps(spec);
  if (spec.command == "genetics") return CmdGenetics(spec);
  if (spec.command == "figdata") return CmdFigdata(spec);
  throw gwb::DomainError("unknown command '" + spec.command + "'");
}

int ReportError(const std::string& kind, const std::string& message, int code,
                const gwb::ApplicabilityError* app = nullptr) {
  json j{{"error", kind}, {"message", message}, {"exit_code", code}};
  if (app != nullptr) {
    j["condition"] = app->condition();
    j["lhs"] = app->lhs();
    j["rhs"] = app->rhs();
  }
  std::cerr << j.dump() << std::endl;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Survival probabilities and bounds for Galton-Watson processes"};
  app.require_subcommand(1);
  const char* commands[] = {"table", "classify", "survival", "sinf", "teps", "genetics",
                            "figdata"};
  std::map<std::string, Bindings> bindings;
  std::map<std::string, CLI::App*> subs;
  for (const char* c : commands) {
    subs[c] = app.add_subcommand(c);
    AddFlags(subs[c], bindings[c]);
  }
  std::string run_file;
  std::string run_out;
  CLI::App* run = app.add_subcommand("run", "Execute a JSON run specification");
  run->add_option("spec", run_file, "Path to the specification")->required();
  CLI::Option* run_out_opt = run->add_option("--out", run_out, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return ReportError("domain", e.what(), kExitDomain);
  }

  try {
    RunSpec spec;
    if (run->parsed()) {
      std::ifstream in(run_file);
      if (!in) return ReportError("io", "cannot read " + run_file, kExitOther);
      spec = FromJson(json::parse(in));
      if (run_out_opt->count() > 0) spec.text["out"] = run_out;
    } else {
      for (const auto& [name, sub] : subs) {
        if (!sub->parsed()) continue;
        spec = Collect(name, bindings[name]);
        if (bindings[name].emit_spec) {
          std::cout << ToJson(spec).dump(2) << "\n";
          return kExitOk;
        }
      }
    }
    Emit(spec, Dispatch(spec));
    return kExitOk;
  } catch (const gwb::ApplicabilityError& e) {
    return ReportError("applicability", e.what(), kExitApplicability, &e);
  } catch (const gwb::DomainError& e) {
    return ReportError("domain", e.what(), kExitDomain);
  } catch (const gwb::Error& e) {
    return ReportError(gwb::error_kind_name(e.kind()), e.what(), kExitOther);
  } catch (const json::exception& e) {
    return ReportError("domain", e.what(), kExitDomain);
  } catch (const std::exception& e) {
    return ReportError("io", e.what(), kExitOther);
  }
}
