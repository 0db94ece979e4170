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

#include "gwb/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

#include "gwb/classify_f3.hpp"
#include "gwb/classify_gp.hpp"
#include "gwb/errors.hpp"
#include "gwb/fl_bounds.hpp"
#include "gwb/sinf_estimates.hpp"

namespace gwb {
namespace {

const int kTable1N[] = {1, 5, 10, 20, 50, 100};
const double kTable1M[] = {1.5, 1.1, 1.02};

struct Table3Block {
  double s;
  double eps;
  double lambdas[5];
};

const Table3Block kTable3Blocks[] = {
    {0.01, 0.01, {0.0, 0.1, 0.259, 0.5, 0.9}},
    {0.1, 0.1, {0.0, 0.1, 0.276, 0.5, 0.9}},
    {0.1, 0.01, {0.0, 0.1, 0.276, 0.5, 0.9}},
    {0.1, 1e-4, {0.0, 0.1, 0.276, 0.5, 0.9}},
    {0.3, 0.01, {0.0, 0.2, 0.312, 0.5, 0.9}},
};

std::vector<FamilySpec> Table2Columns() {
  return {FamilySpec::binomial(5),
          FamilySpec::neg_binomial(5),
          FamilySpec::generalized_poisson(0.0),
          FamilySpec::generalized_poisson(0.2),
          FamilySpec::generalized_poisson(0.5),
          FamilySpec::generalized_poisson(0.9),
          FamilySpec::fractional_linear(0.2)};
}

std::string Quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Table table1() {
  Table t;
  t.header = {"m", "bound"};
  for (int n : kTable1N) t.header.push_back("n=" + std::to_string(n));
  for (double m : kTable1M) {
    const OffspringModel model = OffspringModel::poisson(m);
    const std::vector<double> s = survival_curve(model, 100);
    const std::pair<const char*, double (*)(const OffspringModel&, int)> bounds[] = {
        {"simple", sn_simple_bound}, {"fl", sn_fl_bound}, {"pollak", sn_pollak_bound}};
    for (const auto& [name, fn] : bounds) {
      std::vector<Cell> row{m, std::string(name)};
      for (int n : kTable1N) row.emplace_back((fn(model, n) - s[n]) / s[n]);
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

Table table2(double s) {
  const std::vector<FamilySpec> cols = Table2Columns();
  Table t;
  t.header = {"quantity"};
  for (const auto& c : cols) t.header.push_back(c.label());
  std::vector<SinfBounds> b;
  for (const auto& c : cols) b.push_back(sinf_bounds(c, s));
  auto row = [&](const char* name, auto get) {
    std::vector<Cell> r{std::string(name)};
    for (const auto& x : b) r.push_back(get(x));
    t.rows.push_back(std::move(r));
  };
  row("beta", [](const SinfBounds& x) -> Cell { return x.beta; });
  row("quine_lower", [](const SinfBounds& x) -> Cell { return x.quine_lower; });
  row("s_inf", [](const SinfBounds& x) -> Cell { return x.exact; });
  row("series", [](const SinfBounds& x) -> Cell { return x.series3; });
  row("dn_upper", [](const SinfBounds& x) -> Cell {
    if (x.dn_upper) return *x.dn_upper;
    return std::monostate{};
  });
  row("theta_s", [](const SinfBounds& x) -> Cell { return x.haldane; });
  return t;
}

Table table3() {
  Table t;
  t.header = {"s", "eps", "quantity", "binomial(n=5)", "negbinomial(r=5)",
              "gp1", "gp2", "gp3", "gp4", "gp5", "simple"};
  for (const auto& blk : kTable3Blocks) {
    std::vector<FamilySpec> cols{FamilySpec::binomial(5), FamilySpec::neg_binomial(5)};
    for (double l : blk.lambdas) cols.push_back(FamilySpec::generalized_poisson(l));
    std::vector<Cell> lam{blk.s, blk.eps, std::string("lambda"), std::monostate{},
                          std::monostate{}};
    for (double l : blk.lambdas) lam.emplace_back(l);
    lam.emplace_back(std::monostate{});
    t.rows.push_back(std::move(lam));
    const long long simple =
        static_cast<long long>(std::ceil(std::log1p(1.0 / blk.eps) / blk.s));
    std::vector<Cell> exact{blk.s, blk.eps, std::string("t_exact")};
    std::vector<Cell> app{blk.s, blk.eps, std::string("t_app")};
    std::vector<Cell> ser{blk.s, blk.eps, std::string("t_ser")};
    for (const auto& c : cols) {
      const OffspringModel model = model_at(c, blk.s);
      exact.emplace_back(static_cast<long long>(t_eps_exact(model, blk.eps)));
      app.emplace_back(
          static_cast<long long>(t_app(extinction_probability(model), blk.eps)));
      ser.emplace_back(static_cast<long long>(t_ser(c, blk.s, blk.eps)));
    }
    exact.emplace_back(simple);
    app.emplace_back(simple);
    ser.emplace_back(simple);
    t.rows.push_back(std::move(exact));
    t.rows.push_back(std::move(app));
    t.rows.push_back(std::move(ser));
  }
  return t;
}

Table fig1_data(double m, int points) {
  if (points < 2) throw DomainError("fig1_data: points must be >= 2");
  const OffspringModel model = OffspringModel::poisson(m);
  const FLParams fl = matching_fl(extinction_probability(model));
  Table t;
  t.header = {"x", "f"};
  for (int i = 0; i < points; ++i) {
    const double x = static_cast<double>(i) / (points - 1);
    t.rows.push_back({x, fl_gap(model, fl, x)});
  }
  return t;
}

Table fig2_data(double s, int points) {
  if (points < 2) throw DomainError("fig2_data: points must be >= 2");
  const GPThresholds th = gp_thresholds(s);
  const double lambdas[] = {0.30, th.lambda_c1, th.lambda_c2, th.lambda_c0, 0.3145};
  std::vector<OffspringModel> models;
  std::vector<FLParams> fls;
  Table t;
  t.header = {"x"};
  for (double l : lambdas) {
    models.push_back(gp_model(s, l));
    fls.push_back(matching_fl(extinction_probability(models.back())));
    std::ostringstream os;
    os.precision(6);
    os << "lambda=" << l;
    t.header.push_back(os.str());
  }
  for (int i = 0; i < points; ++i) {
    const double x = static_cast<double>(i) / (points - 1);
    std::vector<Cell> row{x};
    for (size_t k = 0; k < models.size(); ++k) row.emplace_back(fl_gap(models[k], fls[k], x));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table fig4_data(double s, int n_max) {
  if (n_max < 1) throw DomainError("fig4_data: n_max must be >= 1");
  const double lambdas[] = {0.0, 0.1, 0.276, 0.5, 0.9};
  Table t;
  t.header = {"n"};
  std::vector<std::vector<double>> cols;
  for (double l : lambdas) {
    const OffspringModel model = gp_model(s, l);
    const FixedPoint fp = extinction_probability(model);
    const std::vector<double> sv = survival_curve(model, n_max);
    std::vector<double> c(n_max + 1);
    for (int n = 1; n <= n_max; ++n) {
      const double bound = fp.s_inf / (1.0 - std::pow(fp.gamma, n) * fp.p_inf);
      c[n] = (bound - sv[n]) / sv[n];
    }
    cols.push_back(std::move(c));
    std::ostringstream os;
    os << "lambda=" << l;
    t.header.push_back(os.str());
  }
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Cell> row{static_cast<long long>(n)};
    for (const auto& c : cols) row.emplace_back(c[n]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table fig3_volumes(long long samples, std::uint64_t seed) {
  const F3Volumes v = f3_region_volumes(samples, seed);
  Table t;
  t.header = {"region", "fraction"};
  t.rows.push_back({std::string("LowerBoundOnP"), v.lower});
  t.rows.push_back({std::string("Switches"), v.switches});
  t.rows.push_back({std::string("UpperBoundOnP"), v.upper});
  return t;
}

std::string format_cell(const Cell& cell, int digits) {
  if (std::holds_alternative<std::monostate>(cell)) return "";
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&cell)) return Quote(*s);
  const double v = std::get<double>(cell);
  if (std::isnan(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string to_csv(const Table& table, int digits) {
  if (digits < 1 || digits > 17) throw DomainError("to_csv: digits must be in [1, 17]");
  std::ostringstream os;
  for (size_t i = 0; i < table.header.size(); ++i) {
    if (i) os << ',';
    os << Quote(table.header[i]);
  }
  os << "\n";
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << format_cell(row[i], digits);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace gwb
