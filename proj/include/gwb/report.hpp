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

#ifndef GWB_REPORT_HPP_
#define GWB_REPORT_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace gwb {

using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

// Relative errors (bound - exact) / exact of the simple, FL and curvature-matched bounds
// for Poisson m in {1.5, 1.1, 1.02} and n in {1, 5, 10, 20, 50, 100}.
Table table1();
// beta, L^Q, S_inf, series, U^DN, theta s for seven models at mean 1 + s.
Table table2(double s = 0.2);
// T_exact, T_app, T_ser for binomial, negative binomial and GP models.
Table table3();

// x, f(x) = phi(x) - phi_FL(x) for Poisson m.
Table fig1_data(double m = 1.5, int points = 201);
// x and f_GP(x) for each lambda at fixed s.
Table fig2_data(double s = 0.3, int points = 201);
// Relative error of the FL bound by generation for GP models at s.
Table fig4_data(double s = 0.1, int n_max = 40);
Table fig3_volumes(long long samples, std::uint64_t seed);

std::string format_cell(const Cell& cell, int digits);
std::string to_csv(const Table& table, int digits = 6);

}  // namespace gwb

#endif  // GWB_REPORT_HPP_
