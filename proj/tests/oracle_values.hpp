// Copyright 2026 The curveframe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Reference values printed by tools/oracles.py.
#pragma once

#include <array>

namespace curveframe::oracle {

namespace cubic {
inline constexpr double length = 1.8630229825122514;
inline constexpr double s_half = 0.59468737410633306;
inline constexpr double kappa = 0.95200474003949935;
inline constexpr double tau = 0.78688524590163934;
inline constexpr double kappa_prime = -1.9061241795880508;
inline constexpr std::array<double, 3> center = {0.8125, -1.65625, 2.25};
inline constexpr double radius = 2.8717712848519117;
inline constexpr double sigma = 11.587682695168281;
inline constexpr double total_torsion = 1.5072785002923931;
inline constexpr double J = -2.5444895839411915;
inline constexpr double J_prime_frozen = 5.8815165189129583;
inline constexpr double J_prime = -5.1500123329609263;
inline constexpr double decomposition = 2.2958874039497803e-41;
}  // namespace cubic

namespace sphere {
inline constexpr double length = 11.756861949659902;
inline constexpr double s_one = 2.0049453787765333;
inline constexpr double kappa = 0.53197622456372027;
inline constexpr double tau = -0.00097486428247282177;
inline constexpr double J = 0.36331090542987962;
inline constexpr double J_prime = -0.0011035413121172367;
inline constexpr double J_start = 0.36828299574363549;
inline constexpr double torsion_to_one = -0.0043852999234891597;
inline constexpr double sigma = -4.5065758612686117e-42;
}  // namespace sphere

namespace ellipse {
inline constexpr double length = 9.6884482205476762;
}  // namespace ellipse

}  // namespace curveframe::oracle
