// Copyright 2026 The cnotsim Authors
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

// Published optimum rows (t_gate ns, fidelity %, g/h MHz, Omega/h MHz) for
// Heisenberg, XY, and Heisenberg with 500 ns amplitude damping.

#pragma once

#include <array>

namespace cnotsim::testing {

struct ReferenceRow {
  double t_ns;
  double fidelity_percent;
  double g_mhz;
  double omega_mhz;
};

inline constexpr std::array<ReferenceRow, 15> kHeisenbergRows{{
    {10.00, 97.8321, 19.1964, 430}, {11.25, 98.4599, 16.1049, 430},
    {12.50, 98.8405, 13.8710, 430}, {13.75, 99.0881, 12.1813, 430},
    {15.00, 99.2579, 10.8586, 430}, {16.25, 99.3792, 9.7950, 430},
    {17.50, 99.4688, 8.9212, 430},  {18.75, 99.5368, 8.1905, 430},
    {20.00, 99.5895, 7.5704, 430},  {22.50, 99.6646, 6.5749, 430},
    {25.00, 99.7144, 5.8108, 430},  {27.50, 99.7489, 5.2058, 430},
    {30.00, 99.7794, 4.8851, 340},  {40.00, 99.8452, 3.5124, 340},
    {50.00, 99.8734, 2.7419, 340},
}};

inline constexpr std::array<ReferenceRow, 15> kXYRows{{
    {10.00, 98.1750, 17.8571, 500}, {11.25, 98.8618, 23.8095, 250},
    {12.50, 99.2710, 19.2308, 250}, {13.75, 99.4902, 16.6667, 240},
    {15.00, 99.6174, 14.2857, 240}, {16.25, 99.6966, 12.5000, 240},
    {17.50, 99.7494, 11.1111, 240}, {18.75, 99.7864, 10.0000, 240},
    {20.00, 99.8133, 9.0909, 240},  {22.50, 99.8491, 7.6923, 240},
    {25.00, 99.8713, 6.6667, 240},  {27.50, 99.8861, 5.8824, 240},
    {30.00, 99.8973, 5.2083, 250},  {40.00, 99.9211, 3.6765, 250},
    {50.00, 99.9311, 2.8409, 250},
}};

inline constexpr std::array<ReferenceRow, 15> kDampedHeisenbergRows{{
    {10.00, 96.9272, 21.0227, 370}, {11.25, 97.3098, 17.3709, 370},
    {12.50, 97.4493, 14.8000, 370}, {13.75, 97.4699, 12.8920, 370},
    {15.00, 97.4260, 11.4198, 370}, {16.25, 97.3423, 10.2493, 370},
    {17.50, 97.2355, 9.2965, 370},  {18.75, 97.1125, 8.5057, 370},
    {20.00, 96.9781, 7.8390, 370},  {22.50, 96.6904, 6.7766, 370},
    {25.00, 96.3866, 5.9677, 370},  {27.50, 96.0740, 5.3314, 370},
    {30.00, 95.7565, 4.8177, 370},  {40.00, 94.4736, 3.4774, 370},
    {50.00, 93.1969, 2.7206, 370},
}};

}  // namespace cnotsim::testing
