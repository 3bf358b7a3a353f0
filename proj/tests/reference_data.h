// Copyright 2026 The Authors.
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

// Reference values: maximum dimensions by size, the greedy sequence with
// estimated and exact co-transition probabilities, and normalized
// dimensions evaluated independently with 50-digit arithmetic (mpmath).

#ifndef TAQUIN_TESTS_REFERENCE_DATA_H_
#define TAQUIN_TESTS_REFERENCE_DATA_H_

namespace taquin::testing {

struct MaxDimRow {
  int size;
  const char* dimension;
  const char* diagram;   // one of the maximizers, canonical text
  double normalized;     // (-ln dim + (2/3) ln n!) / n^(2/3)
};

inline constexpr MaxDimRow kMaxDimTable[] = {
    {1, "1", "[[1]]", 0.0},
    {2, "1", "[[1],[1]]", 0.29110357448758583758},
    {3, "2", "[[1,1],[1]]", 0.24102833102329629644},
    {4, "6", "[[2,1],[1]]", 0.12974744900266645927},
    {5, "12", "[[2,1],[1],[1]]", 0.24170664316785546023},
    {6, "30", "[[2,1,1],[1],[1]]", 0.29830157322242029626},
    {7, "96", "[[2,1,1],[1,1],[1]]", 0.30582105038228179486},
    {8, "336", "[[3,1,1],[1,1],[1]]", 0.31315602713340731286},
    {9, "1540", "[[3,1,1],[2,1],[1]]", 0.27619213359059630571},
    {10, "8640", "[[3,2,1],[2,1],[1]]", 0.21661774799420357042},
    {11, "33372", "[[3,2,1],[2,1],[1],[1]]", 0.25327751297049502385},
    {12, "142380", "[[3,2,1,1],[2,1],[1],[1]]", 0.27827141745838097875},
    {13, "665280", "[[4,2,1,1],[2,1],[1],[1]]", 0.29424468770288153315},
    {14, "2849536", "[[3,2,1,1],[2,1,1],[1,1],[1]]", 0.33251023738507989744},
    {15, "15639552", "[[4,2,1,1],[2,1,1],[1,1],[1]]", 0.33445134002529201732},
    {16, "80923008", "[[4,2,1,1],[2,1,1],[2,1],[1]]", 0.35260433910544050706},
    {17, "544659648", "[[4,2,1,1],[3,1,1],[2,1],[1]]", 0.33593702852106550027},
    {18, "3299672408", "[[4,2,2,1],[3,1,1],[2,1],[1]]", 0.3416487453477841845},
    {19, "27402967200", "[[4,3,2,1],[3,1,1],[2,1],[1]]", 0.30794370727847302232},
    {20, "230747045760", "[[4,3,2,1],[3,2,1],[2,1],[1]]", 0.27947052033283126369},
    {21, "1553327915040", "[[4,3,2,1],[3,2,1],[2,1],[1],[1]]", 0.2866660356094308765},
    {22, "11012504995800", "[[4,3,2,1,1],[3,2,1],[2,1],[1],[1]]", 0.2909113328937481741},
    {23, "82028814137424", "[[5,3,2,1,1],[3,2,1],[2,1],[1],[1]]", 0.29259170987389594247},
    {24, "491203179370484", "[[5,3,2,1,1],[3,2,1],[2,1],[1,1],[1]]", 0.32393814335809474447},
    {25, "3290489409458592", "[[5,3,2,1,1],[3,2,1],[2,1],[2,1],[1]]", 0.34377763606171575851},
    {26, "26095216322563200", "[[5,3,2,1,1],[3,2,1,1],[2,1,1],[1,1],[1]]", 0.34645321575305402657},
    {27, "194868626458488668", "[[5,3,2,1,1],[3,2,1,1],[2,1,1],[2,1],[1]]", 0.35858411874562479358},
    {28, "1524692991397340664", "[[5,3,2,1,1],[3,2,1,1],[2,1,1],[2,1],[1],[1]]", 0.36780727426971033496},
    {29, "13746015864155603608", "[[5,3,2,1,1],[4,2,1,1],[3,1,1],[2,1],[1]]", 0.36416615698811466835},
    {30, "118306078695096215552", "[[5,3,2,1,1],[4,2,1,1],[3,1,1],[2,1],[1],[1]]", 0.36793265625101661293},
    {31, "1061302053614351456088", "[[5,4,2,2,1],[4,2,1,1],[3,1,1],[2,1],[1]]", 0.3696390573925959381},
    {32, "11607738064362975821328", "[[5,4,3,2,1],[4,2,1,1],[3,1,1],[2,1],[1]]", 0.35379340514380662155},
    {33, "111121303575872975022096", "[[5,4,3,2,1],[4,2,1,1],[3,1,1],[2,1],[1],[1]]", 0.35361303100358108859},
};

struct GreedyRow {
  int size;
  double estimate;
  const char* exact;  // 6 decimals
  double ratio_cotrans;
  double ratio_dim;
};

inline constexpr GreedyRow kGreedyTable[] = {
    {1, 1.000000, "1.000000", 1.000000, 1.000000},
    {2, 1.000000, "1.000000", 1.000000, 1.000000},
    {3, 0.494000, "0.500000", 0.988000, 0.988000},
    {4, 0.336400, "0.333333", 1.009200, 0.997090},
    {5, 0.501300, "0.500000", 1.002600, 0.999682},
    {6, 0.398900, "0.400000", 0.997250, 0.996933},
    {7, 0.311000, "0.312500", 0.995200, 0.992148},
    {8, 0.286700, "0.285714", 1.003450, 0.995571},
    {9, 0.218100, "0.218182", 0.999625, 0.995197},
    {10, 0.177300, "0.178241", 0.994722, 0.989945},
    {11, 0.258500, "0.258900", 0.998456, 0.988416},
    {12, 0.234000, "0.234387", 0.998350, 0.986785},
    {13, 0.214000, "0.214015", 0.999929, 0.986715},
    {14, 0.244400, "0.243717", 1.002804, 0.989482},
    {15, 0.171500, "0.174540", 0.982583, 0.972248},
    {16, 0.193500, "0.193265", 1.001218, 0.973432},
    {17, 0.147200, "0.148575", 0.990743, 0.964421},
    {18, 0.165300, "0.165065", 1.001425, 0.965795},
    {19, 0.118700, "0.120413", 0.985774, 0.952056},
    {20, 0.117900, "0.118758", 0.992779, 0.945181},
    {21, 0.148500, "0.148550", 0.999663, 0.944862},
    {22, 0.139800, "0.141051", 0.991129, 0.936480},
    {23, 0.134000, "0.134252", 0.998125, 0.934725},
    {24, 0.166900, "0.166996", 0.999427, 0.934189},
    {25, 0.149900, "0.149280", 1.004155, 0.938071},
    {26, 0.142200, "0.141968", 1.001636, 0.939605},
    {27, 0.140300, "0.140507", 0.998527, 0.938221},
    {28, 0.105200, "0.108191", 0.972356, 0.912285},
    {29, 0.121100, "0.123072", 0.983975, 0.897666},
    {30, 0.118500, "0.118282", 1.001846, 0.899323},
    {31, 0.119200, "0.119676", 0.996022, 0.895745},
    {32, 0.095700, "0.092418", 1.035517, 0.927560},
    {33, 0.102400, "0.102332", 1.000666, 0.928178},
    {34, 0.084100, "0.084177", 0.999086, 0.927329},
    {35, 0.098300, "0.097902", 1.004063, 0.931097},
    {36, 0.105300, "0.103923", 1.013254, 0.943438},
    {37, 0.080800, "0.079967", 1.010416, 0.953265},
    {38, 0.071400, "0.070766", 1.008953, 0.961799},
    {39, 0.112400, "0.113609", 0.989361, 0.951566},
    {40, 0.102000, "0.103360", 0.986841, 0.939044},
    {41, 0.096900, "0.096553", 1.003593, 0.942418},
    {42, 0.103600, "0.103421", 1.001734, 0.944052},
    {43, 0.093600, "0.095077", 0.984470, 0.929392},
    {44, 0.089100, "0.089197", 0.998908, 0.928377},
    {45, 0.096400, "0.095600", 1.008368, 0.936145},
    {46, 0.087900, "0.087233", 1.007646, 0.943303},
    {47, 0.084400, "0.082854", 1.018658, 0.960903},
    {48, 0.088500, "0.090526", 0.977617, 0.939396},
    {49, 0.068400, "0.068140", 1.003811, 0.942976},
    {50, 0.087400, "0.086093", 1.015178, 0.957289},
    {51, 0.065800, "0.064634", 1.018034, 0.974552},
    {52, 0.082300, "0.081673", 1.007679, 0.982036},
    {53, 0.061200, "0.061647", 0.992753, 0.974919},
    {54, 0.082300, "0.082246", 1.000659, 0.975562},
    {55, 0.077700, "0.078665", 0.987731, 0.963593},
    {56, 0.067500, "0.068341", 0.987690, 0.951731},
    {57, 0.072900, "0.073244", 0.995305, 0.947262},
    {58, 0.058600, "0.059935", 0.977719, 0.926157},
    {59, 0.053300, "0.053921", 0.988483, 0.915490},
    {60, 0.079000, "0.079498", 0.993739, 0.909758},
    {61, 0.073700, "0.073063", 1.008718, 0.917690},
    {62, 0.066200, "0.067502", 0.980715, 0.899992},
    {63, 0.075800, "0.075000", 1.010664, 0.909590},
    {64, 0.067300, "0.069331", 0.970711, 0.882949},
    {65, 0.064400, "0.063948", 1.007074, 0.889195},
};

// n = 10, dim = 8640.
inline constexpr double kNormalizedDim10 = 0.21661774799420357042;

}  // namespace taquin::testing

#endif  // TAQUIN_TESTS_REFERENCE_DATA_H_
