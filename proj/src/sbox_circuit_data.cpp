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

// Gate lists for the layered S-box circuits. One shared nonlinear middle
// stage serves AES, AES^-1 and SM4; each kind contributes its own linear
// top (8->21) and bottom (18->8) layers. Exhaustive table equivalence and
// the per-layer gate census are enforced by the test suite.

#include "saes32/sbox_circuit_data.hpp"

namespace saes32::circuit_data {

const char* const kSharedMiddle = R"nl(
inputs 21
outputs y0 y1 y2 y3 y4 y5 y6 y7 y8 y9 y10 y11 y12 y13 y14 y15 y16 y17
t0 = xor x2 x11
t1 = and x8 x4
t2 = and x16 x5
t3 = xor x9 t1
t4 = and x13 x20
t5 = xor t4 t1
t6 = and x2 x11
t7 = and x15 x6
t8 = xor t0 t6
t9 = and x14 x12
t10 = xor t9 t6
t11 = and x0 x10
t12 = and x3 x19
t13 = xor t12 t11
t14 = and x1 x7
t15 = xor t14 t11
t16 = xor t3 t2
t17 = xor t5 x17
t18 = xor t8 t7
t19 = xor t10 t15
t20 = xor t16 t13
t21 = xor t17 t15
t22 = xor t18 t13
t23 = xor t19 x18
t24 = xor t22 t23
t25 = and t22 t20
t26 = xor t21 t25
t27 = xor t20 t21
t28 = xor t23 t25
t29 = and t28 t27
t30 = and t26 t24
t31 = and t20 t23
t32 = and t27 t31
t33 = xor t27 t25
t34 = and t21 t22
t35 = and t24 t34
t36 = xor t24 t25
t37 = xor t21 t29
t38 = xor t32 t33
t39 = xor t23 t30
t40 = xor t35 t36
t41 = xor t38 t40
t42 = xor t37 t39
t43 = xor t37 t38
t44 = xor t39 t40
t45 = xor t42 t41
y0 = and t44 x4
y1 = and t40 x5
y2 = and t39 x20
y3 = and t43 x11
y4 = and t38 x6
y5 = and t37 x12
y6 = and t42 x10
y7 = and t45 x19
y8 = and t41 x7
y9 = and t44 x8
y10 = and t40 x16
y11 = and t39 x13
y12 = and t43 x2
y13 = and t38 x15
y14 = and t37 x14
y15 = and t42 x0
y16 = and t45 x3
y17 = and t41 x1
)nl";

const char* const kAesTop = R"nl(
inputs 8
outputs y0 y1 y2 y3 y4 y5 y6 y7 y8 y9 y10 y11 y12 y13 y14 y15 y16 y17 y18 y19 x0
y0 = xor x7 x4
y1 = xor x7 x2
y2 = xor x7 x1
y3 = xor x4 x2
t0 = xor x3 x1
y4 = xor y0 t0
t1 = xor x6 x5
y5 = xor x0 y4
y6 = xor x0 t1
y7 = xor y4 t1
t2 = xor x6 x2
t3 = xor x5 x2
y8 = xor y2 y3
y9 = xor y4 t2
y10 = xor t0 t2
y11 = xor t0 t3
y12 = xor y6 y11
t4 = xor x4 x0
y13 = xor t1 t4
y14 = xor y0 y13
t5 = xor x1 x0
y15 = xor t1 t5
y16 = xor y1 y15
y17 = xor y1 y7
y18 = xor y14 y12
y19 = xor y0 t3
)nl";

const char* const kAesBottom = R"nl(
inputs 18
outputs y0 y1 y2 y3 y4 y5 y6 y7
t0 = xor x15 x16
t1 = xor x4 x10
t2 = xor x0 x2
t3 = xor x1 x9
t4 = xor x8 x12
t5 = xor x3 x15
t6 = xor x16 t5
t7 = xor x0 t3
t8 = xor x5 x13
t9 = xor x6 x7
t10 = xor x7 t4
t11 = xor x14 t2
t12 = xor x2 x5
t13 = xor x4 t0
t14 = xor x6 x15
t15 = xor x9 t1
t16 = xor x10 t0
t17 = xor x11 t1
t18 = xor x12 t8
t19 = xor x17 t4
t20 = xor t0 t1
t21 = xor t1 t7
t22 = xor t3 t12
t23 = xor t18 t2
t24 = xor t15 t9
t25 = xor t6 t10
t26 = xor t7 t9
t27 = xor t8 t10
t28 = xor t11 t14
t29 = xor t11 t17
y7 = xor t6 t24
y6 = xnor t16 t26
y5 = xnor t19 t28
y4 = xor t6 t21
y3 = xor t20 t22
y2 = xor t25 t29
y1 = xnor t13 t27
y0 = xnor t6 t23
)nl";

const char* const kAesInvTop = R"nl(
inputs 8
outputs y0 y1 y2 y3 y4 y5 y6 y7 y8 y9 y10 y11 y12 y13 y14 y15 y16 y17 y18 y19 y20
y16 = xor x7 x4
y15 = xnor x6 x4
y1 = xnor x7 x6
y0 = xor x4 x3
y17 = xnor x3 x0
t0 = xor x1 x0
y5 = xnor x6 y16
y13 = xor y15 t0
y6 = xnor x0 y0
y7 = xor y1 y17
y8 = xor y1 t0
y2 = xor y0 t0
y18 = xnor x5 y0
t1 = xor x6 x1
y12 = xnor x5 y13
y14 = xor y17 t1
y3 = xor x3 y5
t2 = xnor x5 x2
t3 = xnor x2 x1
t4 = xnor x5 x3
y20 = xor x7 t2
y4 = xor y15 t2
y11 = xor t1 t4
y19 = xor y0 t3
y9 = xor y7 t3
y10 = xor y0 y9
)nl";

const char* const kAesInvBottom = R"nl(
inputs 18
outputs y0 y1 y2 y3 y4 y5 y6 y7
t0 = xor x6 x15
t1 = xor x12 x13
t2 = xor x8 x16
t3 = xor x1 x4
t4 = xor x2 x10
t5 = xor x0 x5
t6 = xor x3 x14
t7 = xor t0 t1
t8 = xor x4 x7
t9 = xor x9 x17
t10 = xor x11 t4
t11 = xor t0 t3
t12 = xor x0 x2
t13 = xor x3 x5
t14 = xor x3 x16
t15 = xor x8 x13
t16 = xor x11 x15
t17 = xor x12 t2
t18 = xor x17 t5
t19 = xor t2 t3
t20 = xor t4 t6
t21 = xor t2 t7
t22 = xor t7 t8
t23 = xor t5 t7
t24 = xor t6 t10
t25 = xor t9 t11
t26 = xor t10 t18
t27 = xor t11 t24
t28 = xor t15 t20
y7 = xor t13 t21
y6 = xor t25 t28
y5 = xor t17 t27
y4 = xor t12 t21
y3 = xor t22 t26
y2 = xor t19 t23
y1 = xor t14 t22
y0 = xor t9 t16
)nl";

const char* const kSm4Top = R"nl(
inputs 8
outputs y0 y1 y2 y3 y4 y5 y6 y7 y8 y9 y10 y11 y12 y13 y14 y15 y16 y17 y18 y19 y20
y8 = xor x4 x6
t0 = xnor x0 x3
t1 = xor x2 x5
y18 = xor y8 t1
t2 = xnor x4 x7
t3 = xnor x2 t0
y11 = xor x3 t2
t4 = xor x0 x1
y16 = xnor y18 t4
y1 = xnor x6 t2
y12 = xor x1 x3
y14 = xor t0 y16
t5 = xnor t3 y11
y19 = xor x3 y18
y15 = xor y16 y1
y5 = xor x1 t3
y6 = xor y11 y12
y10 = xnor y18 t5
y4 = xor y18 t2
y13 = xnor t1 t4
y0 = xor y8 t0
y3 = xor x7 t0
y17 = xnor x6 t3
y7 = xor t2 t3
y20 = xor y5 y4
y2 = xor y14 y15
y9 = xor y10 y0
)nl";

const char* const kSm4Bottom = R"nl(
inputs 18
outputs y0 y1 y2 y3 y4 y5 y6 y7
t0 = xor x8 x17
t1 = xor x6 x12
t2 = xor x1 t0
t3 = xor x2 t2
t4 = xnor x7 t3
t5 = xor x14 x15
t6 = xor x11 x16
t7 = xor x5 t0
t8 = xor x5 t5
t9 = xnor x0 t1
t10 = xor x7 x13
t11 = xor x3 x6
t12 = xor x4 t9
t13 = xnor x9 t11
t14 = xor t2 t12
t15 = xor x11 t13
t16 = xor x8 t15
t17 = xor x10 t4
y5 = xnor t8 t14
y1 = xor t6 t17
t18 = xor x15 t7
y4 = xor t15 t18
t19 = xor x12 t4
y0 = xor t5 t19
t20 = xor t4 t14
t21 = xor t16 t20
y6 = xor x14 t21
t22 = xor x13 t8
t23 = xnor x16 t16
y3 = xor t22 t23
t24 = xor x16 t5
t25 = xor x4 t18
t26 = xor t24 t25
y2 = xor t10 t26
t27 = xor x1 t9
t28 = xor x9 t27
t29 = xor t10 t28
y7 = xor x10 t29
)nl";

}  // namespace saes32::circuit_data
