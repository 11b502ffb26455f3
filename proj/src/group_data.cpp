#include <cstddef>

namespace refl {

const char* kG4GeneratorData = R"gens(
group g4
rank 2
relation ABA=BAB
matrix
1 + 0*z + 0*z^2 + 0*z^3; 0 + 0*z + 0*z^2 + 0*z^3
0 + 0*z + 0*z^2 + 0*z^3; -1 + 0*z + 1*z^2 + 0*z^3
matrix
-1/3 + 0*z + 2/3*z^2 + 0*z^3; 0 + 0*z + -1*z^2 + 0*z^3
0 + 0*z + 2/3*z^2 + 0*z^3; 1/3 + 0*z + 1/3*z^2 + 0*z^3
)gens";

const char* kG5GeneratorData = R"gens(
group g5
rank 2
relation ABAB=BABA
matrix
1/2 + -1/2*z + -1/2*z^2 + 0*z^3; -1/2 + -1/2*z + 1/2*z^2 + 0*z^3
1/2 + -1/2*z + -1/2*z^2 + 0*z^3; 1/2 + 1/2*z + -1/2*z^2 + 0*z^3
matrix
1/2 + -1/2*z + -1/2*z^2 + 0*z^3; -1/2 + 1/2*z + 1/2*z^2 + 0*z^3
1/2 + 1/2*z + -1/2*z^2 + 0*z^3; 1/2 + 1/2*z + -1/2*z^2 + 0*z^3
)gens";

const char* kG25GeneratorData = R"gens(
group g25
rank 3
relation ABA=BAB
relation CBC=BCB
relation AC=CA
matrix
-1 + 0*z + 1*z^2 + 0*z^3; 0 + 0*z + 0*z^2 + 0*z^3; 0 + 0*z + 0*z^2 + 0*z^3
0 + 0*z + 0*z^2 + 0*z^3; 1 + 0*z + 0*z^2 + 0*z^3; 0 + 0*z + 0*z^2 + 0*z^3
0 + 0*z + 0*z^2 + 0*z^3; 0 + 0*z + 0*z^2 + 0*z^3; 1 + 0*z + 0*z^2 + 0*z^3
matrix
1/3 + 0*z + 1/3*z^2 + 0*z^3; -2/3 + 0*z + 1/3*z^2 + 0*z^3; -2/3 + 0*z + 1/3*z^2 + 0*z^3
-2/3 + 0*z + 1/3*z^2 + 0*z^3; 1/3 + 0*z + 1/3*z^2 + 0*z^3; -2/3 + 0*z + 1/3*z^2 + 0*z^3
-2/3 + 0*z + 1/3*z^2 + 0*z^3; -2/3 + 0*z + 1/3*z^2 + 0*z^3; 1/3 + 0*z + 1/3*z^2 + 0*z^3
matrix
1 + 0*z + 0*z^2 + 0*z^3; 0 + 0*z + 0*z^2 + 0*z^3; 0 + 0*z + 0*z^2 + 0*z^3
0 + 0*z + 0*z^2 + 0*z^3; -1 + 0*z + 1*z^2 + 0*z^3; 0 + 0*z + 0*z^2 + 0*z^3
0 + 0*z + 0*z^2 + 0*z^3; 0 + 0*z + 0*z^2 + 0*z^3; 1 + 0*z + 0*z^2 + 0*z^3
)gens";

}  // namespace refl
