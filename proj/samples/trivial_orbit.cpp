// Prints the block orbit of the trivial osp(k|2)-weight and the dimension
// bounds of the corresponding indecomposable projectives.
//
//   trivial_orbit [k] [n]

#include <cstdlib>
#include <iostream>

#include "osp/osp.hpp"

int main(int argc, char** argv) {
  const int k = argc > 1 ? std::atoi(argv[1]) : 6;
  const int n = argc > 2 ? std::atoi(argv[2]) : 6;
  try {
    const osp::TrivialResolution res(k);
    std::cout << "osp(" << k << "|2), rho = " << osp::rho_of(k) << "\n";
    for (int i = -n; i <= n; ++i) {
      const osp::Weight w = res.orbit().at(i);
      std::cout << "lambda^(" << i << ") = " << w;
      if (i >= 0) std::cout << "   dim L0 = " << res.bounds(i).lower;
      std::cout << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
