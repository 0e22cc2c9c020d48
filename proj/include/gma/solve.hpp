#ifndef GMA_SOLVE_HPP
#define GMA_SOLVE_HPP

#include <functional>
#include <vector>

namespace gma {

struct CgOptions {
  double tol = 1e-10;  // relative residual target
  int max_iter = 50;
};

struct CgReport {
  int iterations = 0;
  double relative_residual = 0.0;
};

// Conjugate gradients for s.p.d. apply_a, starting from x = 0.
std::vector<double> cg_solve(const std::function<std::vector<double>(const std::vector<double>&)>& apply_a,
                             const std::vector<double>& b, const CgOptions& opts, CgReport* report);

}  // namespace gma

#endif
