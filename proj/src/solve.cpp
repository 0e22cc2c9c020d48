#include "gma/solve.hpp"

#include <cmath>

namespace gma {

namespace {
double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
}  // namespace

std::vector<double> cg_solve(const std::function<std::vector<double>(const std::vector<double>&)>& apply_a,
                             const std::vector<double>& b, const CgOptions& opts, CgReport* report) {
  std::vector<double> x(b.size(), 0.0);
  std::vector<double> r = b;
  std::vector<double> p = r;
  double rr = dot(r, r);
  double b_norm = std::sqrt(rr);
  int it = 0;
  if (b_norm > 0.0) {
    while (it < opts.max_iter && std::sqrt(rr) > opts.tol * b_norm) {
      std::vector<double> ap = apply_a(p);
      double alpha = rr / dot(p, ap);
      for (size_t i = 0; i < x.size(); ++i) {
        x[i] += alpha * p[i];
        r[i] -= alpha * ap[i];
      }
      double rr_next = dot(r, r);
      double beta = rr_next / rr;
      rr = rr_next;
      for (size_t i = 0; i < p.size(); ++i) p[i] = r[i] + beta * p[i];
      ++it;
    }
  }
  if (report) {
    report->iterations = it;
    report->relative_residual = b_norm > 0.0 ? std::sqrt(rr) / b_norm : 0.0;
  }
  return x;
}

}  // namespace gma
