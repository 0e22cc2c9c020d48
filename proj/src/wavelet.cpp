#include "gma/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gma/fft.hpp"

namespace gma {

namespace {

// Daubechies extremal-phase lowpass taps.
const std::vector<double> kHaar = {0.7071067811865476, 0.7071067811865476};
const std::vector<double> kDb4 = {0.48296291314469025, 0.8365163037378079, 0.22414386804185735,
                                  -0.12940952255092145};
const std::vector<double> kDb8 = {0.23037781330885523,   0.7148465705525415,  0.6308807679295904,
                                  -0.02798376941698385,  -0.18703481171888114, 0.030841381835986965,
                                  0.032883011666982945,  -0.010597401784997278};

std::vector<double> mirror(const std::vector<double>& h) {
  std::vector<double> g(h.size());
  for (size_t k = 0; k < h.size(); ++k)
    g[k] = (k % 2 == 0 ? 1.0 : -1.0) * h[h.size() - 1 - k];
  return g;
}

void check_depth(int n, int j_coarse, const WaveletFilter& f) {
  if (!is_pow2(n)) throw sizing_error("signal length must be a power of two, got " + std::to_string(n));
  if (j_coarse < 0) throw sizing_error("coarse level must be nonnegative");
  int j_max = log2_int(n);
  if (j_coarse > j_max)
    throw sizing_error("coarse level " + std::to_string(j_coarse) + " exceeds log2(n) = " +
                       std::to_string(j_max));
  if (j_coarse < j_max && (2 << j_coarse) < f.taps())
    throw sizing_error("filter " + f.name + " (" + std::to_string(f.taps()) +
                       " taps) is longer than the signal at level " + std::to_string(j_coarse));
}

void dwt_step(const double* in, int m, double* approx, double* det, const WaveletFilter& f) {
  const int taps = f.taps();
  for (int i = 0; i < m / 2; ++i) {
    double a = 0.0, d = 0.0;
    for (int k = 0; k < taps; ++k) {
      double x = in[(2 * i + k) % m];
      a += f.lowpass[k] * x;
      d += f.highpass[k] * x;
    }
    approx[i] = a;
    det[i] = d;
  }
}

void idwt_step(const double* approx, const double* det, int m, double* out,
               const WaveletFilter& f) {
  const int taps = f.taps();
  std::fill(out, out + m, 0.0);
  for (int i = 0; i < m / 2; ++i)
    for (int k = 0; k < taps; ++k)
      out[(2 * i + k) % m] += f.lowpass[k] * approx[i] + f.highpass[k] * det[i];
}

double weight_exponent(double p, double s, double shift) {
  double p_inv = std::isinf(p) ? 0.0 : 1.0 / p;
  return s - shift * (p_inv - 0.5);
}

void check_pq(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0)) throw std::invalid_argument("sequence norm needs p, q > 0");
}

}  // namespace

WaveletFilter make_filter(const std::string& name) {
  WaveletFilter f;
  f.name = name;
  if (name == "haar") {
    f.lowpass = kHaar;
    f.vanishing_moments = 1;
  } else if (name == "db4") {
    f.lowpass = kDb4;
    f.vanishing_moments = 2;
  } else if (name == "db8") {
    f.lowpass = kDb8;
    f.vanishing_moments = 4;
  } else {
    throw parse_error("unknown wavelet filter '" + name + "' (expected haar, db4 or db8)");
  }
  f.highpass = mirror(f.lowpass);
  return f;
}

size_t WaveletCoeffs1D::total() const {
  size_t t = coarse.size();
  for (const auto& d : detail) t += d.size();
  return t;
}

size_t WaveletCoeffs2D::total() const {
  size_t t = coarse.size();
  for (const auto& b : detail) t += b.hl.size() + b.lh.size() + b.hh.size();
  return t;
}

WaveletCoeffs1D dwt1(const std::vector<double>& signal, const WaveletFilter& f, int j_coarse) {
  const int n = static_cast<int>(signal.size());
  check_depth(n, j_coarse, f);
  WaveletCoeffs1D c;
  c.n = n;
  c.j_coarse = j_coarse;
  std::vector<double> cur = signal;
  std::vector<double> approx, det;
  while (static_cast<int>(cur.size()) > (1 << j_coarse)) {
    int m = static_cast<int>(cur.size());
    approx.resize(m / 2);
    det.resize(m / 2);
    dwt_step(cur.data(), m, approx.data(), det.data(), f);
    c.detail.push_back(det);
    cur = approx;
  }
  std::reverse(c.detail.begin(), c.detail.end());
  c.coarse = cur;
  return c;
}

std::vector<double> idwt1(const WaveletCoeffs1D& c, const WaveletFilter& f) {
  check_depth(c.n, c.j_coarse, f);
  std::vector<double> cur = c.coarse;
  std::vector<double> next;
  for (const auto& det : c.detail) {
    int m = static_cast<int>(cur.size()) * 2;
    if (det.size() != cur.size()) throw sizing_error("detail level size mismatch");
    next.resize(m);
    idwt_step(cur.data(), det.data(), m, next.data(), f);
    cur = next;
  }
  if (static_cast<int>(cur.size()) != c.n) throw sizing_error("coefficient sizes do not add up to n");
  return cur;
}

WaveletCoeffs2D dwt2(const Image& img, const WaveletFilter& f, int j_coarse) {
  const int n = img.n;
  check_depth(n, j_coarse, f);
  WaveletCoeffs2D c;
  c.n = n;
  c.j_coarse = j_coarse;
  std::vector<double> cur = img.data;  // active m x m block, row-major
  int m = n;
  while (m > (1 << j_coarse)) {
    std::vector<double> rowed(static_cast<size_t>(m) * m);
#pragma omp parallel for if (m >= 128)
    for (int y = 0; y < m; ++y)
      dwt_step(cur.data() + static_cast<size_t>(y) * m, m, rowed.data() + static_cast<size_t>(y) * m,
               rowed.data() + static_cast<size_t>(y) * m + m / 2, f);
    std::vector<double> coled(static_cast<size_t>(m) * m);
#pragma omp parallel for if (m >= 128)
    for (int x = 0; x < m; ++x) {
      std::vector<double> col(m), a(m / 2), d(m / 2);
      for (int y = 0; y < m; ++y) col[y] = rowed[static_cast<size_t>(y) * m + x];
      dwt_step(col.data(), m, a.data(), d.data(), f);
      for (int y = 0; y < m / 2; ++y) {
        coled[static_cast<size_t>(y) * m + x] = a[y];
        coled[static_cast<size_t>(y + m / 2) * m + x] = d[y];
      }
    }
    int h = m / 2;
    Band2 band;
    band.hl.resize(static_cast<size_t>(h) * h);
    band.lh.resize(static_cast<size_t>(h) * h);
    band.hh.resize(static_cast<size_t>(h) * h);
    std::vector<double> ll(static_cast<size_t>(h) * h);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < h; ++x) {
        ll[static_cast<size_t>(y) * h + x] = coled[static_cast<size_t>(y) * m + x];
        band.hl[static_cast<size_t>(y) * h + x] = coled[static_cast<size_t>(y) * m + x + h];
        band.lh[static_cast<size_t>(y) * h + x] = coled[static_cast<size_t>(y + h) * m + x];
        band.hh[static_cast<size_t>(y) * h + x] = coled[static_cast<size_t>(y + h) * m + x + h];
      }
    c.detail.push_back(std::move(band));
    cur = std::move(ll);
    m = h;
  }
  std::reverse(c.detail.begin(), c.detail.end());
  c.coarse = cur;
  return c;
}

Image idwt2(const WaveletCoeffs2D& c, const WaveletFilter& f) {
  check_depth(c.n, c.j_coarse, f);
  std::vector<double> cur = c.coarse;
  int m = 1 << c.j_coarse;
  for (const auto& band : c.detail) {
    int h = m;
    m *= 2;
    std::vector<double> packed(static_cast<size_t>(m) * m);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < h; ++x) {
        packed[static_cast<size_t>(y) * m + x] = cur[static_cast<size_t>(y) * h + x];
        packed[static_cast<size_t>(y) * m + x + h] = band.hl[static_cast<size_t>(y) * h + x];
        packed[static_cast<size_t>(y + h) * m + x] = band.lh[static_cast<size_t>(y) * h + x];
        packed[static_cast<size_t>(y + h) * m + x + h] = band.hh[static_cast<size_t>(y) * h + x];
      }
    std::vector<double> coled(static_cast<size_t>(m) * m);
#pragma omp parallel for if (m >= 128)
    for (int x = 0; x < m; ++x) {
      std::vector<double> a(m / 2), d(m / 2), col(m);
      for (int y = 0; y < m / 2; ++y) {
        a[y] = packed[static_cast<size_t>(y) * m + x];
        d[y] = packed[static_cast<size_t>(y + m / 2) * m + x];
      }
      idwt_step(a.data(), d.data(), m, col.data(), f);
      for (int y = 0; y < m; ++y) coled[static_cast<size_t>(y) * m + x] = col[y];
    }
    std::vector<double> rowed(static_cast<size_t>(m) * m);
#pragma omp parallel for if (m >= 128)
    for (int y = 0; y < m; ++y)
      idwt_step(coled.data() + static_cast<size_t>(y) * m,
                coled.data() + static_cast<size_t>(y) * m + m / 2, m,
                rowed.data() + static_cast<size_t>(y) * m, f);
    cur = std::move(rowed);
  }
  if (m != c.n) throw sizing_error("coefficient sizes do not add up to n x n");
  Image img(c.n);
  img.data = cur;
  return img;
}

std::vector<double> flatten(const WaveletCoeffs1D& c) {
  std::vector<double> out;
  out.reserve(c.total());
  out.insert(out.end(), c.coarse.begin(), c.coarse.end());
  for (const auto& d : c.detail) out.insert(out.end(), d.begin(), d.end());
  return out;
}

WaveletCoeffs1D unflatten1(const std::vector<double>& vals, int n, int j_coarse) {
  WaveletCoeffs1D c;
  c.n = n;
  c.j_coarse = j_coarse;
  size_t pos = 0;
  auto take = [&](size_t count) {
    if (pos + count > vals.size()) throw sizing_error("flat coefficient vector too short");
    std::vector<double> v(vals.begin() + pos, vals.begin() + pos + count);
    pos += count;
    return v;
  };
  c.coarse = take(static_cast<size_t>(1) << j_coarse);
  for (int j = j_coarse; (1 << j) < n; ++j) c.detail.push_back(take(static_cast<size_t>(1) << j));
  if (pos != vals.size()) throw sizing_error("flat coefficient vector too long");
  return c;
}

std::vector<double> flatten(const WaveletCoeffs2D& c) {
  std::vector<double> out;
  out.reserve(c.total());
  out.insert(out.end(), c.coarse.begin(), c.coarse.end());
  for (const auto& b : c.detail) {
    out.insert(out.end(), b.hl.begin(), b.hl.end());
    out.insert(out.end(), b.lh.begin(), b.lh.end());
    out.insert(out.end(), b.hh.begin(), b.hh.end());
  }
  return out;
}

WaveletCoeffs2D unflatten2(const std::vector<double>& vals, int n, int j_coarse) {
  WaveletCoeffs2D c;
  c.n = n;
  c.j_coarse = j_coarse;
  size_t pos = 0;
  auto take = [&](size_t count) {
    if (pos + count > vals.size()) throw sizing_error("flat coefficient vector too short");
    std::vector<double> v(vals.begin() + pos, vals.begin() + pos + count);
    pos += count;
    return v;
  };
  c.coarse = take((static_cast<size_t>(1) << j_coarse) * (1 << j_coarse));
  for (int j = j_coarse; (1 << j) < n; ++j) {
    size_t m = (static_cast<size_t>(1) << j) * (1 << j);
    Band2 b;
    b.hl = take(m);
    b.lh = take(m);
    b.hh = take(m);
    c.detail.push_back(std::move(b));
  }
  if (pos != vals.size()) throw sizing_error("flat coefficient vector too long");
  return c;
}

std::vector<LevelSpan> levels_of(const WaveletCoeffs1D& c) {
  std::vector<LevelSpan> out;
  out.push_back({c.j_coarse, {c.coarse.data(), c.coarse.size()}});
  for (int l = 0; l < c.levels(); ++l)
    out.push_back({c.level_j(l), {c.detail[l].data(), c.detail[l].size()}});
  return out;
}

std::vector<LevelSpan> levels_of(const WaveletCoeffs2D& c) {
  std::vector<LevelSpan> out;
  out.push_back({c.j_coarse, {c.coarse.data(), c.coarse.size()}});
  for (int l = 0; l < c.levels(); ++l) {
    const Band2& b = c.detail[l];
    out.push_back({c.level_j(l), {b.hl.data(), b.hl.size()}});
    out.push_back({c.level_j(l), {b.lh.data(), b.lh.size()}});
    out.push_back({c.level_j(l), {b.hh.data(), b.hh.size()}});
  }
  return out;
}

double besov_seqnorm(const std::vector<LevelSpan>& levels, double p, double q, double s,
                     double shift) {
  check_pq(p, q);
  int j_min = levels.empty() ? 0 : levels.front().j;
  int j_max = j_min;
  for (const auto& lv : levels) {
    j_min = std::min(j_min, lv.j);
    j_max = std::max(j_max, lv.j);
  }
  const double w_exp = weight_exponent(p, s, shift);
  double outer = 0.0;
  for (int j = j_min; j <= j_max; ++j) {
    double inner = 0.0;
    bool any = false;
    for (const auto& lv : levels) {
      if (lv.j != j) continue;
      any = true;
      for (double v : lv.vals) {
        double a = std::abs(v);
        if (std::isinf(p))
          inner = std::max(inner, a);
        else
          inner += std::pow(a, p);
      }
    }
    if (!any) continue;
    double lp = std::isinf(p) ? inner : std::pow(inner, 1.0 / p);
    double term = std::pow(2.0, j * w_exp) * lp;
    if (std::isinf(q))
      outer = std::max(outer, term);
    else
      outer += std::pow(term, q);
  }
  return std::isinf(q) ? outer : std::pow(outer, 1.0 / q);
}

namespace {

// Shared pointwise evaluation: cells is the number of fine cells per
// axis, dim the ambient dimension; visit(cell index) must return the
// per-cell aggregate (the inner q-sum already raised to 1/q).
template <typename Visit>
double lp_over_cells(double p, size_t cell_count, double cell_measure, Visit visit) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (size_t i = 0; i < cell_count; ++i) m = std::max(m, visit(i));
    return m;
  }
  double acc = 0.0;
  for (size_t i = 0; i < cell_count; ++i) acc += std::pow(visit(i), p) * cell_measure;
  return std::pow(acc, 1.0 / p);
}

double q_accumulate(double q, const std::vector<double>& terms) {
  if (std::isinf(q)) {
    double m = 0.0;
    for (double t : terms) m = std::max(m, t);
    return m;
  }
  double acc = 0.0;
  for (double t : terms) acc += std::pow(t, q);
  return std::pow(acc, 1.0 / q);
}

}  // namespace

double triebel_seqnorm(const WaveletCoeffs1D& c, double p, double q, double s, double shift) {
  check_pq(p, q);
  const double w_exp = weight_exponent(p, s, shift);
  int j_fine = c.levels() ? c.level_j(c.levels() - 1) : c.j_coarse;
  const int m = 1 << j_fine;
  auto levels = levels_of(c);
  std::vector<double> terms;
  return lp_over_cells(p, m, 1.0 / m, [&](size_t i) {
    terms.clear();
    for (const auto& lv : levels) {
      int cnt = static_cast<int>(lv.vals.size());
      size_t k = i * cnt / m;
      double indicator = std::sqrt(static_cast<double>(cnt));  // 2^{j/2} for 2^j cells
      terms.push_back(std::pow(2.0, lv.j * w_exp) * std::abs(lv.vals[k]) * indicator);
    }
    return q_accumulate(q, terms);
  });
}

double triebel_seqnorm(const WaveletCoeffs2D& c, double p, double q, double s, double shift) {
  check_pq(p, q);
  const double w_exp = weight_exponent(p, s, shift);
  int j_fine = c.levels() ? c.level_j(c.levels() - 1) : c.j_coarse;
  const int m = 1 << j_fine;
  auto levels = levels_of(c);
  std::vector<double> terms;
  return lp_over_cells(p, static_cast<size_t>(m) * m, 1.0 / (static_cast<double>(m) * m),
                       [&](size_t cell) {
                         int x = static_cast<int>(cell % m), y = static_cast<int>(cell / m);
                         terms.clear();
                         for (const auto& lv : levels) {
                           int side = static_cast<int>(std::lround(std::sqrt(
                               static_cast<double>(lv.vals.size()))));
                           int kx = x * side / m, ky = y * side / m;
                           double indicator = side;  // 2^{j d/2} with d = 2
                           terms.push_back(std::pow(2.0, lv.j * w_exp) *
                                           std::abs(lv.vals[static_cast<size_t>(ky) * side + kx]) *
                                           indicator);
                         }
                         return q_accumulate(q, terms);
                       });
}

std::vector<double> hard_threshold(std::vector<double> vals, double lambda) {
  for (double& v : vals)
    if (std::abs(v) < lambda) v = 0.0;
  return vals;
}

NTermApprox nterm_approx(const std::vector<double>& vals, size_t n_terms) {
  NTermApprox out;
  out.kept.assign(vals.size(), 0.0);
  std::vector<size_t> order(vals.size());
  std::iota(order.begin(), order.end(), 0);
  size_t keep = std::min(n_terms, vals.size());
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return std::abs(vals[a]) > std::abs(vals[b]); });
  double err2 = 0.0;
  for (size_t r = 0; r < order.size(); ++r) {
    size_t i = order[r];
    if (r < keep)
      out.kept[i] = vals[i];
    else
      err2 += vals[i] * vals[i];
  }
  out.terms = keep;
  out.l2_error = std::sqrt(err2);
  return out;
}

QuantizedCode quantize(const std::vector<double>& vals, double quantum, size_t keep) {
  if (!(quantum > 0.0)) throw std::invalid_argument("quantum must be positive");
  QuantizedCode code;
  code.quantum = quantum;
  code.total = vals.size();
  std::vector<size_t> order(vals.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return std::abs(vals[a]) > std::abs(vals[b]); });
  size_t m = std::min(keep, vals.size());
  std::vector<size_t> chosen(order.begin(), order.begin() + m);
  std::sort(chosen.begin(), chosen.end());
  for (size_t i : chosen) {
    code.index.push_back(i);
    code.level.push_back(static_cast<int64_t>(std::floor(vals[i] / quantum)));
  }
  return code;
}

std::vector<double> dequantize(const QuantizedCode& code) {
  std::vector<double> out(code.total, 0.0);
  for (size_t i = 0; i < code.index.size(); ++i)
    out[code.index[i]] = static_cast<double>(code.level[i]) * code.quantum;
  return out;
}

uint64_t code_bits(const QuantizedCode& code) {
  uint64_t idx_bits = 1;
  while ((1ULL << idx_bits) < std::max<uint64_t>(code.total, 2)) ++idx_bits;
  uint64_t bits = 0;
  for (int64_t lv : code.level) {
    uint64_t mag = static_cast<uint64_t>(lv < 0 ? -lv : lv) + 1;
    uint64_t len = 0;
    while ((1ULL << (len + 1)) <= mag) ++len;
    bits += idx_bits + 1 + (2 * len + 1);
  }
  return bits;
}

std::vector<double> apply_kernel(CzoKernel kernel, const std::vector<double>& signal) {
  const int n = static_cast<int>(signal.size());
  FftPlan plan(n);
  std::vector<cplx> buf(n);
  for (int i = 0; i < n; ++i) buf[i] = cplx{signal[i], 0.0};
  fft(plan, buf, false);
  for (int i = 0; i < n; ++i) {
    int k = freq_of_index(i, n);
    cplx m;
    switch (kernel) {
      case CzoKernel::Identity:
        m = cplx{1.0, 0.0};
        break;
      case CzoKernel::Hilbert:
        // zero at DC and at the unpaired Nyquist bin keeps real signals real
        if (k == 0 || k == -n / 2)
          m = cplx{0.0, 0.0};
        else
          m = cplx{0.0, k > 0 ? -1.0 : 1.0};
        break;
      case CzoKernel::HalfIntegration:
        m = cplx{k == 0 ? 1.0 : 1.0 / std::sqrt(std::abs(static_cast<double>(k))), 0.0};
        break;
    }
    buf[i] *= m;
  }
  fft(plan, buf, true);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = buf[i].real();
  return out;
}

DenseOperator czo_matrix(CzoKernel kernel, int n, const WaveletFilter& f, int j_coarse) {
  check_depth(n, j_coarse, f);
  DenseOperator op;
  op.dim = static_cast<size_t>(n);
  op.a.assign(op.dim * op.dim, 0.0);
#pragma omp parallel for
  for (int c = 0; c < n; ++c) {
    std::vector<double> unit(n, 0.0);
    unit[c] = 1.0;
    auto col = flatten(dwt1(apply_kernel(kernel, idwt1(unflatten1(unit, n, j_coarse), f)), f,
                            j_coarse));
    for (int r = 0; r < n; ++r) op.a[static_cast<size_t>(r) * n + c] = col[r];
  }
  return op;
}

std::vector<double> dense_apply(const DenseOperator& op, const std::vector<double>& x) {
  if (x.size() != op.dim) throw sizing_error("operator/vector dimension mismatch");
  std::vector<double> y(op.dim, 0.0);
#pragma omp parallel for
  for (size_t r = 0; r < op.dim; ++r) {
    double acc = 0.0;
    const double* row = op.a.data() + r * op.dim;
    for (size_t c = 0; c < op.dim; ++c) acc += row[c] * x[c];
    y[r] = acc;
  }
  return y;
}

SparseApply band_truncate_apply(const DenseOperator& op, double eps, const std::vector<double>& x) {
  if (x.size() != op.dim) throw sizing_error("operator/vector dimension mismatch");
  if (eps < 0.0) throw std::invalid_argument("eps must be nonnegative");
  const double tau = eps / static_cast<double>(op.dim);
  SparseApply out;
  out.y.assign(op.dim, 0.0);
  size_t kept = 0;
#pragma omp parallel for reduction(+ : kept)
  for (size_t r = 0; r < op.dim; ++r) {
    double acc = 0.0;
    const double* row = op.a.data() + r * op.dim;
    for (size_t c = 0; c < op.dim; ++c) {
      if (std::abs(row[c]) >= tau) {
        acc += row[c] * x[c];
        ++kept;
      }
    }
    out.y[r] = acc;
  }
  out.kept = kept;
  return out;
}

}  // namespace gma
