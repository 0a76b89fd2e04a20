#include "eigensym/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "eigensym/error.hpp"
#include "eigensym/rng.hpp"

namespace eigensym {

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_columns(int rows, std::span<const ComplexVector> columns) {
  ComplexMatrix m(rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(columns[c].size()) != rows)
      throw Error(ErrorKind::DimensionMismatch, "column length differs from row count");
    for (int r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

ComplexVector ComplexMatrix::column(int c) const {
  ComplexVector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

ComplexVector ComplexMatrix::row(int r) const {
  return ComplexVector(data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
                       data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : data_) s += std::norm(x);
  return std::sqrt(s);
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  ComplexMatrix m(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Complex a = (*this)(r, k);
      if (a == Complex{}) continue;
      for (int c = 0; c < other.cols_; ++c) m(r, c) += a * other(k, c);
    }
  return m;
}

ComplexVector ComplexMatrix::operator*(const ComplexVector& v) const {
  if (cols_ != static_cast<int>(v.size())) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  ComplexVector out(rows_);
  for (int r = 0; r < rows_; ++r) {
    Complex s = 0.0;
    for (int c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  ComplexMatrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += other.data_[i];
  return m;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
  ComplexMatrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= other.data_[i];
  return m;
}

ComplexMatrix ComplexMatrix::operator*(Complex s) const {
  ComplexMatrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

Complex inner(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "inner product");
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * std::conj(v[i]);
  return s;
}

double norm(const ComplexVector& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

ComplexVector operator+(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector sum");
  ComplexVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ComplexVector operator-(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector difference");
  ComplexVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

ComplexVector operator*(Complex s, const ComplexVector& v) {
  ComplexVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

ComplexVector to_complex(std::span<const double> v) { return ComplexVector(v.begin(), v.end()); }

namespace {

// Subtracts the components of `v` along `basis`, twice.
void orthogonalize_against(const std::vector<ComplexVector>& basis, ComplexVector& v) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      const Complex c = inner(v, b);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
    }
  }
}

}  // namespace

ComplexVector Subspace::project(const ComplexVector& v) const {
  if (static_cast<int>(v.size()) != ambient) throw Error(ErrorKind::DimensionMismatch, "projection");
  ComplexVector out(v.size());
  for (const auto& b : basis) {
    const Complex c = inner(v, b);
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += c * b[i];
  }
  return out;
}

ComplexVector Subspace::coordinates(const ComplexVector& v) const {
  ComplexVector c(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) c[k] = inner(v, basis[k]);
  return c;
}

ComplexVector Subspace::lift(const ComplexVector& coords) const {
  if (coords.size() != basis.size()) throw Error(ErrorKind::DimensionMismatch, "lift");
  ComplexVector out(ambient);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (int i = 0; i < ambient; ++i) out[i] += coords[k] * basis[k][i];
  return out;
}

ComplexMatrix Subspace::matrix() const { return ComplexMatrix::from_columns(ambient, basis); }

bool Subspace::try_extend(const ComplexVector& v) {
  if (static_cast<int>(v.size()) != ambient) throw Error(ErrorKind::DimensionMismatch, "extend");
  const double scale = norm(v);
  if (scale == 0.0) return false;
  ComplexVector r = v;
  orthogonalize_against(basis, r);
  const double rn = norm(r);
  if (rn <= tol * scale) return false;
  for (auto& x : r) x /= rn;
  basis.push_back(std::move(r));
  return true;
}

Subspace Subspace::zero(int n, double tol) { return Subspace{n, {}, tol}; }

Subspace Subspace::full(int n, double tol) {
  Subspace s{n, {}, tol};
  for (int i = 0; i < n; ++i) {
    ComplexVector e(n);
    e[i] = 1.0;
    s.basis.push_back(std::move(e));
  }
  return s;
}

Subspace orthonormalize(std::span<const ComplexVector> vectors, double tol, int ambient) {
  Subspace s;
  s.tol = tol;
  s.ambient = vectors.empty() ? ambient : static_cast<int>(vectors.front().size());
  double scale = 0.0;
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != s.ambient) throw Error(ErrorKind::DimensionMismatch, "orthonormalize");
    scale = std::max(scale, norm(v));
  }
  if (scale == 0.0) return s;
  for (const auto& v : vectors) {
    ComplexVector r = v;
    orthogonalize_against(s.basis, r);
    const double rn = norm(r);
    if (rn <= tol * scale) continue;
    for (auto& x : r) x /= rn;
    s.basis.push_back(std::move(r));
  }
  return s;
}

int numerical_rank(std::span<const ComplexVector> vectors, double tol) {
  return orthonormalize(vectors, tol).dim();
}

bool contains(const Subspace& s, const ComplexVector& v) { return contains(s, v, s.tol); }

bool contains(const Subspace& s, const ComplexVector& v, double tol) {
  const double vn = norm(v);
  if (vn == 0.0) return true;
  return norm(v - s.project(v)) <= tol * vn;
}

Subspace nullspace(const ComplexMatrix& m, double tol, double scale) {
  const int cols = m.cols();
  const double threshold = tol * std::max(m.frobenius_norm(), scale);

  // Column-pivoted Gram-Schmidt on the conjugated rows: x is in the kernel
  // iff it is orthogonal to every conj(row).
  std::vector<ComplexVector> residual;
  residual.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    ComplexVector row = m.row(r);
    for (auto& x : row) x = std::conj(x);
    residual.push_back(std::move(row));
  }
  std::vector<ComplexVector> rowspace;
  std::vector<bool> used(residual.size(), false);
  while (static_cast<int>(rowspace.size()) < cols) {
    int best = -1;
    double best_norm = threshold;
    for (std::size_t k = 0; k < residual.size(); ++k) {
      if (used[k]) continue;
      const double rn = norm(residual[k]);
      if (rn > best_norm) {
        best_norm = rn;
        best = static_cast<int>(k);
      }
    }
    if (best < 0) break;
    used[best] = true;
    ComplexVector q = residual[best];
    orthogonalize_against(rowspace, q);
    const double qn = norm(q);
    if (qn <= threshold) continue;
    for (auto& x : q) x /= qn;
    for (std::size_t k = 0; k < residual.size(); ++k) {
      if (used[k]) continue;
      const Complex c = inner(residual[k], q);
      for (int i = 0; i < cols; ++i) residual[k][i] -= c * q[i];
    }
    rowspace.push_back(std::move(q));
  }

  // Complete with standard basis vectors, largest residual first.
  Subspace kernel = Subspace::zero(cols, tol);
  std::vector<ComplexVector> all = rowspace;
  const int want = cols - static_cast<int>(rowspace.size());
  for (int added = 0; added < want; ++added) {
    ComplexVector best_vec;
    double best_norm = -1.0;
    for (int i = 0; i < cols; ++i) {
      ComplexVector e(cols);
      e[i] = 1.0;
      orthogonalize_against(all, e);
      const double en = norm(e);
      if (en > best_norm) {
        best_norm = en;
        best_vec = std::move(e);
      }
    }
    for (auto& x : best_vec) x /= best_norm;
    orthogonalize_against(all, best_vec);
    const double bn = norm(best_vec);
    for (auto& x : best_vec) x /= bn;
    all.push_back(best_vec);
    kernel.basis.push_back(std::move(best_vec));
  }
  return kernel;
}

ComplexMatrix projector(const Subspace& s) {
  ComplexMatrix p(s.ambient, s.ambient);
  for (const auto& b : s.basis)
    for (int i = 0; i < s.ambient; ++i)
      for (int j = 0; j < s.ambient; ++j) p(i, j) += b[i] * std::conj(b[j]);
  return p;
}

double max_principal_angle(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim() || a.ambient != b.ambient) return std::numbers::pi / 2;
  if (a.dim() == 0) return 0.0;
  // sin of the largest angle is the spectral norm of (I - P_b) A.
  std::vector<ComplexVector> residual;
  for (const auto& v : a.basis) residual.push_back(v - b.project(v));
  const ComplexMatrix r = ComplexMatrix::from_columns(a.ambient, residual);
  const auto eig = hermitian_eig(r.adjoint() * r);
  const double top = std::max(0.0, eig.values.back());
  return std::asin(std::min(1.0, std::sqrt(top)));
}

namespace {

inline double conj_of(double x) { return x; }
inline Complex conj_of(Complex x) { return std::conj(x); }
inline double abs_of(double x) { return std::fabs(x); }
inline double abs_of(Complex x) { return std::abs(x); }
inline double real_of(double x) { return x; }
inline double real_of(Complex x) { return x.real(); }

// Cyclic Jacobi on a dense Hermitian (or real symmetric) matrix `a`, row-major
// n x n. On return the diagonal of `a` holds the eigenvalues and the columns
// of `v` the eigenvectors. Each rotation first removes the phase of a_pq and
// then applies a real plane rotation.
template <class T>
void jacobi(int n, std::vector<T>& a, std::vector<T>& v, int max_sweeps) {
  auto at = [n](std::vector<T>& m, int r, int c) -> T& { return m[static_cast<std::size_t>(r) * n + c]; };
  v.assign(static_cast<std::size_t>(n) * n, T{});
  for (int i = 0; i < n; ++i) at(v, i, i) = T{1};

  double fro = 0.0;
  for (const auto& x : a) fro += abs_of(x) * abs_of(x);
  fro = std::sqrt(fro);
  if (fro == 0.0) return;
  const double target = 1e-14 * fro;
  const double negligible = 1e-18 * fro;

  for (int sweep = 0; sweep <= max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += abs_of(at(a, p, q)) * abs_of(at(a, p, q));
    if (std::sqrt(2.0 * off) <= target) return;
    if (sweep == max_sweeps) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const T apq = at(a, p, q);
        const double mag = abs_of(apq);
        if (mag <= negligible) continue;
        const T phase = apq / mag;

        // a <- D* a D, v <- v D with D_qq = conj(phase): makes a_pq real.
        for (int r = 0; r < n; ++r) {
          at(a, r, q) *= conj_of(phase);
          at(v, r, q) *= conj_of(phase);
        }
        for (int c = 0; c < n; ++c) at(a, q, c) *= phase;

        const double app = real_of(at(a, p, p));
        const double aqq = real_of(at(a, q, q));
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int r = 0; r < n; ++r) {
          const T arp = at(a, r, p);
          const T arq = at(a, r, q);
          at(a, r, p) = c * arp - s * arq;
          at(a, r, q) = s * arp + c * arq;
          const T vrp = at(v, r, p);
          const T vrq = at(v, r, q);
          at(v, r, p) = c * vrp - s * vrq;
          at(v, r, q) = s * vrp + c * vrq;
        }
        for (int k = 0; k < n; ++k) {
          const T apk = at(a, p, k);
          const T aqk = at(a, q, k);
          at(a, p, k) = c * apk - s * aqk;
          at(a, q, k) = s * apk + c * aqk;
        }
        at(a, p, q) = T{};
        at(a, q, p) = T{};
        at(a, p, p) = real_of(at(a, p, p));
        at(a, q, q) = real_of(at(a, q, q));
      }
    }
  }
  throw Error(ErrorKind::NoConvergence, "Jacobi sweep cap of " + std::to_string(max_sweeps) + " exceeded");
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& h, int max_sweeps) {
  if (h.rows() != h.cols()) throw Error(ErrorKind::DimensionMismatch, "hermitian_eig needs a square matrix");
  const int n = h.rows();
  std::vector<Complex> a(static_cast<std::size_t>(n) * n), v;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[static_cast<std::size_t>(r) * n + c] = h(r, c);
  jacobi(n, a, v, max_sweeps);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto diag = [&](int i) { return a[static_cast<std::size_t>(i) * n + i].real(); };
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return diag(x) < diag(y); });

  HermitianEig out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (int k = 0; k < n; ++k) {
    out.values[k] = diag(order[k]);
    for (int r = 0; r < n; ++r) out.vectors(r, k) = v[static_cast<std::size_t>(r) * n + order[k]];
  }
  return out;
}

int Spectrum::total_dim() const {
  int d = 0;
  for (const auto& p : pairs) d += p.space.dim();
  return d;
}

Spectrum symmetric_eig(int n, std::span<const double> a, double cluster_tol, int max_sweeps) {
  if (static_cast<std::size_t>(n) * n != a.size()) throw Error(ErrorKind::DimensionMismatch, "symmetric_eig");
  if (!(cluster_tol > 0)) throw Error(ErrorKind::BadParameter, "cluster_tol must be positive");
  std::vector<double> work(a.begin(), a.end()), v;
  double fro = 0.0;
  for (double x : work) fro += x * x;
  fro = std::sqrt(fro);
  jacobi(n, work, v, max_sweeps);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto diag = [&](int i) { return work[static_cast<std::size_t>(i) * n + i]; };
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return diag(x) > diag(y); });

  Spectrum spec;
  spec.cluster_tol = cluster_tol;
  const double gap = cluster_tol * std::max(1.0, fro);
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() && diag(order[end - 1]) - diag(order[end]) <= gap) ++end;
    Eigenpair pair{0.0, Subspace::zero(n)};
    for (std::size_t k = start; k < end; ++k) {
      pair.value += diag(order[k]);
      ComplexVector q(n);
      for (int r = 0; r < n; ++r) q[r] = v[static_cast<std::size_t>(r) * n + order[k]];
      pair.space.basis.push_back(std::move(q));
    }
    pair.value /= static_cast<double>(end - start);
    spec.pairs.push_back(std::move(pair));
    start = end;
  }
  return spec;
}

Spectrum symmetric_eig(const AdjacencyMatrix& a, double cluster_tol) {
  const auto real = a.to_real();
  return symmetric_eig(a.size(), real, cluster_tol);
}

std::vector<NormalEigenspace> normal_eig(const ComplexMatrix& c, double cluster_tol, double tol) {
  const int n = c.rows();
  // Generic irrational weight; roots of unity never collide under it.
  constexpr double kWeight = 0.7548776662466927;
  const ComplexMatrix adj = c.adjoint();
  const ComplexMatrix h = (c + adj) * Complex(0.5) + (c - adj) * Complex(0.0, -0.5 * kWeight);
  const auto eig = hermitian_eig(h);
  const double gap = cluster_tol * std::max(1.0, h.frobenius_norm());

  std::vector<NormalEigenspace> out;
  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n && eig.values[end] - eig.values[end - 1] <= gap) ++end;
    NormalEigenspace es{0.0, Subspace::zero(n, tol)};
    for (int k = start; k < end; ++k) {
      ComplexVector q = eig.vectors.column(k);
      es.value += inner(c * q, q);
      es.space.basis.push_back(std::move(q));
    }
    es.value /= static_cast<double>(end - start);
    out.push_back(std::move(es));
    start = end;
  }
  return out;
}

ComplexMatrix random_hermitian(int n, std::uint64_t seed) {
  Xorshift64Star rng(seed);
  ComplexMatrix b(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const double re = rng.symmetric();
      b(r, c) = Complex(re, rng.symmetric());
    }
  ComplexMatrix h(n, n);
  for (int r = 0; r < n; ++r) {
    h(r, r) = b(r, r).real();
    for (int c = r + 1; c < n; ++c) {
      h(r, c) = (b(r, c) + std::conj(b(c, r))) * 0.5;
      h(c, r) = std::conj(h(r, c));
    }
  }
  return h;
}

ComplexVector random_vector(int n, std::uint64_t seed) {
  Xorshift64Star rng(seed);
  ComplexVector v(n);
  for (auto& x : v) {
    const double re = rng.symmetric();
    x = Complex(re, rng.symmetric());
  }
  return v;
}

}  // namespace eigensym
