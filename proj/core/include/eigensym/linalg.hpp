#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "eigensym/graph.hpp"

namespace eigensym {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr double kDefaultTol = 1e-8;
inline constexpr double kDefaultClusterTol = 1e-7;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static ComplexMatrix identity(int n);
  /// Columns are the given vectors, all of length `rows`.
  static ComplexMatrix from_columns(int rows, std::span<const ComplexVector> columns);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Complex& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Complex& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  ComplexVector column(int c) const;
  ComplexVector row(int r) const;
  ComplexMatrix adjoint() const;
  double frobenius_norm() const;
  Complex trace() const;

  ComplexMatrix operator*(const ComplexMatrix& other) const;
  ComplexVector operator*(const ComplexVector& v) const;
  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;
  ComplexMatrix operator*(Complex s) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

/// Hermitian inner product <u, v> = v* u (linear in the first argument).
Complex inner(const ComplexVector& u, const ComplexVector& v);
double norm(const ComplexVector& v);
ComplexVector operator+(const ComplexVector& a, const ComplexVector& b);
ComplexVector operator-(const ComplexVector& a, const ComplexVector& b);
ComplexVector operator*(Complex s, const ComplexVector& v);
ComplexVector to_complex(std::span<const double> v);

/// Subspace of C^n held as an orthonormal basis.
struct Subspace {
  int ambient = 0;
  std::vector<ComplexVector> basis;
  double tol = kDefaultTol;

  int dim() const { return static_cast<int>(basis.size()); }

  /// Orthogonal projection onto the subspace.
  ComplexVector project(const ComplexVector& v) const;
  /// Coordinates B* v in the stored basis.
  ComplexVector coordinates(const ComplexVector& v) const;
  /// B c for a coordinate vector c.
  ComplexVector lift(const ComplexVector& coords) const;
  /// n x d matrix whose columns are the basis vectors.
  ComplexMatrix matrix() const;

  /// Adjoins the normalized residual of `v` if it exceeds tol * |v|.
  /// Returns whether the dimension grew.
  bool try_extend(const ComplexVector& v);

  static Subspace zero(int n, double tol = kDefaultTol);
  static Subspace full(int n, double tol = kDefaultTol);
};

/// Modified Gram-Schmidt with one re-orthogonalization pass. Vectors whose
/// residual is <= tol * (largest input norm) are dropped; order is kept.
/// `ambient` is only consulted for empty input.
Subspace orthonormalize(std::span<const ComplexVector> vectors, double tol = kDefaultTol,
                        int ambient = 0);

/// Rank of a vector family under the same tolerance convention.
int numerical_rank(std::span<const ComplexVector> vectors, double tol = kDefaultTol);

/// |v - proj(v)| <= tol * |v|, with tol taken from the subspace.
bool contains(const Subspace& s, const ComplexVector& v);
bool contains(const Subspace& s, const ComplexVector& v, double tol);

/// Orthonormal basis of { x : |Mx| <= tol * max(|M|_F, scale) * |x| }.
/// `scale` guards systems whose entries all cancel to rounding noise.
Subspace nullspace(const ComplexMatrix& m, double tol = kDefaultTol, double scale = 0.0);

/// Orthogonal projector B B*.
ComplexMatrix projector(const Subspace& s);

/// Largest principal angle (radians) between two subspaces of equal
/// dimension; pi/2 if the dimensions differ.
double max_principal_angle(const Subspace& a, const Subspace& b);

/// Eigenpairs of a Hermitian matrix by cyclic Jacobi; eigenvalues ascending.
struct HermitianEig {
  std::vector<double> values;
  ComplexMatrix vectors;  // columns
};
HermitianEig hermitian_eig(const ComplexMatrix& h, int max_sweeps = 100);

struct Eigenpair {
  double value;
  Subspace space;
};

struct Spectrum {
  std::vector<Eigenpair> pairs;  // eigenvalues strictly decreasing
  double cluster_tol = kDefaultClusterTol;

  int total_dim() const;
};

/// Cyclic Jacobi on a real symmetric matrix (row-major n x n). Raw eigenvalues
/// within cluster_tol * max(1, |A|_F) of their neighbour are merged.
Spectrum symmetric_eig(int n, std::span<const double> a, double cluster_tol = kDefaultClusterTol,
                       int max_sweeps = 100);
Spectrum symmetric_eig(const AdjacencyMatrix& a, double cluster_tol = kDefaultClusterTol);

struct NormalEigenspace {
  Complex value;
  Subspace space;
};

/// Eigenspaces of a normal matrix, found by diagonalizing the Hermitian
/// combination Re(C) + a Im(C) for a fixed irrational weight a.
std::vector<NormalEigenspace> normal_eig(const ComplexMatrix& c,
                                         double cluster_tol = kDefaultClusterTol,
                                         double tol = kDefaultTol);

/// (B + B*) / 2 for B with entries uniform in [-1,1) + i[-1,1).
ComplexMatrix random_hermitian(int n, std::uint64_t seed);
/// Entries uniform in [-1,1) + i[-1,1).
ComplexVector random_vector(int n, std::uint64_t seed);

}  // namespace eigensym
