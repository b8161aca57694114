// Naive dense-matrix reference simulator used as the independent oracle for
// the strided gate kernels. Builds full 2^n x 2^n unitaries via Kronecker
// products and applies them by plain matrix-vector multiplication. Only
// sensible for small n.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace refsim {

using cd = std::complex<double>;
using Matrix = std::vector<std::vector<cd>>;
using Vector = std::vector<cd>;

inline Matrix identity(std::size_t dim) {
  Matrix m(dim, std::vector<cd>(dim, cd(0, 0)));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = cd(1, 0);
  return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t ra = a.size(), ca = a[0].size();
  const std::size_t rb = b.size(), cb = b[0].size();
  Matrix out(ra * rb, std::vector<cd>(ca * cb, cd(0, 0)));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ca; ++j)
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l)
          out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
  return out;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size(), m = b[0].size(), k = b.size();
  Matrix out(n, std::vector<cd>(m, cd(0, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][p] * b[p][j];
  return out;
}

inline Vector matvec(const Matrix& a, const Vector& v) {
  Vector out(a.size(), cd(0, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

inline Matrix rx(double angle) {
  const double c = std::cos(0.5 * angle), s = std::sin(0.5 * angle);
  return {{cd(c, 0), cd(0, -s)}, {cd(0, -s), cd(c, 0)}};
}

inline Matrix ry(double angle) {
  const double c = std::cos(0.5 * angle), s = std::sin(0.5 * angle);
  return {{cd(c, 0), cd(-s, 0)}, {cd(s, 0), cd(c, 0)}};
}

inline Matrix rz(double angle) {
  return {{std::polar(1.0, -0.5 * angle), cd(0, 0)},
          {cd(0, 0), std::polar(1.0, 0.5 * angle)}};
}

// Little-endian qubit order: qubit 0 is the least significant index bit, so
// the single-qubit factor sits at the low end of the Kronecker product.
inline Matrix embed(const Matrix& gate, int qubit, int n) {
  Matrix out = identity(std::size_t(1) << qubit);
  out = kron(gate, out);
  for (int q = qubit + 1; q < n; ++q) out = kron(identity(2), out);
  return out;
}

inline Matrix cost_phase_matrix(const std::vector<double>& energies, double alpha) {
  const std::size_t dim = energies.size();
  Matrix out(dim, std::vector<cd>(dim, cd(0, 0)));
  for (std::size_t z = 0; z < dim; ++z) out[z][z] = std::polar(1.0, -alpha * energies[z]);
  return out;
}

inline Matrix warm_mixer_matrix(const std::vector<double>& thetas, double beta) {
  const int n = static_cast<int>(thetas.size());
  Matrix out = identity(std::size_t(1) << n);
  for (int q = 0; q < n; ++q) {
    Matrix per_qubit = matmul(ry(thetas[q]), matmul(rz(-2.0 * beta), ry(-thetas[q])));
    out = matmul(embed(per_qubit, q, n), out);
  }
  return out;
}

}  // namespace refsim
