#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Dense>

namespace qopt::chem {

using cplx = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 64;

/// Pauli word in symplectic form: P = i^{|x & z|} X^x Z^z, so a qubit with
/// both bits set carries Y. Bit j is qubit j.
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  static PauliString identity() noexcept { return {}; }
  static PauliString single(std::size_t qubit, char op);

  bool is_identity() const noexcept { return x == 0 && z == 0; }
  char op(std::size_t qubit) const noexcept;
  std::size_t weight() const noexcept;
  bool commutes_with(const PauliString& other) const noexcept;

  friend auto operator<=>(const PauliString&, const PauliString&) = default;
};

/// Product a·b = phase · c, with phase a power of i.
std::pair<cplx, PauliString> multiply(const PauliString& a, const PauliString& b) noexcept;

/// Qubit 0 leftmost, e.g. "XIZY".
std::string to_string(const PauliString& p, std::size_t n_qubits);
/// Inverse of to_string; throws ParseError on characters outside IXYZ.
PauliString parse_pauli(std::string_view text);

/// Dense 2^n × 2^n matrix, basis index bit j = qubit j.
Eigen::MatrixXcd to_matrix(const PauliString& p, std::size_t n_qubits);

/// Complex-weighted sum of Pauli words with merged duplicates.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(cplx scalar);
  PauliSum(PauliString p, cplx coefficient);

  void add(const PauliString& p, cplx coefficient);
  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(cplx s);
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator*(cplx s, PauliSum a) { return a *= s; }

  PauliSum adjoint() const;
  /// Removes terms with |coefficient| < tol.
  void prune(double tol);

  const std::map<PauliString, cplx>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

 private:
  std::map<PauliString, cplx> terms_;
};

/// Jordan–Wigner ladder operators on mode j:
/// c_j = Z_0…Z_{j−1}(X_j + iY_j)/2, c_j† = Z_0…Z_{j−1}(X_j − iY_j)/2.
PauliSum annihilation(std::size_t mode);
PauliSum creation(std::size_t mode);

}  // namespace qopt::chem
