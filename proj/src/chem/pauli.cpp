#include <bit>
#include <string>

#include "qopt/chem/pauli.hpp"
#include "qopt/error.hpp"

namespace qopt::chem {

namespace {

constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int popcount(std::uint64_t v) noexcept { return std::popcount(v); }

}  // namespace

PauliString PauliString::single(std::size_t qubit, char op) {
  if (qubit >= kMaxQubits) throw IndexError("pauli: qubit index beyond 64");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (op) {
    case 'I': return {};
    case 'X': return {bit, 0};
    case 'Y': return {bit, bit};
    case 'Z': return {0, bit};
    default: throw ParseError(std::string("pauli: unknown operator '") + op + "'", 0);
  }
}

char PauliString::op(std::size_t qubit) const noexcept {
  const bool xb = (x >> qubit) & 1U;
  const bool zb = (z >> qubit) & 1U;
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

std::size_t PauliString::weight() const noexcept {
  return static_cast<std::size_t>(popcount(x | z));
}

bool PauliString::commutes_with(const PauliString& o) const noexcept {
  return ((popcount(x & o.z) + popcount(z & o.x)) & 1) == 0;
}

std::pair<cplx, PauliString> multiply(const PauliString& a, const PauliString& b) noexcept {
  const PauliString c{a.x ^ b.x, a.z ^ b.z};
  // i^{a_y} X^{ax} Z^{az} i^{b_y} X^{bx} Z^{bz}; moving Z^{az} past X^{bx} costs (-1)^{|az & bx|}.
  const int k = popcount(a.x & a.z) + popcount(b.x & b.z) + 2 * popcount(a.z & b.x) -
                popcount(c.x & c.z);
  return {kIPow[((k % 4) + 4) % 4], c};
}

std::string to_string(const PauliString& p, std::size_t n_qubits) {
  std::string s(n_qubits, 'I');
  for (std::size_t j = 0; j < n_qubits; ++j) s[j] = p.op(j);
  return s;
}

PauliString parse_pauli(std::string_view text) {
  if (text.size() > kMaxQubits) throw ShapeError("pauli: more than 64 qubits");
  PauliString p;
  for (std::size_t j = 0; j < text.size(); ++j) {
    const PauliString s = PauliString::single(j, text[j]);
    p.x |= s.x;
    p.z |= s.z;
  }
  return p;
}

Eigen::MatrixXcd to_matrix(const PauliString& p, std::size_t n_qubits) {
  if (n_qubits > 20) throw ShapeError("pauli: dense matrix too large");
  const std::size_t dim = std::size_t{1} << n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const cplx phase = kIPow[popcount(p.x & p.z) % 4];
  for (std::size_t b = 0; b < dim; ++b) {
    // X^x Z^z |b> = (-1)^{|z & b|} |b ^ x>
    const double sign = (popcount(p.z & b) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(b ^ p.x), static_cast<Eigen::Index>(b)) = phase * sign;
  }
  return m;
}

PauliSum::PauliSum(cplx scalar) { add(PauliString::identity(), scalar); }

PauliSum::PauliSum(PauliString p, cplx coefficient) { add(p, coefficient); }

void PauliSum::add(const PauliString& p, cplx coefficient) { terms_[p] += coefficient; }

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  for (const auto& [p, c] : other.terms_) terms_[p] += c;
  return *this;
}

PauliSum& PauliSum::operator*=(cplx s) {
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  PauliSum out;
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) {
      const auto [phase, pc] = multiply(pa, pb);
      out.terms_[pc] += phase * ca * cb;
    }
  }
  return out;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out;
  for (const auto& [p, c] : terms_) out.terms_[p] = std::conj(c);
  return out;
}

void PauliSum::prune(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) < tol; });
}

namespace {

PauliSum ladder(std::size_t mode, double y_sign) {
  if (mode >= kMaxQubits) throw IndexError("ladder operator mode beyond 64 qubits");
  const std::uint64_t below = (std::uint64_t{1} << mode) - 1;
  const std::uint64_t bit = std::uint64_t{1} << mode;
  PauliSum s;
  s.add({bit, below}, 0.5);
  s.add({bit, below | bit}, cplx(0.0, 0.5 * y_sign));
  return s;
}

}  // namespace

PauliSum annihilation(std::size_t mode) { return ladder(mode, 1.0); }
PauliSum creation(std::size_t mode) { return ladder(mode, -1.0); }

}  // namespace qopt::chem
