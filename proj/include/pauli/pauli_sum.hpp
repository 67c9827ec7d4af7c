#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "pauli/pauli_string.hpp"

namespace pauli {

using Complex = std::complex<double>;

// Complex-weighted sum of phase-0 Pauli words on n sites. Phases of added
// strings are folded into coefficients, repeated words merge, and terms whose
// coefficient becomes exactly zero are dropped. Terms keep first-insertion
// order.
class PauliSum {
 public:
  struct Term {
    Complex coefficient;
    PauliString word;
  };

  explicit PauliSum(std::size_t n);

  void add(Complex coefficient, const PauliString& p);
  PauliSum& operator+=(const PauliSum& other);
  PauliSum scaled(Complex factor) const;

  std::size_t sites() const noexcept { return n_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  // Coefficient of the given word (its phase is ignored); 0 when absent.
  Complex coefficient_of(const PauliString& word) const;

  // True iff every coefficient has zero imaginary part.
  bool has_real_coefficients() const noexcept;

 private:
  void rebuild_index();

  std::size_t n_;
  std::vector<Term> terms_;
  std::unordered_map<PauliString, std::size_t> index_;
};

PauliSum operator+(PauliSum a, const PauliSum& b);

// Terms joined by " + ", each rendered "(re+imi)WORD"; the empty sum is "0".
std::string format(const PauliSum& s);

// AB - BA and AB + BA. At most one term; empty when the bracket vanishes.
PauliSum commutator(const PauliString& a, const PauliString& b);
PauliSum anticommutator(const PauliString& a, const PauliString& b);

}  // namespace pauli
