#include "pauli/pauli_sum.hpp"

#include <algorithm>

#include "pauli/errors.hpp"
#include "pauli/text.hpp"

namespace pauli {

namespace {

Complex phase_value(Phase p) {
  static const Complex kValues[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kValues[p.exponent()];
}

}  // namespace

PauliSum::PauliSum(std::size_t n) : n_(n) {
  if (n == 0) throw ContractError("a Pauli sum needs at least one site");
}

void PauliSum::add(Complex coefficient, const PauliString& p) {
  if (p.size() != n_) {
    throw DimensionError("term has " + std::to_string(p.size()) + " sites, sum has " +
                         std::to_string(n_));
  }
  const Complex c = coefficient * phase_value(p.phase());
  if (c == Complex{}) return;
  PauliString word = p.word();
  if (auto it = index_.find(word); it != index_.end()) {
    Term& term = terms_[it->second];
    term.coefficient += c;
    if (term.coefficient == Complex{}) {
      terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(it->second));
      rebuild_index();
    }
    return;
  }
  index_.emplace(word, terms_.size());
  terms_.push_back({c, std::move(word)});
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_ != n_) throw DimensionError("sums act on different site counts");
  for (const auto& t : other.terms_) add(t.coefficient, t.word);
  return *this;
}

PauliSum operator+(PauliSum a, const PauliSum& b) {
  a += b;
  return a;
}

PauliSum PauliSum::scaled(Complex factor) const {
  PauliSum out(n_);
  for (const auto& t : terms_) out.add(t.coefficient * factor, t.word);
  return out;
}

Complex PauliSum::coefficient_of(const PauliString& word) const {
  if (auto it = index_.find(word.word()); it != index_.end()) return terms_[it->second].coefficient;
  return {};
}

bool PauliSum::has_real_coefficients() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coefficient.imag() == 0.0; });
}

void PauliSum::rebuild_index() {
  index_.clear();
  for (std::size_t k = 0; k < terms_.size(); ++k) index_.emplace(terms_[k].word, k);
}

std::string format(const PauliSum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& t : s.terms()) {
    if (!out.empty()) out += " + ";
    out += text::complex_paren(t.coefficient) + format(t.word);
  }
  return out;
}

PauliSum commutator(const PauliString& a, const PauliString& b) {
  PauliSum out(a.size());
  const PauliString ab = multiply(a, b);
  if (anticommutes(a, b)) out.add(2.0, ab);
  return out;
}

PauliSum anticommutator(const PauliString& a, const PauliString& b) {
  PauliSum out(a.size());
  const PauliString ab = multiply(a, b);
  if (commutes(a, b)) out.add(2.0, ab);
  return out;
}

}  // namespace pauli
