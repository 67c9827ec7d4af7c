#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pauli {

// Single-site Pauli letter. The numeric value is the conventional index
// sigma_0 .. sigma_3.
enum class Letter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

// Symplectic encoding: I=(0,0), X=(1,0), Y=(1,1), Z=(0,1).
constexpr bool x_bit(Letter l) noexcept { return l == Letter::X || l == Letter::Y; }
constexpr bool z_bit(Letter l) noexcept { return l == Letter::Z || l == Letter::Y; }

constexpr Letter letter_from_bits(bool x, bool z) noexcept {
  if (x) return z ? Letter::Y : Letter::X;
  return z ? Letter::Z : Letter::I;
}

char to_char(Letter l) noexcept;

// The scalar i^q, q in Z_4.
class Phase {
 public:
  constexpr Phase() = default;
  constexpr explicit Phase(int q) noexcept : q_(static_cast<std::uint8_t>(((q % 4) + 4) % 4)) {}

  // Maps the (-i)^j0 prefactor convention onto i^q.
  static constexpr Phase from_minus_i_power(int j0) noexcept { return Phase(-j0); }

  constexpr int exponent() const noexcept { return q_; }
  constexpr bool is_real() const noexcept { return (q_ & 1) == 0; }

  constexpr Phase operator*(Phase other) const noexcept { return Phase(q_ + other.q_); }
  constexpr Phase operator-() const noexcept { return Phase(q_ + 2); }
  constexpr auto operator<=>(const Phase&) const = default;

 private:
  std::uint8_t q_ = 0;
};

struct SiteProduct {
  Letter letter;
  Phase phase;
};

// Fixed 16-entry table: P*I = I*P = P, P*P = I, X*Y = iZ, Y*Z = iX,
// Z*X = iY, reversed orders carry -i.
SiteProduct site_product(Letter a, Letter b) noexcept;

// An element of the n-qubit Pauli group: i^q times a Kronecker product of
// letters, site 1 leftmost. x and z bits are packed into 64-bit words; bits
// past n are always zero.
class PauliString {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  // Identity word on n >= 1 sites.
  explicit PauliString(std::size_t n, Phase phase = Phase{});

  static PauliString from_letters(std::span<const Letter> letters, Phase phase = Phase{});
  // Words are copied and the tail past n is checked to be clear.
  static PauliString from_words(std::size_t n, std::vector<Word> x, std::vector<Word> z,
                                Phase phase = Phase{});

  std::size_t size() const noexcept { return n_; }
  Phase phase() const noexcept { return phase_; }

  // 0-based site index.
  Letter letter(std::size_t site) const;
  std::vector<Letter> letters() const;

  std::span<const Word> x_words() const noexcept { return x_; }
  std::span<const Word> z_words() const noexcept { return z_; }

  PauliString with_phase(Phase phase) const;
  PauliString with_letter(std::size_t site, Letter l) const;
  // Same letters, phase 0.
  PauliString word() const { return with_phase(Phase{}); }

  bool is_identity_word() const noexcept;
  // Phase +-1: the realized matrix is hermitian and squares to I.
  bool is_hermitian() const noexcept { return phase_.is_real(); }
  std::size_t weight() const noexcept;

  bool operator==(const PauliString&) const = default;
  // Total order: n, then x words, z words, phase. Used for sets and golden output.
  std::strong_ordering operator<=>(const PauliString& other) const;

  bool same_word(const PauliString& other) const noexcept {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
  }

 private:
  PauliString(std::size_t n, std::vector<Word> x, std::vector<Word> z, Phase phase);

  std::size_t n_;
  std::vector<Word> x_;
  std::vector<Word> z_;
  Phase phase_;

  friend PauliString multiply(const PauliString& a, const PauliString& b);
};

// Text form: optional phase prefix ("", "+", "-", "i", "-i") then letters.
PauliString parse(std::string_view text);
std::string format(const PauliString& p);

PauliString multiply(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) { return multiply(a, b); }

// Symplectic rule: sum_t (x^a_t z^b_t + z^a_t x^b_t) even.
bool commutes(const PauliString& a, const PauliString& b);
bool anticommutes(const PauliString& a, const PauliString& b);

// Coincidence-parity criterion: prod_t (-1)^{[j_t == k_t]} == (-1)^n.
// Agrees with commutes() only when no site pairs I with a non-identity
// letter; e.g. "XX" vs "IX" commute but this returns false.
bool coincidence_criterion(const PauliString& a, const PauliString& b);

// Number of sites with identical letters.
std::size_t coincidences(const PauliString& a, const PauliString& b);

inline constexpr std::size_t kGroupEnumerationCap = 2;

// All 4 * 4^n elements, sorted. Throws SizeError for n > cap.
std::vector<PauliString> enumerate_group(std::size_t n, std::size_t cap = kGroupEnumerationCap);

// Uniform letters (from {X,Y,Z} when identity_free) and a uniform phase.
// Consumes raw 64-bit draws only, so output is reproducible across standard
// libraries.
PauliString random_string(std::size_t n, bool identity_free, std::mt19937_64& rng);
PauliString random_string(std::size_t n, bool identity_free, std::uint64_t seed);

}  // namespace pauli

template <>
struct std::hash<pauli::PauliString> {
  std::size_t operator()(const pauli::PauliString& p) const noexcept;
};
