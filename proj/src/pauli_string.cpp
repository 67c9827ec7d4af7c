#include "pauli/pauli_string.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "pauli/errors.hpp"

namespace pauli {

namespace {

using Word = PauliString::Word;
constexpr std::size_t kBits = PauliString::kWordBits;

std::size_t word_count(std::size_t n) { return (n + kBits - 1) / kBits; }

Word tail_mask(std::size_t n) {
  const std::size_t r = n % kBits;
  return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

void require_same_size(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) {
    throw DimensionError("site count mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

constexpr std::array<std::array<SiteProduct, 4>, 4> kSiteTable = {{
    // I * {I, X, Y, Z}
    {{{Letter::I, Phase(0)}, {Letter::X, Phase(0)}, {Letter::Y, Phase(0)}, {Letter::Z, Phase(0)}}},
    // X * {I, X, Y, Z}
    {{{Letter::X, Phase(0)}, {Letter::I, Phase(0)}, {Letter::Z, Phase(1)}, {Letter::Y, Phase(3)}}},
    // Y * {I, X, Y, Z}
    {{{Letter::Y, Phase(0)}, {Letter::Z, Phase(3)}, {Letter::I, Phase(0)}, {Letter::X, Phase(1)}}},
    // Z * {I, X, Y, Z}
    {{{Letter::Z, Phase(0)}, {Letter::Y, Phase(1)}, {Letter::X, Phase(3)}, {Letter::I, Phase(0)}}},
}};

}  // namespace

char to_char(Letter l) noexcept {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(l)];
}

SiteProduct site_product(Letter a, Letter b) noexcept {
  return kSiteTable[static_cast<int>(a)][static_cast<int>(b)];
}

PauliString::PauliString(std::size_t n, Phase phase)
    : n_(n), x_(word_count(n), 0), z_(word_count(n), 0), phase_(phase) {
  if (n == 0) throw ContractError("a Pauli string needs at least one site");
}

PauliString::PauliString(std::size_t n, std::vector<Word> x, std::vector<Word> z, Phase phase)
    : n_(n), x_(std::move(x)), z_(std::move(z)), phase_(phase) {}

PauliString PauliString::from_letters(std::span<const Letter> letters, Phase phase) {
  PauliString p(letters.size(), phase);
  for (std::size_t t = 0; t < letters.size(); ++t) {
    const Word bit = Word{1} << (t % kBits);
    if (x_bit(letters[t])) p.x_[t / kBits] |= bit;
    if (z_bit(letters[t])) p.z_[t / kBits] |= bit;
  }
  return p;
}

PauliString PauliString::from_words(std::size_t n, std::vector<Word> x, std::vector<Word> z,
                                    Phase phase) {
  if (n == 0) throw ContractError("a Pauli string needs at least one site");
  const std::size_t w = word_count(n);
  if (x.size() != w || z.size() != w) {
    throw DimensionError("expected " + std::to_string(w) + " words for " + std::to_string(n) +
                         " sites");
  }
  const Word mask = tail_mask(n);
  if ((x.back() & ~mask) != 0 || (z.back() & ~mask) != 0) {
    throw ContractError("bits set beyond site " + std::to_string(n));
  }
  return PauliString(n, std::move(x), std::move(z), phase);
}

Letter PauliString::letter(std::size_t site) const {
  if (site >= n_) {
    throw IndexError("site " + std::to_string(site) + " out of range for " + std::to_string(n_) +
                     " sites");
  }
  const std::size_t w = site / kBits;
  const std::size_t b = site % kBits;
  return letter_from_bits((x_[w] >> b) & 1, (z_[w] >> b) & 1);
}

std::vector<Letter> PauliString::letters() const {
  std::vector<Letter> out(n_);
  for (std::size_t t = 0; t < n_; ++t) out[t] = letter(t);
  return out;
}

PauliString PauliString::with_phase(Phase phase) const {
  PauliString p = *this;
  p.phase_ = phase;
  return p;
}

PauliString PauliString::with_letter(std::size_t site, Letter l) const {
  if (site >= n_) {
    throw IndexError("site " + std::to_string(site) + " out of range for " + std::to_string(n_) +
                     " sites");
  }
  PauliString p = *this;
  const std::size_t w = site / kBits;
  const Word bit = Word{1} << (site % kBits);
  p.x_[w] = x_bit(l) ? (p.x_[w] | bit) : (p.x_[w] & ~bit);
  p.z_[w] = z_bit(l) ? (p.z_[w] | bit) : (p.z_[w] & ~bit);
  return p;
}

bool PauliString::is_identity_word() const noexcept {
  return std::all_of(x_.begin(), x_.end(), [](Word w) { return w == 0; }) &&
         std::all_of(z_.begin(), z_.end(), [](Word w) { return w == 0; });
}

std::size_t PauliString::weight() const noexcept {
  std::size_t count = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) count += std::popcount(x_[w] | z_[w]);
  return count;
}

std::strong_ordering PauliString::operator<=>(const PauliString& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  if (auto c = x_ <=> other.x_; c != 0) return c;
  if (auto c = z_ <=> other.z_; c != 0) return c;
  return phase_.exponent() <=> other.phase_.exponent();
}

PauliString parse(std::string_view text) {
  std::size_t pos = 0;
  int q = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') q = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    q += 1;
    ++pos;
  }
  // "+i" is not one of the accepted prefixes.
  if (!text.empty() && text[0] == '+' && pos == 2) throw ParseError("malformed phase prefix", 2);
  if (pos == text.size()) throw ParseError("expected at least one Pauli letter", pos + 1);

  std::vector<Letter> letters;
  letters.reserve(text.size() - pos);
  for (; pos < text.size(); ++pos) {
    switch (text[pos]) {
      case 'I': letters.push_back(Letter::I); break;
      case 'X': letters.push_back(Letter::X); break;
      case 'Y': letters.push_back(Letter::Y); break;
      case 'Z': letters.push_back(Letter::Z); break;
      default:
        throw ParseError(std::string("illegal character '") + text[pos] + "'", pos + 1);
    }
  }
  return PauliString::from_letters(letters, Phase(q));
}

std::string format(const PauliString& p) {
  static constexpr const char* kPrefix[] = {"", "i", "-", "-i"};
  std::string out = kPrefix[p.phase().exponent()];
  out.reserve(out.size() + p.size());
  for (std::size_t t = 0; t < p.size(); ++t) out.push_back(to_char(p.letter(t)));
  return out;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  const std::size_t words = a.x_.size();
  std::vector<Word> x(words), z(words);
  int plus = 0;
  int minus = 0;
  for (std::size_t w = 0; w < words; ++w) {
    const Word x1 = a.x_[w], z1 = a.z_[w], x2 = b.x_[w], z2 = b.z_[w];
    // Sites contributing +i: XY, YZ, ZX. Sites contributing -i: YX, ZY, XZ.
    const Word pos = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
    const Word neg = (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2) | (x1 & ~z1 & ~x2 & z2);
    plus += std::popcount(pos);
    minus += std::popcount(neg);
    x[w] = x1 ^ x2;
    z[w] = z1 ^ z2;
  }
  const Phase phase = a.phase_ * b.phase_ * Phase(plus - minus);
  return PauliString(a.n_, std::move(x), std::move(z), phase);
}

bool commutes(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  const auto ax = a.x_words(), az = a.z_words(), bx = b.x_words(), bz = b.z_words();
  int parity = 0;
  for (std::size_t w = 0; w < ax.size(); ++w) {
    parity ^= std::popcount((ax[w] & bz[w]) ^ (az[w] & bx[w])) & 1;
  }
  return parity == 0;
}

bool anticommutes(const PauliString& a, const PauliString& b) { return !commutes(a, b); }

std::size_t coincidences(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  const auto ax = a.x_words(), az = a.z_words(), bx = b.x_words(), bz = b.z_words();
  std::size_t count = 0;
  for (std::size_t w = 0; w < ax.size(); ++w) {
    Word equal = ~((ax[w] ^ bx[w]) | (az[w] ^ bz[w]));
    if (w + 1 == ax.size()) equal &= tail_mask(a.size());
    count += std::popcount(equal);
  }
  return count;
}

bool coincidence_criterion(const PauliString& a, const PauliString& b) {
  return coincidences(a, b) % 2 == a.size() % 2;
}

std::vector<PauliString> enumerate_group(std::size_t n, std::size_t cap) {
  if (n == 0) throw ContractError("group enumeration needs n >= 1");
  if (n > cap) {
    throw SizeError("group enumeration capped at n = " + std::to_string(cap) + ", got " +
                    std::to_string(n));
  }
  const std::size_t words = std::size_t{1} << (2 * n);
  std::vector<PauliString> out;
  out.reserve(4 * words);
  std::vector<Letter> letters(n);
  for (std::size_t code = 0; code < words; ++code) {
    for (std::size_t t = 0; t < n; ++t) letters[t] = static_cast<Letter>((code >> (2 * t)) & 3);
    for (int q = 0; q < 4; ++q) out.push_back(PauliString::from_letters(letters, Phase(q)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PauliString random_string(std::size_t n, bool identity_free, std::mt19937_64& rng) {
  std::vector<Letter> letters(n);
  Word pool = 0;
  int left = 0;
  auto next2 = [&]() {
    if (left == 0) {
      pool = rng();
      left = 32;
    }
    const auto v = static_cast<int>(pool & 3);
    pool >>= 2;
    --left;
    return v;
  };
  for (auto& l : letters) {
    int v = next2();
    while (identity_free && v == 0) v = next2();
    l = static_cast<Letter>(v);
  }
  const int q = next2();
  return PauliString::from_letters(letters, Phase(q));
}

PauliString random_string(std::size_t n, bool identity_free, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_string(n, identity_free, rng);
}

}  // namespace pauli

std::size_t std::hash<pauli::PauliString>::operator()(const pauli::PauliString& p) const noexcept {
  std::size_t h = p.size() * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(p.phase().exponent());
  auto mix = [&h](std::uint64_t w) { h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (auto w : p.x_words()) mix(w);
  for (auto w : p.z_words()) mix(w);
  return h;
}
