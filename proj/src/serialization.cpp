#include "pauli/serialization.hpp"

#include "pauli/errors.hpp"

namespace pauli {

namespace {
constexpr std::size_t kBits = PauliString::kWordBits;
constexpr char kHex[] = "0123456789abcdef";
}  // namespace

std::string bits_to_hex(std::span<const PauliString::Word> words, std::size_t n) {
  const std::size_t digits = (n + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    const std::size_t bit = 4 * d;
    const auto nibble = (words[bit / kBits] >> (bit % kBits)) & 0xF;
    out[digits - 1 - d] = kHex[nibble];
  }
  return out;
}

std::vector<PauliString::Word> hex_to_bits(std::string_view hex, std::size_t n) {
  const std::size_t digits = (n + 3) / 4;
  if (hex.size() != digits) {
    throw ParseError("expected " + std::to_string(digits) + " hex digits", hex.size() + 1);
  }
  std::vector<PauliString::Word> words((n + kBits - 1) / kBits, 0);
  for (std::size_t d = 0; d < digits; ++d) {
    const char c = hex[digits - 1 - d];
    PauliString::Word v;
    if (c >= '0' && c <= '9') v = static_cast<PauliString::Word>(c - '0');
    else if (c >= 'a' && c <= 'f') v = static_cast<PauliString::Word>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') v = static_cast<PauliString::Word>(c - 'A' + 10);
    else throw ParseError(std::string("illegal hex digit '") + c + "'", digits - d);
    const std::size_t bit = 4 * d;
    words[bit / kBits] |= v << (bit % kBits);
  }
  return words;
}

nlohmann::json to_json(const PauliString& p) {
  return {{"n", p.size()},
          {"phase_q", p.phase().exponent()},
          {"x", bits_to_hex(p.x_words(), p.size())},
          {"z", bits_to_hex(p.z_words(), p.size())}};
}

PauliString pauli_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const auto q = j.at("phase_q").get<int>();
    if (q < 0 || q > 3) throw ContractError("phase_q must be in 0..3");
    return PauliString::from_words(n, hex_to_bits(j.at("x").get<std::string>(), n),
                                   hex_to_bits(j.at("z").get<std::string>(), n), Phase(q));
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("malformed Pauli string JSON: ") + e.what());
  }
}

nlohmann::json to_json(const PauliSum& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : s.terms()) {
    terms.push_back({{"re", t.coefficient.real()}, {"im", t.coefficient.imag()}, {"word", format(t.word)}});
  }
  return {{"n", s.sites()}, {"terms", std::move(terms)}};
}

}  // namespace pauli
