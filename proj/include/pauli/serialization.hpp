#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "pauli/pauli_string.hpp"
#include "pauli/pauli_sum.hpp"

namespace pauli {

// Bit vector as lowercase hex, ceil(n/4) digits, most significant digit
// first. Site 1 is bit 0 of the value, so "XII" has x = "1" and "IIX" has x = "4".
std::string bits_to_hex(std::span<const PauliString::Word> words, std::size_t n);
std::vector<PauliString::Word> hex_to_bits(std::string_view hex, std::size_t n);

// {"n": int, "phase_q": int, "x": hex, "z": hex}
nlohmann::json to_json(const PauliString& p);
PauliString pauli_from_json(const nlohmann::json& j);

// {"n": int, "terms": [{"re": float, "im": float, "word": "XYZ"}, ...]}
nlohmann::json to_json(const PauliSum& s);

}  // namespace pauli
