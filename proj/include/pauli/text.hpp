#pragma once

#include <complex>
#include <string>

namespace pauli::text {

// Shortest round-trip decimal form; negative zero prints as "0".
std::string real(double v);

// "(re+imi)", e.g. "(0.25+0i)", "(0-2i)".
std::string complex_paren(std::complex<double> c);

// Matrix dump entry "re+imj", e.g. "1+0j", "0-1j".
std::string dump_entry(std::complex<double> c);

// Coefficient as a human reads it: "2", "-2i", "i", "(1+2i)".
std::string coefficient(std::complex<double> c);

}  // namespace pauli::text
