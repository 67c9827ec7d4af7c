#include "pauli/text.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace pauli::text {

std::string real(double v) {
  if (v == 0.0) return "0";
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

namespace {

std::string signed_imag(double im) {
  return (std::signbit(im) && im != 0.0 ? "-" : "+") + real(std::abs(im));
}

}  // namespace

std::string complex_paren(std::complex<double> c) {
  return "(" + real(c.real()) + signed_imag(c.imag()) + "i)";
}

std::string dump_entry(std::complex<double> c) {
  return real(c.real()) + signed_imag(c.imag()) + "j";
}

std::string coefficient(std::complex<double> c) {
  if (c.imag() == 0.0) return real(c.real());
  if (c.real() == 0.0) {
    if (c.imag() == 1.0) return "i";
    if (c.imag() == -1.0) return "-i";
    return real(c.imag()) + "i";
  }
  return complex_paren(c);
}

}  // namespace pauli::text
