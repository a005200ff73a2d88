#include "qec/format.hpp"

namespace qec {

std::string format_stanza_terms(const SignedCode& code, std::uint32_t b) {
  const SignVector signs = code.sign_vector(b);
  std::string out;
  const int w = code.w();
  for (int m = 0; m < w; ++m) {
    if (m % 4 == 0) {
      out += "  ";
    } else {
      out += ' ';
    }
    out += signs.get(m) ? '-' : '+';
    out += '|';
    out += code.word_at(b, static_cast<std::uint32_t>(m)).to_string();
    out += '>';
    if (m % 4 == 3 || m == w - 1) out += '\n';
  }
  return out;
}

std::string expand_listing(const SignedCode& code) {
  std::string out;
  const std::uint32_t count = std::uint32_t{1} << code.K();
  for (std::uint32_t b = 0; b < count; ++b) {
    if (b != 0) out += '\n';
    out += "|v";
    for (int bit = code.K() - 1; bit >= 0; --bit) {
      out += ((b >> bit) & 1u) ? '1' : '0';
    }
    out += "> =\n";
    out += format_stanza_terms(code, b);
  }
  return out;
}

}  // namespace qec
