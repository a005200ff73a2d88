#include <doctest.h>

#include "qec/cssplus.hpp"
#include "qec/format.hpp"

using namespace qec;

namespace {

SignedCode five_qubit_code() {
  return SignedCode(
      BinMatrix::from_strings({"10101", "10011", "01111"}),
      BinMatrix::from_strings({"11111"}),
      {SignVector::from_hex("66", 8)}, SignVector::from_hex("14", 8));
}

}  // namespace

TEST_CASE("five-qubit listing renders exactly") {
  const std::string expected =
      "|v0> =\n"
      "  +|00000> +|10101> -|10011> +|00110>\n"
      "  -|01111> +|11010> +|11100> +|01001>\n"
      "\n"
      "|v1> =\n"
      "  +|11111> -|01010> +|01100> +|11001>\n"
      "  -|10000> -|00101> -|00011> +|10110>\n";
  CHECK(expand_listing(five_qubit_code()) == expected);
}

TEST_CASE("stanza terms wrap at four per line") {
  SignedCode code = five_qubit_code();
  std::string stanza = format_stanza_terms(code, 0);
  CHECK(stanza ==
        "  +|00000> +|10101> -|10011> +|00110>\n"
        "  -|01111> +|11010> +|11100> +|01001>\n");

  // a two-row group: only two terms, single unfinished line
  SignedCode tiny(BinMatrix::from_strings({"11"}),
                  BinMatrix::empty(2), {}, std::nullopt);
  CHECK(format_stanza_terms(tiny, 0) == "  +|00> +|11>\n");
}

TEST_CASE("K=0 listing uses the bare header") {
  SignedCode tiny(BinMatrix::from_strings({"11"}),
                  BinMatrix::empty(2), {}, std::nullopt);
  CHECK(expand_listing(tiny) == "|v> =\n  +|00> +|11>\n");
}

TEST_CASE("headers count in binary, most significant bit first") {
  // K = 2: four stanzas labelled 00, 01, 10, 11
  PlusCode p = build_from_h1_d(
      BinMatrix::from_strings({"1011001000", "0101100100", "1010110010",
                               "0110010001"}),
      BinMatrix::from_strings({"0001001100", "0000010011"}));
  SignedCode code = SignedCode::all_plus(p);
  std::string listing = expand_listing(code);
  CHECK(listing.find("|v00> =") != std::string::npos);
  CHECK(listing.find("|v01> =") != std::string::npos);
  CHECK(listing.find("|v10> =") != std::string::npos);
  CHECK(listing.find("|v11> =") != std::string::npos);
  // b = 1 flips displacement row 0 (the b bit convention matches word_at)
  CHECK(listing.find("|v01> =\n  +|" +
                     code.word_at(1, 0).to_string() + ">") !=
        std::string::npos);

  // stanzas separated by exactly one blank line
  CHECK(listing.find("\n\n|v01>") != std::string::npos);
  CHECK(listing.find("\n\n\n") == std::string::npos);
  // listing ends with a single newline
  REQUIRE(!listing.empty());
  CHECK(listing.back() == '\n');
  CHECK(listing[listing.size() - 2] != '\n');
}
