#include <doctest.h>

#include "qec/cssplus.hpp"

using namespace qec;

namespace {

BinMatrix hamming7_check() {
  return BinMatrix::from_strings({"1010101", "0110011", "0001111"});
}

const std::vector<std::string> kCyclic10Check = {
    "1011001000",
    "0101100100",
    "1010110010",
    "0110010001",
};

const std::vector<std::string> kPrintedH2_10 = {
    "1111001000",
    "0111100100",
    "1010010010",
    "1110110001",
};

const std::vector<std::string> kPrintedD_10 = {
    "0001001100",
    "0000010011",
};

}  // namespace

TEST_CASE("{7,1,3}+ from explicit h1 and displacement") {
  PlusCode p = build_from_h1_d(hamming7_check(),
                               BinMatrix::from_strings({"1000011"}));
  CHECK(p.n() == 7);
  CHECK(p.K() == 1);
  CHECK(p.h2().n_rows() == 3);  // dim C2-dual = k1 - K = 4 - 1
  // every generator row of the dual of C2 passes every check of C2
  BinMatrix stack = p.stack();
  for (int i = 0; i < p.h2().n_rows(); ++i) {
    for (int j = 0; j < stack.n_rows(); ++j) {
      CHECK(!dot(p.h2().row(i), stack.row(j)));
    }
  }
  CodeParams params = verify_plus(p);
  CHECK(params == CodeParams{7, 1, 3, 3, 1, 1});
  CHECK(!p.from_weakly_self_dual());
}

TEST_CASE("{10,2,3}+ reproduces the published H2") {
  BinMatrix h1 = BinMatrix::from_strings(kCyclic10Check);
  PlusCode p = build_from_h1_d(h1, BinMatrix::from_strings(kPrintedD_10));
  CHECK(p.K() == 2);
  CHECK(rowspan_equal(p.h2(), BinMatrix::from_strings(kPrintedH2_10)));
  CodeParams params = verify_plus(p);
  CHECK(params.d1 == 3);
  CHECK(params.d2 == 3);

  // this code does NOT arise from a weakly self-dual classical code, even
  // though K = 2k - n: the construction only needs the dual of C2 inside C1
  LinearCode c10 = LinearCode::from_check(h1);
  CHECK(!is_weakly_self_dual(c10));
  CHECK_THROWS_AS(build_from_weakly_self_dual(c10), error);
}

TEST_CASE("builder validation") {
  BinMatrix h1 = hamming7_check();
  // row failing a base check names both indices
  CHECK_THROWS_WITH_AS(
      build_from_h1_d(h1, BinMatrix::from_strings({"0100000"})),
      doctest::Contains("row 0"), error);
  CHECK_THROWS_WITH_AS(
      build_from_h1_d(h1, BinMatrix::from_strings({"0100000"})),
      doctest::Contains("check row 1"), error);
  // displacement row inside the dual of C2 collapses two cosets
  CHECK_THROWS_WITH_AS(
      build_from_h1_d(h1, BinMatrix::from_strings({"1010101"})),
      doctest::Contains("cosets"), error);
  // rank-deficient h1
  CHECK_THROWS_AS(
      build_from_h1_d(BinMatrix::from_strings({"1010101", "1010101"}),
                      BinMatrix::empty(7)),
      error);
  // width mismatch
  CHECK_THROWS_AS(build_from_h1_d(h1, BinMatrix::from_strings({"11"})), error);
  // non-weakly-self-dual input rejected
  CHECK_THROWS_AS(build_from_weakly_self_dual(make_repetition(4)), error);
}

TEST_CASE("{8,0,4}+ from the self-dual [8,4,4] code") {
  LinearCode e8 = make_extended_hamming(3);
  PlusCode p = build_from_weakly_self_dual(e8);
  CHECK(p.n() == 8);
  CHECK(p.K() == 0);
  CHECK(p.displacement().n_rows() == 0);
  CHECK(rowspan_equal(p.h2(), e8.generator()));
  CodeParams params = verify_plus(p);
  CHECK(params.d1 == 4);
  CHECK(params.d2 == 4);

  // explicit builder agrees when handed an empty displacement
  PlusCode q = build_from_h1_d(e8.check(), BinMatrix::empty(8));
  CHECK(q.K() == 0);
  CHECK(rowspan_equal(q.h2(), p.h2()));
}

TEST_CASE("reduce_kk1 turns {8,0,4}+ into {7,1,3}+") {
  PlusCode p8 = build_from_weakly_self_dual(make_extended_hamming(3));
  PlusCode p7 = reduce_kk1(p8);
  CHECK(p7.n() == 7);
  CHECK(p7.K() == 1);
  CHECK(p7.from_weakly_self_dual());
  CodeParams params = verify_plus(p7);
  CHECK(params.d1 == 3);
  CHECK(params.d2 == 3);

  // every choice of deleted check row yields a valid {7,1,3}+ code
  for (int r = 0; r < 4; ++r) {
    CodeParams pr = verify_plus(reduce_kk1(p8, r));
    CHECK(pr.d1 == 3);
    CHECK(pr.d2 == 3);
  }

  // not available for explicitly-built codes
  PlusCode explicit_code = build_from_h1_d(
      hamming7_check(), BinMatrix::from_strings({"1000011"}));
  CHECK_THROWS_AS(reduce_kk1(explicit_code), error);
  CHECK_THROWS_AS(reduce_kk1(p8, 4), error);
}

TEST_CASE("reduction chain from the [16,11,4] extended Hamming code") {
  // {16,6,4}+ -> {15,7,3}+ mirrors the published family step
  PlusCode p16 = build_from_weakly_self_dual(make_extended_hamming(4));
  CHECK(p16.K() == 6);
  CodeParams q16 = verify_plus(p16);
  CHECK(q16.d1 == 4);
  CHECK(q16.d2 == 4);

  PlusCode p15 = reduce_kk1(p16);
  CHECK(p15.n() == 15);
  CHECK(p15.K() == 7);
  CodeParams q15 = verify_plus(p15);
  CHECK(q15.d1 == 3);
  CHECK(q15.d2 == 3);
}

TEST_CASE("{17,7,3}+ uses the last seven generator rows as displacements") {
  // [17,12,3] check matrix, already in (A | I) form.
  BinMatrix h1 = BinMatrix::from_strings({
      "01100111100110000",
      "10111100101101000",
      "11010010111100100",
      "11101001110000010",
      "00011111110000001",
  });
  StandardForm sf = standard_form(h1);
  BinMatrix g1 = sf.generator_original_coords();
  REQUIRE(g1.n_rows() == 12);
  BinMatrix disp = BinMatrix::empty(17);
  for (int r = 5; r < 12; ++r) disp.append_row(g1.row(r));
  CHECK(disp == BinMatrix::from_strings({
                    "00000100000011001",
                    "00000010000010101",
                    "00000001000010011",
                    "00000000100011111",
                    "00000000010000111",
                    "00000000001001100",
                    "00000000000111100",
                }));
  PlusCode p = build_from_h1_d(h1, disp);
  CHECK(p.K() == 7);
  CodeParams params = verify_plus(p);
  CHECK(params.d1 == 3);
  CHECK(params.d2 == 3);
  CHECK(params.t1 == 1);
}

TEST_CASE("hamming_k_bound") {
  CHECK(hamming_k_bound(7) == 1);
  CHECK(hamming_k_bound(8) == 0);
  CHECK(hamming_k_bound(10) == 2);
  CHECK(hamming_k_bound(17) == 7);
  CHECK(hamming_k_bound(20) == 10);
  CHECK(hamming_k_bound(27) == 17);
  CHECK(hamming_k_bound(3) == -1);
  CHECK_THROWS_AS(hamming_k_bound(0), error);
}
