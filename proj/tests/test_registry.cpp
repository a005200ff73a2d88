#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qec/format.hpp"
#include "qec/registry.hpp"

using namespace qec;

namespace {

namespace fs = std::filesystem;

const fs::path kDataDir = fs::path(QEC_SOURCE_DATA_DIR);

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Scratch directory for loader tests; wiped on each use.
fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "qec-registry-scratch";
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void put(const fs::path& dir, const std::string& file, const std::string& text) {
  std::ofstream out(dir / file);
  out << text;
}

}  // namespace

TEST_CASE("record parse round trip") {
  std::string text =
      "name: demo-7\n"
      "aliases: d7 seven\n"
      "kind: classical\n"
      "source: published\n"
      "note: a demo record\n"
      "n: 7\n"
      "k: 4\n"
      "d: 3\n"
      "check:\n"
      "1010101\n"
      "0110011\n"
      "0001111\n";
  RegistryRecord rec = parse_record(text);
  CHECK(rec.name == "demo-7");
  CHECK(rec.aliases == std::vector<std::string>{"d7", "seven"});
  CHECK(rec.kind == "classical");
  CHECK(rec.source == "published");
  CHECK(rec.note == "a demo record");
  CHECK(rec.n == 7);
  CHECK(rec.k == 4);
  CHECK(rec.d == 3);
  REQUIRE(rec.check.has_value());
  CHECK(rec.check->n_rows() == 3);
  CHECK(!rec.generator);
  CHECK(!rec.command);

  RegistryRecord again = parse_record(serialize_record(rec));
  CHECK(again.name == rec.name);
  CHECK(again.aliases == rec.aliases);
  CHECK(again.d == rec.d);
  CHECK(*again.check == *rec.check);
}

TEST_CASE("shipped records are in canonical serialized form") {
  // byte-for-byte: parse + serialize reproduces the committed file
  for (const char* file : {"steane-8-3-3.txt", "laflamme-5-1-3.txt",
                           "plus-10-2-3.txt", "hamming-7.txt"}) {
    std::string text = slurp(kDataDir / "registry" / file);
    RegistryRecord rec = parse_record(text);
    CHECK(serialize_record(rec) == text);
  }
}

TEST_CASE("comments and blank lines are tolerated") {
  std::string text =
      "# a comment\n"
      "name: c\n"
      "kind: classical\n"
      "\n"
      "source: published\n"
      "n: 2\n"
      "k: 1\n"
      "generator:\n"
      "# comment inside a block\n"
      "11\n";
  RegistryRecord rec = parse_record(text);
  CHECK(rec.generator->n_rows() == 1);
}

TEST_CASE("parser reports line numbers") {
  CHECK_THROWS_WITH_AS(parse_record("name: x\nkind: classical\nn: seven\n"),
                       doctest::Contains("line 3"), format_error);
  CHECK_THROWS_WITH_AS(parse_record("name: x\nkind: classical\nn: seven\n"),
                       doctest::Contains("not an integer"), format_error);
  CHECK_THROWS_WITH_AS(parse_record("name: x\nname: y\n"),
                       doctest::Contains("duplicate field 'name'"),
                       format_error);
  CHECK_THROWS_WITH_AS(parse_record("name: x\ncolour: blue\n"),
                       doctest::Contains("unknown field 'colour'"),
                       format_error);
  CHECK_THROWS_WITH_AS(parse_record("name: x\nrows:\n11\n"),
                       doctest::Contains("unknown block 'rows'"), format_error);
  CHECK_THROWS_WITH_AS(parse_record("name x\n"),
                       doctest::Contains("expected 'key:'"), format_error);
  CHECK_THROWS_WITH_AS(
      parse_record("name: x\nkind: classical\nsource: published\n"
                   "n: 2\nk: 1\ncheck:\n"),
      doctest::Contains("block 'check' is empty"), format_error);
}

TEST_CASE("structural validation by kind") {
  auto respells = [](const std::string& base, const std::string& from,
                     const std::string& to) {
    std::string out = base;
    auto pos = out.find(from);
    REQUIRE(pos != std::string::npos);
    out.replace(pos, from.size(), to);
    return out;
  };
  const std::string classical =
      "name: c\nkind: classical\nsource: published\nn: 2\nk: 1\n"
      "generator:\n11\n";
  CHECK_NOTHROW(parse_record(classical));

  CHECK_THROWS_WITH_AS(parse_record(respells(classical, "name: c\n", "")),
                       doctest::Contains("missing name"), format_error);
  CHECK_THROWS_WITH_AS(
      parse_record(respells(classical, "kind: classical", "kind: quantum")),
      doctest::Contains("kind must be"), format_error);
  CHECK_THROWS_WITH_AS(
      parse_record(respells(classical, "source: published", "source: folklore")),
      doctest::Contains("source must be"), format_error);
  CHECK_THROWS_WITH_AS(
      parse_record(respells(classical, "source: published", "source: derived")),
      doctest::Contains("generating command"), format_error);
  CHECK_THROWS_WITH_AS(parse_record(respells(classical, "n: 2", "n: 129")),
                       doctest::Contains("n out of range"), format_error);
  CHECK_THROWS_WITH_AS(parse_record(respells(classical, "k: 1\n", "")),
                       doctest::Contains("needs k"), format_error);
  CHECK_THROWS_WITH_AS(
      parse_record(respells(classical, "generator:\n11\n", "")),
      doctest::Contains("needs check or generator"), format_error);
  CHECK_THROWS_WITH_AS(
      parse_record(classical + "\nK: 1\n"),
      doctest::Contains("carries quantum fields"), format_error);
  CHECK_THROWS_WITH_AS(parse_record(respells(classical, "n: 2", "n: 3")),
                       doctest::Contains("width does not match"), format_error);

  const std::string plus =
      "name: p\nkind: plus\nsource: published\nn: 7\nK: 1\n"
      "h1:\n1010101\n0110011\n0001111\n\ndisp:\n1000011\n";
  CHECK_NOTHROW(parse_record(plus));
  CHECK_THROWS_WITH_AS(parse_record(respells(plus, "K: 1", "K: 25")),
                       doctest::Contains("K out of range"), format_error);
  CHECK_THROWS_WITH_AS(parse_record(respells(plus, "K: 1", "K: 2")),
                       doctest::Contains("exactly K rows"), format_error);
  CHECK_THROWS_WITH_AS(
      parse_record(respells(plus, "h1:\n1010101\n0110011\n0001111\n\n", "")),
      doctest::Contains("needs h1"), format_error);
  CHECK_THROWS_WITH_AS(parse_record(plus + "\nsigns:\n66\n"),
                       doctest::Contains("carries sign fields"), format_error);
  CHECK_THROWS_WITH_AS(parse_record(respells(plus, "K: 1\n", "")),
                       doctest::Contains("needs K"), format_error);

  const std::string sgn =
      "name: s\nkind: signed\nsource: published\nn: 5\nK: 1\n"
      "gcos:\n10101\n10011\n01111\n\ndisp:\n11111\n\nsigns:\n66\n";
  CHECK_NOTHROW(parse_record(sgn));
  CHECK_THROWS_WITH_AS(
      parse_record(respells(sgn, "gcos:\n10101\n10011\n01111\n\n", "")),
      doctest::Contains("needs gcos"), format_error);
  CHECK_THROWS_WITH_AS(parse_record(respells(sgn, "signs:\n66\n", "")),
                       doctest::Contains("exactly K sign rows"), format_error);
}

TEST_CASE("loader reads the shipped directory and resolves aliases") {
  Registry reg = Registry::load_dir(kDataDir / "registry");
  REQUIRE(reg.size() >= 21);

  for (const char* name :
       {"repetition-5", "even-8", "hamming-7", "hamming-15", "ext-hamming-8",
        "ext-hamming-16", "reed-muller-16", "golay-23-12-7", "combined-20",
        "cyclic-10", "plus-10-2-3", "plus-12-3-3", "plus-13-5-3",
        "plus-14-6-3", "plus-17-7-3", "plus-20-9-3", "plus-27-16-3",
        "laflamme-5-1-3", "steane-8-3-3", "signed-10-4-3", "signed-11-5-3"}) {
    CAPTURE(name);
    CHECK(reg.find(name) != nullptr);
  }

  // alias resolution points at the same record
  const RegistryRecord* by_alias = reg.find("g8");
  REQUIRE(by_alias != nullptr);
  CHECK(by_alias->name == "steane-8-3-3");
  CHECK(by_alias == reg.find("steane-8-3-3"));

  CHECK(reg.find("no-such-code") == nullptr);

  // all() is sorted by name and covers size()
  auto all = reg.all();
  CHECK(all.size() == reg.size());
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK(all[i - 1]->name < all[i]->name);
  }
}

TEST_CASE("loader failure modes") {
  CHECK_THROWS_WITH_AS(Registry::load_dir(kDataDir / "no-such-dir"),
                       doctest::Contains("not found"), error);

  fs::path dir = scratch_dir();
  put(dir, "a.txt",
      "name: twin\nkind: classical\nsource: published\nn: 2\nk: 1\n"
      "generator:\n11\n");
  put(dir, "b.txt",
      "name: twin\nkind: classical\nsource: published\nn: 2\nk: 1\n"
      "generator:\n11\n");
  CHECK_THROWS_WITH_AS(Registry::load_dir(dir),
                       doctest::Contains("duplicate registry name: twin"),
                       error);

  fs::remove(dir / "b.txt");
  put(dir, "c.txt",
      "name: other\naliases: twin\nkind: classical\nsource: published\n"
      "n: 2\nk: 1\ngenerator:\n11\n");
  CHECK_THROWS_WITH_AS(Registry::load_dir(dir),
                       doctest::Contains("duplicate registry alias: twin"),
                       error);

  fs::remove(dir / "c.txt");
  put(dir, "bad.txt", "name: broken\nkind: nonsense\n");
  CHECK_THROWS_WITH_AS(Registry::load_dir(dir), doctest::Contains("bad.txt"),
                       format_error);
  fs::remove_all(dir);
}

TEST_CASE("classical records instantiate and meet their declared parameters") {
  Registry reg = Registry::load_dir(kDataDir / "registry");
  for (const RegistryRecord* rec : reg.all()) {
    if (rec->kind != "classical") continue;
    CAPTURE(rec->name);
    LinearCode code = to_linear(*rec);
    CHECK(code.n() == rec->n);
    CHECK(code.k() == *rec->k);
    if (rec->d && code.k() <= 22) {
      CHECK(code.min_distance() == *rec->d);
    }
  }
}

TEST_CASE("plus records instantiate and meet their declared distances") {
  Registry reg = Registry::load_dir(kDataDir / "registry");
  int seen = 0;
  for (const RegistryRecord* rec : reg.all()) {
    if (rec->kind != "plus") continue;
    CAPTURE(rec->name);
    PlusCode code = to_plus(*rec);
    CHECK(code.n() == rec->n);
    CHECK(code.K() == *rec->K);
    if (rec->d1 && rec->d2) {
      CodeParams params = verify_plus(code);
      CHECK(params.d1 == *rec->d1);
      CHECK(params.d2 == *rec->d2);
    }
    ++seen;
  }
  CHECK(seen >= 7);
}

TEST_CASE("signed records expand and pass the orthogonality oracle") {
  Registry reg = Registry::load_dir(kDataDir / "registry");
  for (const RegistryRecord* rec : reg.all()) {
    if (rec->kind != "signed") continue;
    CAPTURE(rec->name);
    SignedCode code = to_signed(*rec);
    CHECK(code.n() == rec->n);
    CHECK(code.K() == *rec->K);
    REQUIRE(rec->d.has_value());
    int t = (*rec->d - 1) / 2;
    OrthogonalityReport report = verify_orthogonal(code, ErrorBudget::joint(t));
    CHECK(report.pass);
    CHECK(report.conflict_count == 0);
  }
}

TEST_CASE("plus records share h1 with their classical base") {
  Registry reg = Registry::load_dir(kDataDir / "registry");
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"plus-10-2-3", "cyclic-10"},   {"plus-12-3-3", "cyclic-12"},
      {"plus-13-5-3", "cyclic-13"},   {"plus-14-6-3", "cyclic-14"},
      {"plus-19-8-3", "cyclic-19"},   {"plus-20-9-3", "combined-20"},
      {"plus-21-10-3", "cyclic-21"},  {"plus-22-11-3", "cyclic-22"},
      {"plus-23-12-3", "cyclic-23"},  {"plus-24-13-3", "cyclic-24"},
      {"plus-25-14-3", "cyclic-25"},  {"plus-26-15-3", "cyclic-26"},
      {"plus-27-16-3", "cyclic-27"},
  };
  for (const auto& [plus_name, base_name] : pairs) {
    CAPTURE(plus_name);
    const RegistryRecord* plus = reg.find(plus_name);
    const RegistryRecord* base = reg.find(base_name);
    REQUIRE(plus != nullptr);
    REQUIRE(base != nullptr);
    REQUIRE(plus->h1.has_value());
    REQUIRE(base->check.has_value());
    CHECK(*plus->h1 == *base->check);
  }
}

TEST_CASE("steane-8-3-3 expansion matches the golden listing") {
  Registry reg = Registry::load_dir(kDataDir / "registry");
  const RegistryRecord* rec = reg.find("steane-8-3-3");
  REQUIRE(rec != nullptr);
  std::string listing = expand_listing(to_signed(*rec));
  CHECK(listing == slurp(kDataDir / "golden" / "steane-8-3-3.listing.txt"));
}

TEST_CASE("plus records embed as all-plus signed codes") {
  Registry reg = Registry::load_dir(kDataDir / "registry");
  const RegistryRecord* rec = reg.find("plus-10-2-3");
  REQUIRE(rec != nullptr);
  SignedCode code = to_signed(*rec);
  CHECK(code.K() == 2);
  for (const SignVector& s : code.sign_gen()) CHECK(s.is_zero());
  OrthogonalityReport report = verify_orthogonal(code, ErrorBudget::joint(1));
  CHECK(report.pass);
}

TEST_CASE("converter kind and cross-validation errors") {
  RegistryRecord rec;
  rec.name = "x";
  rec.kind = "classical";
  rec.source = "published";
  rec.n = 3;
  rec.k = 2;
  rec.check = BinMatrix::from_strings({"110"});
  rec.generator = BinMatrix::from_strings({"111"});
  CHECK_THROWS_WITH_AS(to_linear(rec),
                       doctest::Contains("generator and check disagree"),
                       error);

  rec.generator.reset();
  rec.k = 1;
  CHECK_THROWS_WITH_AS(to_linear(rec),
                       doctest::Contains("declared k does not match"), error);

  CHECK_THROWS_WITH_AS(to_plus(rec), doctest::Contains("not a plus code"),
                       error);
  CHECK_THROWS_WITH_AS(to_signed(rec),
                       doctest::Contains("no quantum expansion"), error);

  RegistryRecord plus;
  plus.name = "p";
  plus.kind = "plus";
  plus.source = "published";
  plus.n = 7;
  plus.K = 2;  // wrong on purpose: the matrices give K = 1
  plus.h1 = BinMatrix::from_strings({"1010101", "0110011", "0001111"});
  plus.disp = BinMatrix::from_strings({"1000011"});
  CHECK_THROWS_WITH_AS(to_plus(plus),
                       doctest::Contains("declared K does not match"), error);
  CHECK_THROWS_WITH_AS(to_linear(plus),
                       doctest::Contains("not a classical code"), error);
}

TEST_CASE("derived records carry reproducible commands") {
  Registry reg = Registry::load_dir(kDataDir / "registry");
  for (const RegistryRecord* rec : reg.all()) {
    if (rec->source != "derived") continue;
    CAPTURE(rec->name);
    REQUIRE(rec->command.has_value());
    CHECK(rec->command->substr(0, 4) == "qec ");
  }
}
