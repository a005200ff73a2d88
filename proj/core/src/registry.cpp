#include "qec/registry.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace qec {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

int parse_int(const std::string& value, int lineno, const std::string& key) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw format_error("record line " + std::to_string(lineno) + ": field '" +
                       key + "' is not an integer: '" + value + "'");
  }
}

bool is_matrix_block(const std::string& key) {
  return key == "check" || key == "generator" || key == "h1" ||
         key == "disp" || key == "gcos";
}

void validate_record(const RegistryRecord& r) {
  auto fail = [&](const std::string& msg) {
    throw format_error("record '" + r.name + "': " + msg);
  };
  if (r.name.empty()) fail("missing name");
  if (r.kind != "classical" && r.kind != "plus" && r.kind != "signed") {
    fail("kind must be classical, plus or signed");
  }
  if (r.source != "published" && r.source != "derived") {
    fail("source must be published or derived");
  }
  if (r.source == "derived" && !r.command) {
    fail("derived records must carry the generating command");
  }
  if (r.n < 1 || r.n > 128) fail("n out of range");

  auto check_width = [&](const std::optional<BinMatrix>& m, const char* label) {
    if (m && m->n_cols() != r.n) {
      fail(std::string(label) + " width does not match n");
    }
  };
  check_width(r.check, "check");
  check_width(r.generator, "generator");
  check_width(r.h1, "h1");
  check_width(r.disp, "disp");
  check_width(r.gcos, "gcos");

  if (r.kind == "classical") {
    if (!r.k) fail("classical record needs k");
    if (!r.check && !r.generator) fail("classical record needs check or generator");
    if (r.K || r.d1 || r.d2 || r.h1 || r.gcos || !r.signs.empty() || r.offset) {
      fail("classical record carries quantum fields");
    }
  } else {
    if (!r.K) fail("quantum record needs K");
    int K = *r.K;
    if (K < 0 || K > 24) fail("K out of range");
    int disp_rows = r.disp ? r.disp->n_rows() : 0;
    if (disp_rows != K) fail("disp must have exactly K rows");
    if (r.kind == "plus") {
      if (!r.h1) fail("plus record needs h1");
      if (r.gcos || !r.signs.empty() || r.offset) {
        fail("plus record carries sign fields");
      }
    } else {  // signed
      if (!r.gcos) fail("signed record needs gcos");
      if (static_cast<int>(r.signs.size()) != K) {
        fail("signed record needs exactly K sign rows");
      }
    }
  }
}

}  // namespace

RegistryRecord parse_record(std::string_view text) {
  RegistryRecord rec;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;

  enum class Block { None, Matrix, Signs };
  Block block = Block::None;
  std::string block_key;
  std::vector<std::string> block_rows;
  std::set<std::string> seen;

  auto finish_block = [&]() {
    if (block == Block::None) return;
    if (block == Block::Signs) {
      rec.signs = block_rows;
    } else {
      if (block_rows.empty()) {
        throw format_error("record block '" + block_key + "' is empty");
      }
      BinMatrix m = BinMatrix::from_strings(block_rows);
      if (block_key == "check") rec.check = std::move(m);
      else if (block_key == "generator") rec.generator = std::move(m);
      else if (block_key == "h1") rec.h1 = std::move(m);
      else if (block_key == "disp") rec.disp = std::move(m);
      else rec.gcos = std::move(m);
    }
    block = Block::None;
    block_rows.clear();
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (!line.empty() && line[0] == '#') continue;
    if (line.empty()) {
      finish_block();
      continue;
    }
    if (block != Block::None) {
      block_rows.push_back(line);
      continue;
    }
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) {
      throw format_error("record line " + std::to_string(lineno) +
                         ": expected 'key:' or 'key: value'");
    }
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (!seen.insert(key).second) {
      throw format_error("record line " + std::to_string(lineno) +
                         ": duplicate field '" + key + "'");
    }
    if (value.empty()) {
      if (is_matrix_block(key)) {
        block = Block::Matrix;
        block_key = key;
      } else if (key == "signs") {
        block = Block::Signs;
        block_key = key;
      } else {
        throw format_error("record line " + std::to_string(lineno) +
                           ": unknown block '" + key + "'");
      }
      continue;
    }
    if (key == "name") rec.name = value;
    else if (key == "aliases") {
      std::istringstream as(value);
      std::string a;
      while (as >> a) rec.aliases.push_back(a);
    }
    else if (key == "kind") rec.kind = value;
    else if (key == "source") rec.source = value;
    else if (key == "command") rec.command = value;
    else if (key == "note") rec.note = value;
    else if (key == "n") rec.n = parse_int(value, lineno, key);
    else if (key == "k") rec.k = parse_int(value, lineno, key);
    else if (key == "K") rec.K = parse_int(value, lineno, key);
    else if (key == "d") rec.d = parse_int(value, lineno, key);
    else if (key == "d1") rec.d1 = parse_int(value, lineno, key);
    else if (key == "d2") rec.d2 = parse_int(value, lineno, key);
    else if (key == "offset") rec.offset = value;
    else {
      throw format_error("record line " + std::to_string(lineno) +
                         ": unknown field '" + key + "'");
    }
  }
  finish_block();
  validate_record(rec);
  return rec;
}

std::string serialize_record(const RegistryRecord& rec) {
  validate_record(rec);
  std::string out;
  auto scalar = [&](const std::string& key, const std::string& value) {
    out += key;
    out += ": ";
    out += value;
    out += '\n';
  };
  scalar("name", rec.name);
  if (!rec.aliases.empty()) {
    std::string joined;
    for (const auto& a : rec.aliases) {
      if (!joined.empty()) joined += ' ';
      joined += a;
    }
    scalar("aliases", joined);
  }
  scalar("kind", rec.kind);
  scalar("source", rec.source);
  if (rec.command) scalar("command", *rec.command);
  if (rec.note) scalar("note", *rec.note);
  scalar("n", std::to_string(rec.n));
  if (rec.k) scalar("k", std::to_string(*rec.k));
  if (rec.K) scalar("K", std::to_string(*rec.K));
  if (rec.d) scalar("d", std::to_string(*rec.d));
  if (rec.d1) scalar("d1", std::to_string(*rec.d1));
  if (rec.d2) scalar("d2", std::to_string(*rec.d2));

  auto block = [&](const std::string& key, const std::optional<BinMatrix>& m) {
    if (!m || m->n_rows() == 0) return;
    out += key;
    out += ":\n";
    out += m->to_text();
    out += '\n';
  };
  block("check", rec.check);
  block("generator", rec.generator);
  block("h1", rec.h1);
  block("gcos", rec.gcos);
  block("disp", rec.disp);
  if (!rec.signs.empty()) {
    out += "signs:\n";
    for (const auto& s : rec.signs) {
      out += s;
      out += '\n';
    }
    out += '\n';
  }
  if (rec.offset) scalar("offset", *rec.offset);
  return out;
}

Registry Registry::load_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw error("registry directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  Registry reg;
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) throw error("cannot open record file: " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    RegistryRecord rec;
    try {
      rec = parse_record(buf.str());
    } catch (const format_error& e) {
      throw format_error(file.filename().string() + ": " + e.what());
    }
    std::string name = rec.name;
    if (reg.records_.count(name) || reg.alias_to_name_.count(name)) {
      throw error("duplicate registry name: " + name);
    }
    for (const auto& alias : rec.aliases) {
      if (reg.records_.count(alias) || reg.alias_to_name_.count(alias)) {
        throw error("duplicate registry alias: " + alias);
      }
      reg.alias_to_name_[alias] = name;
    }
    reg.records_.emplace(std::move(name), std::move(rec));
  }
  return reg;
}

const RegistryRecord* Registry::find(const std::string& name_or_alias) const {
  if (auto it = records_.find(name_or_alias); it != records_.end()) {
    return &it->second;
  }
  if (auto it = alias_to_name_.find(name_or_alias); it != alias_to_name_.end()) {
    return &records_.at(it->second);
  }
  return nullptr;
}

std::vector<const RegistryRecord*> Registry::all() const {
  std::vector<const RegistryRecord*> out;
  out.reserve(records_.size());
  for (const auto& [name, rec] : records_) out.push_back(&rec);
  return out;
}

LinearCode to_linear(const RegistryRecord& rec) {
  if (rec.kind != "classical") {
    throw error("record '" + rec.name + "' is not a classical code");
  }
  LinearCode code = rec.check ? LinearCode::from_check(*rec.check)
                              : LinearCode::from_generator(*rec.generator);
  if (rec.check && rec.generator &&
      !rowspan_equal(*rec.generator, code.generator())) {
    throw error("record '" + rec.name + "': generator and check disagree");
  }
  if (code.k() != *rec.k) {
    throw error("record '" + rec.name + "': declared k does not match matrices");
  }
  return code;
}

PlusCode to_plus(const RegistryRecord& rec) {
  if (rec.kind != "plus") {
    throw error("record '" + rec.name + "' is not a plus code");
  }
  BinMatrix disp = rec.disp ? *rec.disp : BinMatrix::empty(rec.n);
  PlusCode p = build_from_h1_d(*rec.h1, disp);
  if (p.K() != *rec.K) {
    throw error("record '" + rec.name + "': declared K does not match matrices");
  }
  return p;
}

SignedCode to_signed(const RegistryRecord& rec) {
  if (rec.kind == "plus") return SignedCode::all_plus(to_plus(rec));
  if (rec.kind != "signed") {
    throw error("record '" + rec.name + "' has no quantum expansion");
  }
  BinMatrix disp = rec.disp ? *rec.disp : BinMatrix::empty(rec.n);
  const int w = 1 << rec.gcos->n_rows();
  std::vector<SignVector> sign_gen;
  sign_gen.reserve(rec.signs.size());
  for (const auto& hex : rec.signs) {
    sign_gen.push_back(SignVector::from_hex(hex, w));
  }
  std::optional<SignVector> offset;
  if (rec.offset) offset = SignVector::from_hex(*rec.offset, w);
  return SignedCode(*rec.gcos, disp, std::move(sign_gen), std::move(offset));
}

}  // namespace qec
