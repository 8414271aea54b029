#include "propus/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "propus/error.hpp"

namespace propus {

namespace {

bool is_notation_line(std::string_view line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (!std::isdigit(static_cast<unsigned char>(c)) &&
        std::string_view("()[]{},;=H").find(c) == std::string_view::npos) {
      return false;
    }
  }
  return true;
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options, std::vector<std::string>* warnings)
      : options_(options), warnings_(warnings) {
    // In lenient mode prose lines are blanked so positions stay meaningful.
    std::size_t line_no = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (options_.lenient && !is_notation_line(line)) {
        warn("line " + std::to_string(line_no) + ": skipped unrecognized text");
        text_.append(line.size(), ' ');
      } else {
        text_.append(line);
      }
      if (end < text.size()) text_ += '\n';
      start = end + 1;
      ++line_no;
    }
  }

  std::vector<FamilyRecord> run() {
    std::vector<FamilyRecord> records;
    skip_space();
    while (!at_end()) {
      records.push_back(record());
      skip_space();
    }
    return records;
  }

 private:
  FamilyRecord record() {
    FamilyRecord rec{PropusParameterSet{Modulus(2), {}, 0}, {}, {}, line_};
    const std::size_t header_line = line_, header_col = col_;
    expect('(');
    const std::int64_t v = integer();
    expect(';');
    std::array<std::int64_t, 4> k{};
    for (int i = 0; i < 4; ++i) {
      if (i) expect(',');
      k[i] = integer();
    }
    expect(';');
    const std::int64_t lambda = integer();
    expect(')');
    expect(',');
    expect('H');
    expect('=');
    expect('{');
    rec.subgroup_listed = integer_list('}');
    expect('}');

    try {
      rec.params.v = Modulus(v);
    } catch (const Error& e) {
      throw SyntaxError(header_line, header_col, e.what());
    }
    for (int i = 0; i < 4; ++i) {
      if (k[i] > v) throw SyntaxError(header_line, header_col, "block size exceeds v");
      rec.params.k[i] = static_cast<std::uint32_t>(k[i]);
    }
    rec.params.lambda = lambda;

    rec.families.push_back(family());
    for (;;) {
      skip_space();
      if (peek() != ';') break;
      const std::size_t semi_line = line_;
      advance();
      skip_space();
      if (at_end() || peek() == '(') {
        if (!options_.lenient) fail("expected '[' after ';'");
        warn("line " + std::to_string(semi_line) + ": dangling ';' ignored");
        break;
      }
      rec.families.push_back(family());
    }
    return rec;
  }

  RepTriple family() {
    RepTriple t;
    for (int i = 0; i < 3; ++i) {
      if (i) expect(',');
      expect('[');
      t[i] = integer_list(']');
      expect(']');
    }
    return t;
  }

  std::vector<Residue> integer_list(char close) {
    std::vector<Residue> out;
    skip_space();
    if (peek() == close) return out;
    for (;;) {
      const std::int64_t x = integer();
      if (x > Modulus::kMax) fail("integer too large");
      out.push_back(static_cast<Residue>(x));
      skip_space();
      if (peek() != ',') break;
      advance();
    }
    return out;
  }

  std::int64_t integer() {
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::int64_t x = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      x = x * 10 + (peek() - '0');
      if (x > 1'000'000'000) fail("integer too large");
      advance();
    }
    return x;
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) {
    std::string found = at_end() ? "end of input" : std::string("'") + peek() + "'";
    throw SyntaxError(line_, col_, what + ", found " + found);
  }
  void warn(std::string msg) {
    if (warnings_) warnings_->push_back(std::move(msg));
  }

  ParseOptions options_;
  std::vector<std::string>* warnings_;
  std::string text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

std::string join(const std::vector<Residue>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

// Subgroup closure, representatives and block sizes.
void validate_record(const FamilyRecord& rec) {
  const std::string where =
      rec.line ? "record at line " + std::to_string(rec.line) + ": " : rec.params.to_string() + ": ";
  try {
    const OrbitTable t = rec.orbit_table();
    for (std::size_t fi = 0; fi < rec.families.size(); ++fi) {
      const auto& fam = rec.families[fi];
      const std::array<std::uint32_t, 3> declared = {rec.params.k[0], rec.params.k[1], rec.params.k[3]};
      for (int b = 0; b < 3; ++b) {
        const auto x = expand_block(BlockReps{rec.params.v, fam[b]}, t);
        if (x.size() != declared[b]) {
          throw Error(Errc::BlockSizeMismatch,
                      "family " + std::to_string(fi + 1) + " block " + std::to_string(b == 2 ? 4 : b + 1) +
                          " has " + std::to_string(x.size()) + " elements, header says " +
                          std::to_string(declared[b]));
        }
      }
      if (rec.params.k[2] != rec.params.k[1]) {
        throw Error(Errc::BlockSizeMismatch, "three-block notation requires k2 = k3");
      }
    }
  } catch (const SyntaxError&) {
    throw;
  } catch (const Error& e) {
    throw Error(e.code(), where + e.what());
  }
}

}  // namespace

SubgroupH FamilyRecord::subgroup() const {
  return SubgroupH::from_elements(params.v, subgroup_listed);
}

std::vector<DifferenceFamily> FamilyRecord::expand() const {
  const OrbitTable t = orbit_table();
  std::vector<DifferenceFamily> out;
  for (const auto& fam : families) {
    out.push_back(DifferenceFamily::from_reps(
        params, t, {BlockReps{params.v, fam[0]}, BlockReps{params.v, fam[1]}, BlockReps{params.v, fam[2]}}));
  }
  return out;
}

std::vector<FamilyRecord> parse_families(std::string_view text, const ParseOptions& options,
                                         std::vector<std::string>* warnings) {
  auto records = Parser(text, options, warnings).run();
  for (const auto& rec : records) validate_record(rec);
  return records;
}

std::string serialize_record(const FamilyRecord& record) {
  const auto& p = record.params;
  std::string out = p.to_string() + ", H={" + join(record.subgroup_listed) + "}\n";
  for (std::size_t i = 0; i < record.families.size(); ++i) {
    const auto& f = record.families[i];
    out += "[" + join(f[0]) + "],[" + join(f[1]) + "],[" + join(f[2]) + "]";
    out += i + 1 < record.families.size() ? ";\n" : "\n";
  }
  return out;
}

std::string serialize_records(const std::vector<FamilyRecord>& records) {
  std::string out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i) out += '\n';
    out += serialize_record(records[i]);
  }
  return out;
}

FamilyRecord make_record(const PropusParameterSet& params, const SubgroupH& h,
                         const std::vector<DifferenceFamily>& families) {
  FamilyRecord rec{params, {h.elements().begin(), h.elements().end()}, {}, 0};
  for (const auto& f : families) {
    if (!f.reps()) throw Error(Errc::InvalidArgument, "family has no orbit representatives");
    const auto& r = *f.reps();
    rec.families.push_back({r[0].reps, r[1].reps, r[2].reps});
  }
  return rec;
}

nlohmann::json to_json(const FamilyRecord& record, const JsonOptions& options) {
  using nlohmann::json;
  json j;
  j["v"] = record.params.v.value();
  j["k"] = record.params.k;
  j["lambda"] = record.params.lambda;
  j["subgroup"] = record.subgroup_listed;
  j["families"] = json::array();
  std::vector<DifferenceFamily> expanded;
  if (options.expanded_blocks || options.verdicts) expanded = record.expand();
  for (std::size_t i = 0; i < record.families.size(); ++i) {
    json f;
    f["reps"] = record.families[i];
    if (options.expanded_blocks) {
      json blocks = json::array();
      for (const auto& b : expanded[i].blocks()) {
        blocks.push_back(std::vector<Residue>(b.begin(), b.end()));
      }
      f["blocks"] = blocks;
    }
    if (options.verdicts) {
      const auto v = verify_family(expanded[i]);
      f["verdict"] = {{"is_gs", v.is_gs},
                      {"is_propus", v.is_propus},
                      {"symmetric_blocks", v.symmetric_blocks},
                      {"details", v.details()}};
    }
    j["families"].push_back(std::move(f));
  }
  return j;
}

nlohmann::json to_json(const std::vector<FamilyRecord>& records, const JsonOptions& options) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) arr.push_back(to_json(r, options));
  return {{"records", arr}};
}

FamilyRecord record_from_json(const nlohmann::json& j) {
  auto require = [&](const nlohmann::json& obj, const char* key) -> const nlohmann::json& {
    if (!obj.is_object() || !obj.contains(key)) {
      throw Error(Errc::SchemaError, std::string("missing field '") + key + "'");
    }
    return obj.at(key);
  };
  try {
    const auto v = require(j, "v").get<std::int64_t>();
    const auto k = require(j, "k").get<std::vector<std::int64_t>>();
    const auto lambda = require(j, "lambda").get<std::int64_t>();
    const auto h = require(j, "subgroup").get<std::vector<Residue>>();
    const auto& fams = require(j, "families");
    if (k.size() != 4) throw Error(Errc::SchemaError, "'k' must have four entries");
    FamilyRecord rec{PropusParameterSet{Modulus(v), {}, lambda}, h, {}, 0};
    for (int i = 0; i < 4; ++i) {
      if (k[i] < 0 || k[i] > v) throw Error(Errc::SchemaError, "block size out of range");
      rec.params.k[i] = static_cast<std::uint32_t>(k[i]);
    }
    if (!fams.is_array()) throw Error(Errc::SchemaError, "'families' must be an array");
    for (const auto& f : fams) {
      const auto reps = require(f, "reps").get<std::vector<std::vector<Residue>>>();
      if (reps.size() != 3) throw Error(Errc::SchemaError, "'reps' must hold three lists");
      rec.families.push_back({reps[0], reps[1], reps[2]});
    }
    validate_record(rec);
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::SchemaError, e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::InvalidModulus) throw Error(Errc::SchemaError, e.what());
    throw;
  }
}

std::vector<FamilyRecord> records_from_json(const nlohmann::json& j) {
  std::vector<FamilyRecord> out;
  if (j.is_object() && j.contains("records")) {
    if (!j["records"].is_array()) throw Error(Errc::SchemaError, "'records' must be an array");
    for (const auto& r : j["records"]) out.push_back(record_from_json(r));
  } else if (j.is_array()) {
    for (const auto& r : j) out.push_back(record_from_json(r));
  } else {
    out.push_back(record_from_json(j));
  }
  return out;
}

std::vector<FamilyRecord> parse_any(std::string_view text, const ParseOptions& options,
                                    std::vector<std::string>* warnings) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && (text[first] == '{' || text[first] == '[')) {
    // A text record starts with '(' so '{' or '[' means JSON.
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(Errc::SchemaError, e.what());
    }
    return records_from_json(j);
  }
  return parse_families(text, options, warnings);
}

std::vector<FamilyRecord> load_records(const std::string& path, const ParseOptions& options,
                                       std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_any(ss.str(), options, warnings);
}

void write_matrix(const SignMatrix& h, std::ostream& out) {
  const std::size_t n = h.order();
  std::string line(n, '+');
  out << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) line[j] = h(i, j) > 0 ? '+' : '-';
    out << line << '\n';
  }
  if (!out) throw Error(Errc::IoError, "failed to write matrix");
}

std::string matrix_to_string(const SignMatrix& h) {
  std::ostringstream ss;
  write_matrix(h, ss);
  return ss.str();
}

SignMatrix read_matrix(std::string_view text) {
  std::size_t pos = text.find('\n');
  if (pos == std::string_view::npos) throw Error(Errc::SchemaError, "missing order line");
  std::size_t n = 0;
  for (char c : text.substr(0, pos)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(Errc::SchemaError, "bad order line");
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  SignMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t start = pos + 1;
    pos = text.find('\n', start);
    if (pos == std::string_view::npos || pos - start != n) {
      throw Error(Errc::SchemaError, "row " + std::to_string(i + 1) + " malformed");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const char c = text[start + j];
      if (c != '+' && c != '-') throw Error(Errc::SchemaError, "entries must be '+' or '-'");
      m.set(i, j, c == '+' ? 1 : -1);
    }
  }
  if (pos + 1 != text.size()) throw Error(Errc::SchemaError, "trailing data after matrix");
  return m;
}

}  // namespace propus
