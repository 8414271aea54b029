#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "propus/corpus.hpp"
#include "propus/equivalence.hpp"
#include "propus/error.hpp"
#include "propus/hadamard.hpp"
#include "propus/paramsets.hpp"
#include "propus/search.hpp"
#include "propus/sequences.hpp"

using namespace propus;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Bad command-line values, as opposed to bad data in the input files.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned default_threads() {
  if (const char* env = std::getenv("PROPUS_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("PROPUS_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::int64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + " list '" + text + "'");
    }
  }
  return out;
}

std::vector<Residue> parse_generators(Modulus v, const std::string& text) {
  std::vector<Residue> gens;
  for (auto g : parse_list(text, "generator")) gens.push_back(v.reduce(g));
  return gens;
}

std::string join(const auto& values, const char* sep = ",") {
  std::string out;
  for (const auto& x : values) {
    if (!out.empty()) out += sep;
    out += std::to_string(x);
  }
  return out;
}

std::vector<FamilyRecord> load(const std::string& path, bool lenient) {
  std::vector<std::string> warnings;
  auto records = load_records(path, {.lenient = lenient}, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  return records;
}

struct Located {
  const FamilyRecord* record;
  DifferenceFamily family;
};

// `index` counts families across all records, starting at 1.
Located pick(const std::vector<FamilyRecord>& records, std::size_t index, const std::string& path) {
  std::size_t seen = 0;
  for (const auto& r : records) {
    if (index <= seen + r.families.size()) return {&r, r.expand()[index - seen - 1]};
    seen += r.families.size();
  }
  throw UsageError("index " + std::to_string(index) + " out of range: " + path + " holds " +
                   std::to_string(seen) + " families");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(Errc::IoError, "write failed for " + path);
}

std::string profile_text(const PafProfile& p) {
  std::ostringstream out;
  out << "PAF: " << join(p.values, " ") << '\n';
  out << "levels: {" << join(p.levels()) << "}\n";
  std::string cls = p.three_level ? "three-level, " : "";
  if (!p.optimal) {
    cls += "optimality undefined (v = 3 mod 4)";
  } else {
    cls += *p.optimal ? "optimal" : "not optimal";
  }
  cls += p.balanced ? ", balanced" : ", not balanced";
  out << "classification: " << cls << '\n';
  return out.str();
}

// --- subcommands -------------------------------------------------------------

int cmd_params(std::int64_t v_in, const std::string& gens) {
  const Modulus v(v_in);
  const auto h = generate_subgroup(v, parse_generators(v, gens));
  const OrbitTable t(h);
  std::cout << "H = " << h.to_string() << '\n';
  for (const auto& p : enumerate_propus_params(v)) {
    if (h_feasible(p, t)) std::cout << p.to_string() << '\n';
  }
  return 0;
}

int cmd_orbits(std::int64_t v_in, const std::string& gens) {
  const Modulus v(v_in);
  const auto h = generate_subgroup(v, parse_generators(v, gens));
  const OrbitTable t(h);
  std::cout << "H = " << h.to_string() << ", " << t.orbit_count() << " orbits\n";
  for (std::size_t i = 0; i < t.orbit_count(); ++i) {
    const auto orbit = t.orbit(i);
    std::cout << t.representative(i) << ": {" << join(orbit) << "} size " << orbit.size()
              << ", negation partner " << t.representative(t.negation_partner(i)) << '\n';
  }
  return 0;
}

struct SearchArgs {
  std::int64_t v = 0;
  std::string gens, k, sym_block = "either", out;
  bool dedupe = false;
  std::size_t limit = 0;
  unsigned threads = 0;
};

int cmd_search(const SearchArgs& a) {
  const Modulus v(a.v);
  const auto ks = parse_list(a.k, "block size");
  if (ks.size() != 4) throw UsageError("--k needs four sizes");
  PropusParameterSet p{v, {}, 0};
  std::int64_t total = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (ks[i] < 0) throw UsageError("block sizes must be non-negative");
    p.k[i] = static_cast<std::uint32_t>(ks[i]);
    total += ks[i];
  }
  p.lambda = total - a.v;
  SearchSpec spec{p, parse_generators(v, a.gens)};
  spec.symmetric_role = a.sym_block == "first"  ? SymmetricRole::First
                        : a.sym_block == "last" ? SymmetricRole::Last
                                                : SymmetricRole::Either;
  spec.dedupe = a.dedupe;
  spec.limit = a.limit;
  spec.threads = a.threads ? a.threads : default_threads();
  const auto result = search(spec);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
  std::cerr << result.families.size() << " families" << (result.exhaustive ? "" : " (limit reached)")
            << ", " << result.probes << " probes\n";
  if (result.families.empty()) return 0;
  const auto record = make_record(p, generate_subgroup(v, spec.generators), result.families);
  write_output(a.out, serialize_record(record) + "\n");
  return 0;
}

int cmd_verify(const std::string& path, bool json, bool lenient) {
  const auto records = load(path, lenient);
  bool all_ok = true;
  std::size_t index = 0;
  for (const auto& r : records) {
    for (const auto& f : r.expand()) {
      const auto verdict = verify_family(f);
      all_ok = all_ok && verdict.is_gs && verdict.is_propus;
      if (!json) {
        std::cout << "family " << ++index << " " << r.params.to_string() << ": " << verdict.details()
                  << '\n';
      }
    }
  }
  if (json) std::cout << to_json(records, {.verdicts = true}).dump(2) << '\n';
  return all_ok ? 0 : kExitFailure;
}

int cmd_expand(const std::string& path, bool json, bool lenient) {
  const auto records = load(path, lenient);
  if (json) {
    std::cout << to_json(records, {.expanded_blocks = true}).dump(2) << '\n';
    return 0;
  }
  std::size_t index = 0;
  for (const auto& r : records) {
    for (const auto& f : r.expand()) {
      std::cout << "family " << ++index << " " << r.params.to_string() << '\n';
      for (int i = 1; i <= 4; ++i) std::cout << "  X" << i << " = " << f.block(i).to_string() << '\n';
    }
  }
  return 0;
}

int cmd_hadamard(const std::string& path, std::size_t index, const std::string& out, bool check,
                 bool lenient) {
  const auto records = load(path, lenient);
  const auto [record, family] = pick(records, index, path);
  const auto h = build_propus(arrange_for_propus(family).blocks, family.modulus(), default_threads());
  write_output(out, matrix_to_string(h.matrix));
  std::cerr << record->params.to_string() << ": order " << h.order() << '\n';
  if (!check) return 0;
  std::cerr << "symmetric: " << (h.verdict.is_symmetric ? "yes" : "no")
            << ", Hadamard: " << (h.verdict.is_hadamard ? "yes" : "no") << '\n';
  return h.verdict.is_symmetric && h.verdict.is_hadamard ? 0 : kExitFailure;
}

struct ClassifyArgs {
  std::string family, set;
  int block = 0;
  std::size_t index = 1;
  std::int64_t v = 0;
};

int cmd_classify(const ClassifyArgs& a, bool lenient) {
  if (a.family.empty() == a.set.empty()) throw UsageError("give exactly one of --family or --set");
  if (!a.family.empty()) {
    if (a.block != 1 && a.block != 2 && a.block != 4) throw UsageError("--block must be 1, 2 or 4");
    const auto records = load(a.family, lenient);
    const auto [record, family] = pick(records, a.index, a.family);
    std::cout << record->params.to_string() << " X" << a.block << " = "
              << family.block(a.block).to_string() << '\n';
    std::cout << profile_text(paf(to_sequence(family.block(a.block))));
    return 0;
  }
  if (a.v <= 0) throw UsageError("--set needs --v");
  const auto values = parse_list(a.set, "element");
  std::cout << profile_text(paf(to_sequence(ResidueSet(Modulus(a.v), values))));
  return 0;
}

int cmd_equivalent(const std::string& path_a, const std::string& path_b, std::size_t index_a,
                   std::size_t index_b, bool lenient) {
  const auto ra = load(path_a, lenient);
  const auto rb = load(path_b, lenient);
  const auto fa = pick(ra, index_a, path_a).family;
  const auto fb = pick(rb, index_b, path_b).family;
  const bool same = equivalent(fa, fb);
  std::cout << (same ? "equivalent" : "not equivalent") << '\n';
  return same ? 0 : kExitFailure;
}

int cmd_corpus_check() {
  const unsigned threads = default_threads();
  bool verified = true, symmetric = true, hadamard = true;
  for (int table = 1; table <= 3; ++table) {
    const auto records = parse_families(bundled_table(table));
    std::size_t families = 0, ok = 0;
    for (const auto& r : records) {
      for (const auto& f : r.expand()) {
        ++families;
        const auto verdict = verify_family(f);
        if (!(verdict.is_gs && verdict.is_propus)) {
          verified = false;
          std::cout << "table " << table << " " << r.params.to_string() << ": " << verdict.details()
                    << '\n';
          continue;
        }
        const auto h = build_propus(arrange_for_propus(f).blocks, f.modulus(), threads);
        symmetric = symmetric && h.verdict.is_symmetric;
        hadamard = hadamard && h.verdict.is_hadamard;
        if (h.verdict.is_symmetric && h.verdict.is_hadamard) {
          ++ok;
        } else {
          std::cout << "table " << table << " " << r.params.to_string() << ": order " << h.order()
                    << " matrix is " << (h.verdict.is_symmetric ? "" : "not symmetric ")
                    << (h.verdict.is_hadamard ? "" : "not Hadamard") << '\n';
        }
      }
    }
    std::cout << "table " << table << ": " << ok << "/" << families << " families pass\n";
  }
  if (verified && symmetric && hadamard) {
    std::cout << "all families verified; all Hadamard matrices symmetric\n";
    return 0;
  }
  return kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Propus difference families and symmetric Hadamard matrices"};
  app.require_subcommand(1);
  bool lenient = false;
  app.add_flag("--lenient", lenient, "Skip unrecognized lines in family files, with warnings");

  std::int64_t v = 0;
  std::string gens;
  auto* params = app.add_subcommand("params", "List H-feasible normalized parameter sets");
  auto* orbits = app.add_subcommand("orbits", "Print the orbits of H on Z_v");
  for (auto* sub : {params, orbits}) {
    sub->add_option("--v", v, "Modulus")->required();
    sub->add_option("--h-gen", gens, "Generators of H, comma separated")->required();
  }

  SearchArgs sa;
  auto* search_cmd = app.add_subcommand("search", "Search for propus families");
  search_cmd->add_option("--v", sa.v, "Modulus")->required();
  search_cmd->add_option("--h-gen", sa.gens, "Generators of H, comma separated")->required();
  search_cmd->add_option("--k", sa.k, "Block sizes K1,K2,K3,K4")->required();
  search_cmd->add_option("--sym-block", sa.sym_block, "Which block is symmetric")
      ->check(CLI::IsMember({"first", "last", "either"}));
  search_cmd->add_flag("--dedupe", sa.dedupe, "Keep one family per equivalence class");
  search_cmd->add_option("--limit", sa.limit, "Stop after N families (0 = all)");
  search_cmd->add_option("--threads", sa.threads, "Worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_option("--out", sa.out, "Output file (default stdout)");

  std::string file;
  bool json = false;
  auto* verify = app.add_subcommand("verify", "Verify every family in a file");
  auto* expand = app.add_subcommand("expand", "Print expanded blocks");
  for (auto* sub : {verify, expand}) {
    sub->add_option("file", file, "Family file (text or JSON)")->required();
    sub->add_flag("--json", json, "JSON output");
  }

  std::size_t index = 1;
  std::string out;
  bool check = false;
  auto* hadamard = app.add_subcommand("hadamard", "Assemble the propus array of one family");
  hadamard->add_option("file", file, "Family file (text or JSON)")->required();
  hadamard->add_option("--index", index, "Family number across the file, from 1")
      ->check(CLI::PositiveNumber);
  hadamard->add_option("--out", out, "Matrix file (default stdout)");
  hadamard->add_flag("--check", check, "Verify symmetry and H H^T = nI");

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "PAF profile of one block or set");
  classify->add_option("--family", ca.family, "Family file");
  classify->add_option("--block", ca.block, "Block 1, 2 or 4");
  classify->add_option("--index", ca.index, "Family number across the file, from 1")
      ->check(CLI::PositiveNumber);
  classify->add_option("--set", ca.set, "Elements, comma separated");
  classify->add_option("--v", ca.v, "Modulus for --set");

  std::string file_b;
  std::size_t index_a = 1, index_b = 1;
  auto* equiv = app.add_subcommand("equivalent", "Test two families for equivalence");
  equiv->add_option("file_a", file, "First family file")->required();
  equiv->add_option("file_b", file_b, "Second family file")->required();
  equiv->add_option("--index-a", index_a, "Family number in the first file")->check(CLI::PositiveNumber);
  equiv->add_option("--index-b", index_b, "Family number in the second file")->check(CLI::PositiveNumber);

  auto* corpus_check = app.add_subcommand("corpus-check", "Verify the bundled tables end to end");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (params->parsed()) return cmd_params(v, gens);
    if (orbits->parsed()) return cmd_orbits(v, gens);
    if (search_cmd->parsed()) return cmd_search(sa);
    if (verify->parsed()) return cmd_verify(file, json, lenient);
    if (expand->parsed()) return cmd_expand(file, json, lenient);
    if (hadamard->parsed()) return cmd_hadamard(file, index, out, check, lenient);
    if (classify->parsed()) return cmd_classify(ca, lenient);
    if (equiv->parsed()) return cmd_equivalent(file, file_b, index_a, index_b, lenient);
    if (corpus_check->parsed()) return cmd_corpus_check();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SyntaxError& e) {
    std::cerr << "error: line " << e.line() << ", column " << e.column() << ": " << e.what() << '\n';
    return kExitFailure;
  } catch (const Error& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << '\n';
    const bool usage = e.code() == Errc::InvalidModulus || e.code() == Errc::NonUnitGenerator ||
                       e.code() == Errc::InvalidArgument || e.code() == Errc::EvenModulus;
    return usage ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}
