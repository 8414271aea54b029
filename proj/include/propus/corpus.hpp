#pragma once

/**
 * @file corpus.hpp
 * @brief Text and JSON formats for families, the matrix file format, and
 * the bundled table corpus.
 *
 * Text format (one record):
 *
 *     (v;k1,k2,k3,k4;lambda), H={h1,h2,...}
 *     [r,...],[r,...],[r,...];
 *     [r,...],[r,...],[r,...]
 *
 * Each bracketed list names the orbit representatives of X1, X2 = X3 and
 * X4. Families of one record are separated by ';', records by blank lines,
 * and lists may wrap across lines.
 */

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "propus/families.hpp"
#include "propus/hadamard.hpp"

namespace propus {

using RepTriple = std::array<std::vector<Residue>, 3>;

struct FamilyRecord {
  PropusParameterSet params;
  std::vector<Residue> subgroup_listed;  // in the order written
  std::vector<RepTriple> families;
  std::size_t line = 0;                  // header line in the source, 0 if unknown

  SubgroupH subgroup() const;
  OrbitTable orbit_table() const { return OrbitTable(subgroup()); }
  std::vector<DifferenceFamily> expand() const;

  friend bool operator==(const FamilyRecord& a, const FamilyRecord& b) {
    return a.params == b.params && a.subgroup_listed == b.subgroup_listed &&
           a.families == b.families;
  }
};

struct ParseOptions {
  /// Skip lines that cannot belong to the notation (prose) and tolerate a
  /// dangling ';' at the end of a record; each is reported as a warning.
  bool lenient = false;
};

/// Throws SyntaxError, SubgroupNotClosed, NonUnit, BlockSizeMismatch or
/// NotARepresentative.
std::vector<FamilyRecord> parse_families(std::string_view text, const ParseOptions& options = {},
                                         std::vector<std::string>* warnings = nullptr);

std::string serialize_record(const FamilyRecord& record);
/// Records joined by blank lines, newline-terminated.
std::string serialize_records(const std::vector<FamilyRecord>& records);

/// Builds a record from families sharing one parameter set and subgroup;
/// every family must carry representative lists.
FamilyRecord make_record(const PropusParameterSet& params, const SubgroupH& h,
                         const std::vector<DifferenceFamily>& families);

struct JsonOptions {
  bool expanded_blocks = false;
  bool verdicts = false;
};

nlohmann::json to_json(const FamilyRecord& record, const JsonOptions& options = {});
nlohmann::json to_json(const std::vector<FamilyRecord>& records, const JsonOptions& options = {});
/// Accepts one record object or {"records": [...]}. Throws SchemaError.
std::vector<FamilyRecord> records_from_json(const nlohmann::json& j);
FamilyRecord record_from_json(const nlohmann::json& j);

/// Reads a file in either format, by its first non-space character.
std::vector<FamilyRecord> load_records(const std::string& path, const ParseOptions& options = {},
                                       std::vector<std::string>* warnings = nullptr);
std::vector<FamilyRecord> parse_any(std::string_view text, const ParseOptions& options = {},
                                    std::vector<std::string>* warnings = nullptr);

/// First line the order n, then n lines of '+'/'-', each '\n'-terminated.
void write_matrix(const SignMatrix& h, std::ostream& out);
std::string matrix_to_string(const SignMatrix& h);
SignMatrix read_matrix(std::string_view text);

/// The bundled cleaned tables: 1 (new orders), 2 (optimal sequences),
/// 3 (orbit-method families). Throws InvalidArgument for other numbers.
std::string_view bundled_table(int table);
std::string_view bundled_annotations();

}  // namespace propus
