#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "propus/residues.hpp"

namespace propus {

/// Parameter set (v; k1,k2,k3,k4; lambda) of a four-block difference family.
struct PropusParameterSet {
  Modulus v;
  std::array<std::uint32_t, 4> k;
  std::int64_t lambda;

  std::uint32_t total_size() const noexcept { return k[0] + k[1] + k[2] + k[3]; }
  std::string to_string() const;

  friend auto operator<=>(const PropusParameterSet&, const PropusParameterSet&) = default;
};

enum class ParamEquation {
  DifferenceCount,  // sum k_i(k_i - 1) = lambda (v - 1)
  SizeSum,          // sum k_i = lambda + v
  SquareSum,        // sum (v - 2 k_i)^2 = 4v
};

const char* equation_name(ParamEquation eq) noexcept;

struct ParamVerdict {
  std::vector<ParamEquation> violated;
  bool has_equal_sizes = false;  // k_i = k_j for some i != j
  bool k2_equals_k3 = false;

  bool valid() const noexcept { return violated.empty(); }
};

/// Checks the three parameter equations exactly; lambda is taken as given.
/// Throws InvalidArgument when some k_i exceeds v.
ParamVerdict validate_params(const PropusParameterSet& p);

/// All parameter sets with k2 = k3, every k_i <= v/2 and k1 >= k4 that satisfy
/// the parameter equations, ordered by descending (k1, k2, k4).
/// Throws EvenModulus for even v.
std::vector<PropusParameterSet> enumerate_propus_params(Modulus v);

/// reachable[s] is true iff some union of orbits has exactly s elements.
std::vector<bool> invariant_sizes(const OrbitTable& t);

/// Same as invariant_sizes, restricted to unions closed under negation.
std::vector<bool> symmetric_invariant_sizes(const OrbitTable& t);

/// True iff every k_i is the size of an H-invariant subset.
bool h_feasible(const PropusParameterSet& p, const OrbitTable& t);

/// h_feasible, plus k1 or k4 is the size of a symmetric H-invariant subset,
/// so that the block outside the equal pair can be symmetric.
bool propus_feasible(const PropusParameterSet& p, const OrbitTable& t);

}  // namespace propus
