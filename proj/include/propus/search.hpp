#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "propus/families.hpp"

namespace propus {

enum class BlockRole { X1, X2, X4 };
enum class SymmetricRole { First, Last, Either };

/// Calls fn with the ascending orbit indices of every union of orbits of
/// total size k. With symmetric_only, orbits are taken together with their
/// negation partners, so only sets with -X = X are produced.
void for_each_invariant_subset(const OrbitTable& t, std::uint32_t k, bool symmetric_only,
                               const std::function<void(std::span<const std::size_t>)>& fn);

std::vector<BlockReps> enumerate_invariant_subsets(const OrbitTable& t, std::uint32_t k,
                                                   bool symmetric_only);

/// Representatives of the nontrivial H-orbits on shifts, in orbit order.
std::vector<Residue> shift_representatives(const OrbitTable& t);

/// N_X(s) for each shift representative. For H-invariant X this determines
/// N_X on every nonzero shift, since N_X(h s) = N_X(s).
std::vector<std::uint16_t> compressed_counts(const ResidueSet& x, const OrbitTable& t);

/// Inverse of the compression: N_X(s) for s in [0, v), with entry 0 = |X|.
std::vector<std::int64_t> expand_counts(std::span<const std::uint16_t> compressed,
                                        std::uint32_t size, const OrbitTable& t);

/// All H-invariant candidates for one block role, with their compressed
/// autocorrelation keys stored row-major.
struct CandidatePool {
  BlockRole role;
  std::uint32_t cardinality;
  std::size_t width;  // number of nontrivial shift orbits
  std::vector<BlockReps> entries;
  std::vector<std::uint16_t> keys;

  std::size_t size() const noexcept { return entries.size(); }
  std::span<const std::uint16_t> key(std::size_t i) const {
    return std::span<const std::uint16_t>(keys).subspan(i * width, width);
  }
};

CandidatePool build_pool(const OrbitTable& t, BlockRole role, std::uint32_t k, bool symmetric_only);

struct SearchSpec {
  PropusParameterSet params;
  std::vector<Residue> generators;
  SymmetricRole symmetric_role = SymmetricRole::Either;
  bool dedupe = false;
  std::size_t limit = 0;  // 0 = unlimited
  unsigned threads = 1;
};

struct SearchResult {
  std::vector<DifferenceFamily> families;
  bool exhaustive = true;  // false when `limit` cut the search short
  std::vector<std::string> warnings;
  std::uint64_t probes = 0;
};

/// Exhaustive orbit-method search for (X1, X2 = X3, X4) with the declared
/// block symmetric and N1(s) + 2 N2(s) + N4(s) = lambda for all s != 0.
/// Output is sorted by representative lists and does not depend on the
/// thread count unless a limit truncates it.
/// Throws InfeasibleParams when the parameter set is invalid or not H-feasible.
SearchResult search(const SearchSpec& spec);

/// Orders families by their (X1, X2, X4) representative lists, falling back
/// to the expanded blocks.
bool family_encoding_less(const DifferenceFamily& a, const DifferenceFamily& b);

}  // namespace propus
