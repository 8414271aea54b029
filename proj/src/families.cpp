#include "propus/families.hpp"

#include <algorithm>

#include "propus/error.hpp"

namespace propus {

ResidueSet expand_block(const BlockReps& reps, const OrbitTable& t) {
  if (reps.v != t.modulus()) throw Error(Errc::InvalidArgument, "modulus mismatch");
  std::vector<Residue> out;
  std::vector<std::size_t> used;
  for (auto r : reps.reps) {
    if (r >= t.modulus().value() || !t.is_representative(r)) {
      throw Error(Errc::NotARepresentative,
                  std::to_string(r) + " is not an orbit minimum mod " +
                      std::to_string(t.modulus().value()));
    }
    const std::size_t idx = t.orbit_index_of(r);
    if (std::find(used.begin(), used.end(), idx) != used.end()) {
      throw Error(Errc::NotARepresentative, "orbit of " + std::to_string(r) + " listed twice");
    }
    used.push_back(idx);
    const auto orbit = t.orbit(idx);
    out.insert(out.end(), orbit.begin(), orbit.end());
  }
  std::sort(out.begin(), out.end());
  return ResidueSet::from_sorted(t.modulus(), std::move(out));
}

BlockReps contract_block(const ResidueSet& x, const OrbitTable& t) {
  if (x.modulus() != t.modulus()) throw Error(Errc::InvalidArgument, "modulus mismatch");
  BlockReps out{t.modulus(), {}};
  for (auto r : x) {
    if (t.rep_of(r) != r) continue;
    for (auto y : t.orbit(t.orbit_index_of(r))) {
      if (!x.contains(y)) {
        throw Error(Errc::NotInvariant, "set contains " + std::to_string(r) + " but not " +
                                            std::to_string(y) + " from the same orbit");
      }
    }
    out.reps.push_back(r);
  }
  std::size_t covered = 0;
  for (auto r : out.reps) covered += t.orbit(t.orbit_index_of(r)).size();
  if (covered != x.size()) {
    throw Error(Errc::NotInvariant, "set is not a union of orbits");
  }
  return out;
}

DifferenceFamily DifferenceFamily::from_reps(const PropusParameterSet& params, const OrbitTable& t,
                                             const std::array<BlockReps, 3>& reps) {
  if (params.v != t.modulus()) throw Error(Errc::InvalidArgument, "modulus mismatch");
  ResidueSet x1 = expand_block(reps[0], t);
  ResidueSet x2 = expand_block(reps[1], t);
  ResidueSet x4 = expand_block(reps[2], t);
  DifferenceFamily f(params, {x1, x2, x2, x4});
  f.subgroup_ = t.subgroup();
  f.reps_ = reps;
  return f;
}

DifferenceFamily DifferenceFamily::from_blocks(const PropusParameterSet& params,
                                               std::array<ResidueSet, 4> blocks,
                                               std::optional<SubgroupH> subgroup) {
  for (const auto& b : blocks) {
    if (b.modulus() != params.v) throw Error(Errc::InvalidArgument, "block modulus mismatch");
  }
  if (subgroup && subgroup->modulus() != params.v) {
    throw Error(Errc::InvalidArgument, "subgroup modulus mismatch");
  }
  DifferenceFamily f(params, std::move(blocks));
  f.subgroup_ = std::move(subgroup);
  return f;
}

DifferenceCountTable difference_counts(Modulus v, const std::array<ResidueSet, 4>& blocks) {
  DifferenceCountTable table{v, std::vector<std::int64_t>(v.value(), 0)};
  for (const auto& b : blocks) {
    for (auto a : b) {
      for (auto c : b) {
        if (a != c) ++table.counts[v.sub(a, c)];
      }
    }
  }
  return table;
}

DifferenceCountTable difference_counts(const DifferenceFamily& f) {
  return difference_counts(f.modulus(), f.blocks());
}

bool is_symmetric(const ResidueSet& x) { return negate_set(x) == x; }

std::string FamilyVerdict::details() const {
  std::string out;
  for (auto eq : params.violated) out += std::string("violates ") + equation_name(eq) + "; ";
  if (!sizes_match) out += "block sizes differ from parameter set; ";
  if (first_bad_shift) {
    out += "N(" + std::to_string(*first_bad_shift) + ") = " + std::to_string(bad_count) +
           " != lambda; ";
  }
  if (is_gs && !is_propus) {
    out += equal_pair ? "no symmetric block outside the equal pair; " : "no two equal blocks; ";
  }
  if (out.empty()) return "ok";
  out.resize(out.size() - 2);
  return out;
}

FamilyVerdict verify_family(const DifferenceFamily& f) {
  const auto& p = f.params();
  const auto& blocks = f.blocks();
  FamilyVerdict verdict;
  verdict.params = validate_params(p);
  verdict.sizes_match = true;
  for (std::size_t i = 0; i < 4; ++i) verdict.sizes_match &= blocks[i].size() == p.k[i];

  const auto table = difference_counts(f);
  for (Residue d = 1; d < p.v.value(); ++d) {
    if (table.counts[d] != p.lambda) {
      verdict.first_bad_shift = d;
      verdict.bad_count = table.counts[d];
      break;
    }
  }
  const bool eq2 = std::find(verdict.params.violated.begin(), verdict.params.violated.end(),
                             ParamEquation::DifferenceCount) == verdict.params.violated.end();
  const bool eq3 = std::find(verdict.params.violated.begin(), verdict.params.violated.end(),
                             ParamEquation::SizeSum) == verdict.params.violated.end();
  verdict.is_gs = eq2 && eq3 && verdict.sizes_match && !verdict.first_bad_shift;

  for (int i = 0; i < 4; ++i) {
    if (is_symmetric(blocks[i])) verdict.symmetric_blocks.push_back(i + 1);
  }
  bool propus_shape = false;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (blocks[i] != blocks[j]) continue;
      if (!verdict.equal_pair) verdict.equal_pair = std::pair{i + 1, j + 1};
      for (int r = 0; r < 4; ++r) {
        if (r != i && r != j && is_symmetric(blocks[r])) propus_shape = true;
      }
    }
  }
  verdict.is_propus = verdict.is_gs && propus_shape;
  return verdict;
}

bool is_translate_of(const ResidueSet& x, const ResidueSet& y) {
  if (x.modulus() != y.modulus() || x.size() != y.size()) return false;
  if (x.empty()) return true;
  const Modulus v = x.modulus();
  // Any translate mapping x onto y sends x[0] to some element of y.
  const auto ymask = y.indicator();
  for (auto target : y) {
    const Residue g = v.sub(target, x[0]);
    bool ok = true;
    for (auto a : x) {
      if (!ymask[v.add(a, g)]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool is_multiplier(const DifferenceFamily& f, Residue m) {
  const Modulus v = f.modulus();
  if (!v.is_unit(m)) {
    throw Error(Errc::NonUnit, std::to_string(m) + " is not coprime to " + std::to_string(v.value()));
  }
  return std::all_of(f.blocks().begin(), f.blocks().end(), [&](const ResidueSet& x) {
    return is_translate_of(x, scale_set(x, m % v.value()));
  });
}

}  // namespace propus
