#include "propus/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "propus/equivalence.hpp"
#include "propus/error.hpp"

namespace propus {

namespace {

struct OrbitClass {
  std::vector<std::size_t> orbits;
  std::size_t size;
};

std::vector<OrbitClass> orbit_classes(const OrbitTable& t, bool symmetric_only) {
  std::vector<OrbitClass> classes;
  for (std::size_t i = 0; i < t.orbit_count(); ++i) {
    if (!symmetric_only) {
      classes.push_back({{i}, t.orbit(i).size()});
      continue;
    }
    const std::size_t j = t.negation_partner(i);
    if (j < i) continue;
    if (j == i) {
      classes.push_back({{i}, t.orbit(i).size()});
    } else {
      classes.push_back({{i, j}, t.orbit(i).size() + t.orbit(j).size()});
    }
  }
  return classes;
}

std::uint64_t hash_key(std::span<const std::uint16_t> key) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto x : key) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h ^ (h >> 29);
}

// Open-addressing index from key to the run of pool entries sharing it.
class KeyIndex {
 public:
  explicit KeyIndex(const CandidatePool& pool) : pool_(pool) {
    order_.resize(pool.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      const auto ka = pool.key(a), kb = pool.key(b);
      if (std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end())) return true;
      if (std::lexicographical_compare(kb.begin(), kb.end(), ka.begin(), ka.end())) return false;
      return a < b;
    });
    std::size_t cap = 16;
    while (cap < 2 * order_.size()) cap <<= 1;
    mask_ = cap - 1;
    slots_.assign(cap, Run{kEmpty, 0});
    for (std::size_t i = 0; i < order_.size();) {
      std::size_t j = i + 1;
      while (j < order_.size() && std::ranges::equal(pool.key(order_[i]), pool.key(order_[j]))) ++j;
      std::size_t slot = hash_key(pool.key(order_[i])) & mask_;
      while (slots_[slot].start != kEmpty) slot = (slot + 1) & mask_;
      slots_[slot] = Run{i, j - i};
      i = j;
    }
  }

  /// Pool indices whose key equals `key`, ascending.
  std::span<const std::size_t> find(std::span<const std::uint16_t> key) const {
    std::size_t slot = hash_key(key) & mask_;
    while (slots_[slot].start != kEmpty) {
      const Run run = slots_[slot];
      if (std::ranges::equal(pool_.key(order_[run.start]), key)) {
        return std::span<const std::size_t>(order_).subspan(run.start, run.length);
      }
      slot = (slot + 1) & mask_;
    }
    return {};
  }

 private:
  static constexpr std::size_t kEmpty = static_cast<std::size_t>(-1);
  struct Run {
    std::size_t start;
    std::size_t length;
  };
  const CandidatePool& pool_;
  std::vector<std::size_t> order_;
  std::vector<Run> slots_;
  std::size_t mask_ = 0;
};

struct Hit {
  std::size_t sym, pair, other;
};

// One pass of the join with the symmetric block in a fixed role.
std::vector<DifferenceFamily> run_role(const SearchSpec& spec, const OrbitTable& t,
                                       BlockRole sym_role, std::atomic<std::size_t>& found,
                                       std::atomic<bool>& truncated, std::uint64_t& probes) {
  const auto& p = spec.params;
  const BlockRole other_role = sym_role == BlockRole::X1 ? BlockRole::X4 : BlockRole::X1;
  const std::uint32_t k_sym = sym_role == BlockRole::X1 ? p.k[0] : p.k[3];
  const std::uint32_t k_other = sym_role == BlockRole::X1 ? p.k[3] : p.k[0];

  const CandidatePool sym_pool = build_pool(t, sym_role, k_sym, true);
  if (sym_pool.size() == 0) return {};
  const CandidatePool pair_pool = build_pool(t, BlockRole::X2, p.k[1], false);
  const CandidatePool other_pool = build_pool(t, other_role, k_other, false);
  const KeyIndex index(other_pool);
  const std::size_t width = sym_pool.width;
  const auto lambda = static_cast<std::int64_t>(p.lambda);

  unsigned threads = std::max(1u, spec.threads);
  std::vector<std::vector<Hit>> hits(threads);
  std::vector<std::uint64_t> worker_probes(threads, 0);
  std::atomic<std::size_t> next{0};

  auto worker = [&](unsigned id) {
    std::vector<std::int64_t> base(width);
    std::vector<std::uint16_t> target(width);
    for (;;) {
      const std::size_t s = next.fetch_add(1);
      if (s >= sym_pool.size() || truncated.load(std::memory_order_relaxed)) return;
      const auto ks = sym_pool.key(s);
      for (std::size_t c = 0; c < width; ++c) base[c] = lambda - ks[c];
      for (std::size_t x2 = 0; x2 < pair_pool.size(); ++x2) {
        const auto k2 = pair_pool.key(x2);
        bool feasible = true;
        for (std::size_t c = 0; c < width; ++c) {
          const std::int64_t need = base[c] - 2 * std::int64_t{k2[c]};
          if (need < 0) {
            feasible = false;
            break;
          }
          target[c] = static_cast<std::uint16_t>(need);
        }
        if (!feasible) continue;
        ++worker_probes[id];
        for (auto o : index.find(target)) {
          hits[id].push_back({s, x2, o});
          if (spec.limit != 0 && found.fetch_add(1) + 1 >= spec.limit) {
            truncated.store(true);
            return;
          }
        }
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  }

  std::vector<DifferenceFamily> out;
  for (unsigned id = 0; id < threads; ++id) {
    probes += worker_probes[id];
    for (const Hit& h : hits[id]) {
      const BlockReps& sym = sym_pool.entries[h.sym];
      const BlockReps& other = other_pool.entries[h.other];
      const BlockReps& x2 = pair_pool.entries[h.pair];
      std::array<BlockReps, 3> reps = sym_role == BlockRole::X1
                                          ? std::array<BlockReps, 3>{sym, x2, other}
                                          : std::array<BlockReps, 3>{other, x2, sym};
      out.push_back(DifferenceFamily::from_reps(p, t, reps));
    }
  }
  return out;
}

}  // namespace

void for_each_invariant_subset(const OrbitTable& t, std::uint32_t k, bool symmetric_only,
                               const std::function<void(std::span<const std::size_t>)>& fn) {
  const auto classes = orbit_classes(t, symmetric_only);
  // suffix[i] = total size of classes i.. ; prunes branches that cannot reach k.
  std::vector<std::size_t> suffix(classes.size() + 1, 0);
  for (std::size_t i = classes.size(); i-- > 0;) suffix[i] = suffix[i + 1] + classes[i].size;

  std::vector<std::size_t> chosen;
  std::vector<std::size_t> orbits;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t remaining) {
    if (remaining == 0) {
      orbits.clear();
      for (auto c : chosen) orbits.insert(orbits.end(), classes[c].orbits.begin(), classes[c].orbits.end());
      std::sort(orbits.begin(), orbits.end());
      fn(orbits);
      return;
    }
    if (i == classes.size() || suffix[i] < remaining) return;
    if (classes[i].size <= remaining) {
      chosen.push_back(i);
      rec(i + 1, remaining - classes[i].size);
      chosen.pop_back();
    }
    rec(i + 1, remaining);
  };
  if (k <= t.modulus().value()) rec(0, k);
}

std::vector<BlockReps> enumerate_invariant_subsets(const OrbitTable& t, std::uint32_t k,
                                                   bool symmetric_only) {
  std::vector<BlockReps> out;
  for_each_invariant_subset(t, k, symmetric_only, [&](std::span<const std::size_t> orbits) {
    BlockReps reps{t.modulus(), {}};
    for (auto o : orbits) reps.reps.push_back(t.representative(o));
    out.push_back(std::move(reps));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Residue> shift_representatives(const OrbitTable& t) {
  std::vector<Residue> reps;
  for (std::size_t i = 0; i < t.orbit_count(); ++i) {
    if (t.representative(i) != 0) reps.push_back(t.representative(i));
  }
  return reps;
}

std::vector<std::uint16_t> compressed_counts(const ResidueSet& x, const OrbitTable& t) {
  const Modulus v = t.modulus();
  const auto mask = x.indicator();
  std::vector<std::uint16_t> out;
  for (auto s : shift_representatives(t)) {
    std::uint16_t n = 0;
    for (auto a : x) n += mask[v.sub(a, s)];
    out.push_back(n);
  }
  return out;
}

std::vector<std::int64_t> expand_counts(std::span<const std::uint16_t> compressed,
                                        std::uint32_t size, const OrbitTable& t) {
  const auto reps = shift_representatives(t);
  if (compressed.size() != reps.size()) {
    throw Error(Errc::DimensionMismatch, "compressed vector length differs from shift orbit count");
  }
  std::vector<std::int64_t> full(t.modulus().value(), 0);
  full[0] = size;
  for (std::size_t c = 0; c < reps.size(); ++c) {
    for (auto s : t.orbit(t.orbit_index_of(reps[c]))) full[s] = compressed[c];
  }
  return full;
}

CandidatePool build_pool(const OrbitTable& t, BlockRole role, std::uint32_t k, bool symmetric_only) {
  const Modulus v = t.modulus();
  const auto shifts = shift_representatives(t);
  CandidatePool pool{role, k, shifts.size(), {}, {}};
  std::vector<std::uint8_t> mask(v.value(), 0);
  std::vector<Residue> members;
  for_each_invariant_subset(t, k, symmetric_only, [&](std::span<const std::size_t> orbits) {
    BlockReps reps{v, {}};
    members.clear();
    for (auto o : orbits) {
      reps.reps.push_back(t.representative(o));
      for (auto r : t.orbit(o)) {
        members.push_back(r);
        mask[r] = 1;
      }
    }
    for (auto s : shifts) {
      std::uint16_t n = 0;
      for (auto a : members) n += mask[v.sub(a, s)];
      pool.keys.push_back(n);
    }
    for (auto r : members) mask[r] = 0;
    pool.entries.push_back(std::move(reps));
  });
  return pool;
}

bool family_encoding_less(const DifferenceFamily& a, const DifferenceFamily& b) {
  if (a.reps() && b.reps() && *a.reps() != *b.reps()) return *a.reps() < *b.reps();
  return a.blocks() < b.blocks();
}

SearchResult search(const SearchSpec& spec) {
  const auto& p = spec.params;
  const auto verdict = validate_params(p);
  if (!verdict.valid()) {
    throw Error(Errc::InfeasibleParams, p.to_string() + " violates " +
                                            equation_name(verdict.violated.front()));
  }
  if (!verdict.k2_equals_k3) {
    throw Error(Errc::InfeasibleParams, p.to_string() + " does not have k2 = k3");
  }
  const SubgroupH h = generate_subgroup(p.v, spec.generators);
  const OrbitTable t(h);
  if (!h_feasible(p, t)) {
    throw Error(Errc::InfeasibleParams, p.to_string() + " is not H-feasible for H = " + h.to_string());
  }

  SearchResult result;
  if (h.is_trivial()) {
    result.warnings.push_back("subgroup H is trivial; the orbit method degenerates to a full search");
  }
  std::atomic<std::size_t> found{0};
  std::atomic<bool> truncated{false};
  std::vector<DifferenceFamily> all;
  if (spec.symmetric_role != SymmetricRole::Last) {
    auto part = run_role(spec, t, BlockRole::X1, found, truncated, result.probes);
    all.insert(all.end(), part.begin(), part.end());
  }
  if (spec.symmetric_role != SymmetricRole::First && !truncated.load()) {
    auto part = run_role(spec, t, BlockRole::X4, found, truncated, result.probes);
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end(), family_encoding_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());

  if (spec.dedupe) {
    std::vector<DifferenceFamily> kept;
    std::vector<CanonicalForm> seen;
    for (auto& f : all) {
      auto cf = canonical_form(f);
      if (std::find(seen.begin(), seen.end(), cf) != seen.end()) continue;
      seen.push_back(std::move(cf));
      kept.push_back(std::move(f));
    }
    all = std::move(kept);
  }
  if (spec.limit != 0 && all.size() > spec.limit) all.erase(all.begin() + static_cast<std::ptrdiff_t>(spec.limit), all.end());
  result.exhaustive = !truncated.load();
  result.families = std::move(all);
  return result;
}

}  // namespace propus
