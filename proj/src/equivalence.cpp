#include "propus/equivalence.hpp"

#include <algorithm>
#include <numeric>

#include "propus/error.hpp"

namespace propus {

namespace {

// Compares rotation starting at i (elements shifted by -x[i]) with the one
// starting at j, lexicographically.
bool rotation_less(std::span<const Residue> x, std::uint32_t v, std::size_t i, std::size_t j) {
  const std::size_t k = x.size();
  const Residue gi = x[i], gj = x[j];
  for (std::size_t t = 0; t < k; ++t) {
    const Residue a = x[(i + t) % k];
    const Residue b = x[(j + t) % k];
    const Residue da = a >= gi ? a - gi : a + v - gi;
    const Residue db = b >= gj ? b - gj : b + v - gj;
    if (da != db) return da < db;
  }
  return false;
}

// Block candidate for one multiplier: least translate over both signs.
struct Candidate {
  ResidueSet set;
  BlockMove move;
};

Candidate best_image(const ResidueSet& x, Residue alpha, int source) {
  const Modulus v = x.modulus();
  Residue t_pos = 0, t_neg = 0;
  ResidueSet pos = least_translate(scale_set(x, alpha), &t_pos);
  ResidueSet neg = least_translate(scale_set(x, v.neg(alpha)), &t_neg);
  if (neg < pos) return {std::move(neg), {source, true, t_neg}};
  return {std::move(pos), {source, false, t_pos}};
}

}  // namespace

ResidueSet least_translate(const ResidueSet& x, Residue* shift) {
  const Modulus v = x.modulus();
  if (x.empty()) {
    if (shift) *shift = 0;
    return x;
  }
  const auto elems = x.elements();
  std::size_t best = 0;
  for (std::size_t i = 1; i < elems.size(); ++i) {
    if (rotation_less(elems, v.value(), i, best)) best = i;
  }
  const Residue g = v.neg(elems[best]);
  if (shift) *shift = g;
  std::vector<Residue> out;
  out.reserve(elems.size());
  for (std::size_t t = 0; t < elems.size(); ++t) {
    out.push_back(v.add(elems[(best + t) % elems.size()], g));
  }
  return ResidueSet::from_sorted(v, std::move(out));
}

CanonicalForm canonical_form(Modulus v, const std::array<ResidueSet, 4>& blocks) {
  std::optional<CanonicalForm> best;
  for (auto alpha : unit_group(v)) {
    // -alpha is handled through the negation choice, so each pair {alpha, -alpha}
    // needs to be visited once.
    if (alpha > v.neg(alpha) && v.value() > 2) continue;
    std::array<Candidate, 4> images = {
        best_image(blocks[0], alpha, 1), best_image(blocks[1], alpha, 2),
        best_image(blocks[2], alpha, 3), best_image(blocks[3], alpha, 4)};
    std::sort(images.begin(), images.end(), [](const Candidate& a, const Candidate& b) {
      if (a.set.size() != b.set.size()) return a.set.size() < b.set.size();
      if (a.set != b.set) return a.set < b.set;
      return a.move.source < b.move.source;
    });
    CanonicalForm cf{v,
                     {static_cast<std::uint32_t>(images[0].set.size()),
                      static_cast<std::uint32_t>(images[1].set.size()),
                      static_cast<std::uint32_t>(images[2].set.size()),
                      static_cast<std::uint32_t>(images[3].set.size())},
                     {images[0].set, images[1].set, images[2].set, images[3].set},
                     {alpha, {images[0].move, images[1].move, images[2].move, images[3].move}}};
    if (!best || cf.blocks < best->blocks) best = std::move(cf);
  }
  return std::move(*best);
}

CanonicalForm canonical_form(const DifferenceFamily& f) {
  return canonical_form(f.modulus(), f.blocks());
}

bool equivalent(const DifferenceFamily& f, const DifferenceFamily& g) {
  if (f.modulus() != g.modulus()) return false;
  auto kf = f.params().k, kg = g.params().k;
  std::sort(kf.begin(), kf.end());
  std::sort(kg.begin(), kg.end());
  if (kf != kg) return false;
  return canonical_form(f) == canonical_form(g);
}

DifferenceFamily apply_move(const DifferenceFamily& f, const ElementaryMove& move) {
  const Modulus v = f.modulus();
  auto blocks = f.blocks();
  auto params = f.params();
  auto idx = [](int i) {
    if (i < 1 || i > 4) throw Error(Errc::InvalidArgument, "block index out of range");
    return static_cast<std::size_t>(i - 1);
  };
  switch (move.kind) {
    case MoveKind::Translate:
      blocks[idx(move.block)] = translate_set(blocks[idx(move.block)], move.value);
      break;
    case MoveKind::Negate:
      blocks[idx(move.block)] = negate_set(blocks[idx(move.block)]);
      break;
    case MoveKind::Automorphism:
      if (!v.is_unit(move.value)) {
        throw Error(Errc::NonUnit, std::to_string(move.value) + " is not a unit");
      }
      for (auto& b : blocks) b = scale_set(b, move.value % v.value());
      break;
    case MoveKind::Swap: {
      const auto a = idx(move.block), b = idx(move.other);
      if (blocks[a].size() != blocks[b].size()) {
        throw Error(Errc::InvalidArgument, "only blocks of equal size may be exchanged");
      }
      std::swap(blocks[a], blocks[b]);
      std::swap(params.k[a], params.k[b]);
      break;
    }
  }
  return DifferenceFamily::from_blocks(params, std::move(blocks));
}

ElementaryMove random_move(const DifferenceFamily& f, std::mt19937_64& rng) {
  const Modulus v = f.modulus();
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> block(1, 4);
  switch (kind(rng)) {
    case 0:
      return {MoveKind::Translate, block(rng), 1,
              std::uniform_int_distribution<Residue>(0, v.value() - 1)(rng)};
    case 1:
      return {MoveKind::Negate, block(rng), 1, 0};
    case 2: {
      const auto units = unit_group(v);
      return {MoveKind::Automorphism, 1, 1,
              units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)]};
    }
    default: {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j) {
          if (f.block(i).size() == f.block(j).size()) pairs.emplace_back(i, j);
        }
      }
      if (pairs.empty()) return {MoveKind::Negate, block(rng), 1, 0};
      const auto [a, b] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
      return {MoveKind::Swap, a, b, 0};
    }
  }
}

DifferenceFamily complement_normalized(const DifferenceFamily& f) {
  const Modulus v = f.modulus();
  auto blocks = f.blocks();
  auto params = f.params();
  for (std::size_t i = 0; i < 4; ++i) {
    if (2 * blocks[i].size() > v.value()) {
      blocks[i] = complement_set(blocks[i]);
      params.k[i] = static_cast<std::uint32_t>(blocks[i].size());
    }
  }
  // lambda follows from sum k_i = lambda + v.
  params.lambda = std::int64_t{params.total_size()} - v.value();
  return DifferenceFamily::from_blocks(params, std::move(blocks));
}

}  // namespace propus
