#include "propus/residues.hpp"

#include <algorithm>
#include <numeric>

#include "propus/error.hpp"

namespace propus {

namespace {

std::string join(std::span<const Residue> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

Modulus::Modulus(std::int64_t v) {
  if (v < 2 || v > kMax) {
    throw Error(Errc::InvalidModulus, "modulus " + std::to_string(v) + " outside [2, 1000000]");
  }
  v_ = static_cast<std::uint32_t>(v);
}

bool Modulus::is_unit(Residue a) const noexcept { return std::gcd(a % v_, v_) == 1; }

ResidueSet::ResidueSet(Modulus v, std::span<const std::int64_t> values) : v_(v) {
  elems_.reserve(values.size());
  for (auto a : values) elems_.push_back(v.reduce(a));
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

ResidueSet::ResidueSet(Modulus v, std::initializer_list<std::int64_t> values)
    : ResidueSet(v, std::span<const std::int64_t>(values.begin(), values.size())) {}

ResidueSet ResidueSet::from_sorted(Modulus v, std::vector<Residue> sorted) {
  ResidueSet s(v);
  s.elems_ = std::move(sorted);
  return s;
}

bool ResidueSet::contains(Residue r) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), r);
}

std::vector<std::uint8_t> ResidueSet::indicator() const {
  std::vector<std::uint8_t> mask(v_.value(), 0);
  for (auto r : elems_) mask[r] = 1;
  return mask;
}

std::string ResidueSet::to_string() const { return "{" + join(elems_) + "}"; }

ResidueSet negate_set(const ResidueSet& x) { return scale_set(x, x.modulus().value() - 1); }

ResidueSet scale_set(const ResidueSet& x, Residue m) {
  const Modulus v = x.modulus();
  std::vector<Residue> out;
  out.reserve(x.size());
  for (auto a : x) out.push_back(v.mul(a, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return ResidueSet::from_sorted(v, std::move(out));
}

ResidueSet translate_set(const ResidueSet& x, Residue g) {
  const Modulus v = x.modulus();
  std::vector<Residue> out;
  out.reserve(x.size());
  for (auto a : x) out.push_back(v.add(a, g % v.value()));
  std::sort(out.begin(), out.end());
  return ResidueSet::from_sorted(v, std::move(out));
}

ResidueSet complement_set(const ResidueSet& x) {
  const Modulus v = x.modulus();
  std::vector<Residue> out;
  out.reserve(v.value() - x.size());
  auto it = x.begin();
  for (Residue r = 0; r < v.value(); ++r) {
    if (it != x.end() && *it == r) {
      ++it;
    } else {
      out.push_back(r);
    }
  }
  return ResidueSet::from_sorted(v, std::move(out));
}

std::vector<Residue> unit_group(Modulus v) {
  std::vector<Residue> units;
  for (Residue u = 1; u < v.value(); ++u) {
    if (std::gcd(u, v.value()) == 1) units.push_back(u);
  }
  return units;
}

SubgroupH generate_subgroup(Modulus v, std::span<const Residue> generators) {
  for (auto g : generators) {
    if (!v.is_unit(g)) {
      throw Error(Errc::NonUnitGenerator,
                  std::to_string(g) + " is not coprime to " + std::to_string(v.value()));
    }
  }
  // Closure by breadth-first multiplication by generators; finite group so
  // closure under multiplication suffices.
  std::vector<std::uint8_t> seen(v.value(), 0);
  std::vector<Residue> elems{1};
  seen[1 % v.value()] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto g : generators) {
      const Residue p = v.mul(elems[i], g % v.value());
      if (!seen[p]) {
        seen[p] = 1;
        elems.push_back(p);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return SubgroupH(v, std::move(elems));
}

SubgroupH SubgroupH::from_elements(Modulus v, std::span<const Residue> elements) {
  for (auto e : elements) {
    if (e >= v.value() || !v.is_unit(e)) {
      throw Error(Errc::NonUnit, std::to_string(e) + " is not a unit mod " + std::to_string(v.value()));
    }
  }
  std::vector<Residue> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty() || sorted.front() != 1) {
    throw Error(Errc::SubgroupNotClosed, "subgroup must contain 1");
  }
  for (auto a : sorted) {
    for (auto b : sorted) {
      const Residue p = v.mul(a, b);
      if (!std::binary_search(sorted.begin(), sorted.end(), p)) {
        throw Error(Errc::SubgroupNotClosed, std::to_string(a) + "*" + std::to_string(b) + "=" +
                                                 std::to_string(p) + " mod " +
                                                 std::to_string(v.value()) + " not in {" +
                                                 join(sorted) + "}");
      }
    }
  }
  return SubgroupH(v, std::move(sorted));
}

bool SubgroupH::contains(Residue r) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), r);
}

std::string SubgroupH::to_string() const { return "{" + join(elems_) + "}"; }

OrbitTable::OrbitTable(const SubgroupH& h) : h_(h) {
  const Modulus v = h.modulus();
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  index_of_.assign(v.value(), kUnset);
  // Scanning residues in ascending order makes each orbit's first-seen
  // element its minimum and keeps orbits ordered by representative.
  for (Residue x = 0; x < v.value(); ++x) {
    if (index_of_[x] != kUnset) continue;
    std::vector<Residue> orbit;
    for (auto e : h.elements()) orbit.push_back(v.mul(e, x));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (auto y : orbit) index_of_[y] = orbits_.size();
    orbits_.push_back(std::move(orbit));
  }
  neg_partner_.resize(orbits_.size());
  for (std::size_t i = 0; i < orbits_.size(); ++i) {
    neg_partner_[i] = index_of_[v.neg(orbits_[i].front())];
  }
}

std::vector<std::size_t> OrbitTable::orbit_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(orbits_.size());
  for (const auto& o : orbits_) sizes.push_back(o.size());
  return sizes;
}

}  // namespace propus
