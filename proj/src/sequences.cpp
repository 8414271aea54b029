#include "propus/sequences.hpp"

#include <algorithm>
#include <numeric>

#include "propus/error.hpp"

namespace propus {

BinarySequence::BinarySequence(std::vector<std::int8_t> entries) : entries_(std::move(entries)) {
  for (auto e : entries_) {
    if (e != 1 && e != -1) throw Error(Errc::InvalidArgument, "sequence entries must be +1 or -1");
  }
}

std::int64_t BinarySequence::sum() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

BinarySequence to_sequence(const ResidueSet& x) {
  std::vector<std::int8_t> e(x.modulus().value(), 1);
  for (auto r : x) e[r] = -1;
  return BinarySequence(std::move(e));
}

std::vector<std::int64_t> PafProfile::levels() const {
  std::vector<std::int64_t> out = off_peak_levels;
  if (!values.empty()) out.push_back(values[0]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PafProfile paf(const BinarySequence& seq) {
  const std::size_t v = seq.size();
  PafProfile p;
  p.values.assign(v, 0);
  for (std::size_t s = 0; s < v; ++s) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < v; ++j) acc += seq[j] * seq[(j + s) % v];
    p.values[s] = acc;
  }
  p.off_peak_levels.assign(p.values.begin() + (v > 0 ? 1 : 0), p.values.end());
  std::sort(p.off_peak_levels.begin(), p.off_peak_levels.end());
  p.off_peak_levels.erase(std::unique(p.off_peak_levels.begin(), p.off_peak_levels.end()),
                          p.off_peak_levels.end());
  p.three_level = p.levels().size() == 3;
  if (v % 4 == 1) {
    p.optimal = std::all_of(p.off_peak_levels.begin(), p.off_peak_levels.end(),
                            [](std::int64_t c) { return c == 1 || c == -3; });
  }
  const std::int64_t sum = seq.sum();
  p.balanced = sum == 1 || sum == -1;
  return p;
}

std::int64_t set_autocorrelation(const ResidueSet& x, Residue s) {
  const Modulus v = x.modulus();
  s %= v.value();
  if (s == 0) throw Error(Errc::ZeroShift, "shift must be nonzero");
  const auto mask = x.indicator();
  std::int64_t n = 0;
  for (auto a : x) n += mask[v.sub(a, s)];
  return n;
}

std::vector<std::int64_t> set_autocorrelations(const ResidueSet& x) {
  const Modulus v = x.modulus();
  std::vector<std::int64_t> n(v.value(), 0);
  for (auto a : x) {
    for (auto b : x) ++n[v.sub(a, b)];
  }
  return n;
}

}  // namespace propus
