#include "propus/paramsets.hpp"

#include <algorithm>

#include "propus/error.hpp"

namespace propus {

std::string PropusParameterSet::to_string() const {
  return "(" + std::to_string(v.value()) + ";" + std::to_string(k[0]) + "," +
         std::to_string(k[1]) + "," + std::to_string(k[2]) + "," + std::to_string(k[3]) + ";" +
         std::to_string(lambda) + ")";
}

const char* equation_name(ParamEquation eq) noexcept {
  switch (eq) {
    case ParamEquation::DifferenceCount: return "sum k_i(k_i-1) = lambda(v-1)";
    case ParamEquation::SizeSum: return "sum k_i = lambda + v";
    case ParamEquation::SquareSum: return "sum (v-2k_i)^2 = 4v";
  }
  return "?";
}

ParamVerdict validate_params(const PropusParameterSet& p) {
  const std::int64_t v = p.v.value();
  for (auto ki : p.k) {
    if (ki > v) {
      throw Error(Errc::InvalidArgument, "block size " + std::to_string(ki) + " exceeds v");
    }
  }
  std::int64_t pairs = 0, sum = 0, squares = 0;
  for (std::int64_t ki : p.k) {
    pairs += ki * (ki - 1);
    sum += ki;
    squares += (v - 2 * ki) * (v - 2 * ki);
  }
  ParamVerdict verdict;
  if (pairs != p.lambda * (v - 1)) verdict.violated.push_back(ParamEquation::DifferenceCount);
  if (sum != p.lambda + v) verdict.violated.push_back(ParamEquation::SizeSum);
  if (squares != 4 * v) verdict.violated.push_back(ParamEquation::SquareSum);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) verdict.has_equal_sizes |= p.k[i] == p.k[j];
  }
  verdict.k2_equals_k3 = p.k[1] == p.k[2];
  return verdict;
}

std::vector<PropusParameterSet> enumerate_propus_params(Modulus v) {
  const std::int64_t n = v.value();
  if (n % 2 == 0) throw Error(Errc::EvenModulus, "v = " + std::to_string(n) + " is even");
  // With a_i = v - 2k_i (odd, >= 1 since k_i <= v/2): a1^2 + 2 a2^2 + a4^2 = 4v,
  // and k1 >= k4 becomes a1 <= a4.
  std::vector<PropusParameterSet> out;
  for (std::int64_t a1 = 1; a1 * a1 <= 4 * n; a1 += 2) {
    for (std::int64_t a2 = 1; a1 * a1 + 2 * a2 * a2 <= 4 * n; a2 += 2) {
      const std::int64_t rest = 4 * n - a1 * a1 - 2 * a2 * a2;
      for (std::int64_t a4 = a1; a4 * a4 <= rest; a4 += 2) {
        if (a4 * a4 != rest) continue;
        const auto k1 = static_cast<std::uint32_t>((n - a1) / 2);
        const auto k2 = static_cast<std::uint32_t>((n - a2) / 2);
        const auto k4 = static_cast<std::uint32_t>((n - a4) / 2);
        const std::int64_t lambda = std::int64_t{k1} + 2 * k2 + k4 - n;
        out.push_back(PropusParameterSet{v, {k1, k2, k2, k4}, lambda});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.k > b.k; });
  return out;
}

namespace {

std::vector<bool> subset_sums(const std::vector<std::size_t>& items, std::size_t limit) {
  std::vector<bool> reach(limit + 1, false);
  reach[0] = true;
  for (auto s : items) {
    for (std::size_t t = limit; t + 1 > s; --t) {
      if (reach[t - s]) reach[t] = true;
    }
  }
  return reach;
}

}  // namespace

std::vector<bool> invariant_sizes(const OrbitTable& t) {
  return subset_sums(t.orbit_sizes(), t.modulus().value());
}

std::vector<bool> symmetric_invariant_sizes(const OrbitTable& t) {
  // A symmetric union takes each orbit together with its negation partner.
  std::vector<std::size_t> classes;
  for (std::size_t i = 0; i < t.orbit_count(); ++i) {
    const std::size_t j = t.negation_partner(i);
    if (j < i) continue;
    classes.push_back(t.orbit(i).size() + (j == i ? 0 : t.orbit(j).size()));
  }
  return subset_sums(classes, t.modulus().value());
}

bool h_feasible(const PropusParameterSet& p, const OrbitTable& t) {
  if (p.v != t.modulus()) {
    throw Error(Errc::InvalidArgument, "parameter set and orbit table use different moduli");
  }
  const auto reach = invariant_sizes(t);
  return std::all_of(p.k.begin(), p.k.end(),
                     [&](std::uint32_t ki) { return ki < reach.size() && reach[ki]; });
}

bool propus_feasible(const PropusParameterSet& p, const OrbitTable& t) {
  if (!h_feasible(p, t)) return false;
  const auto sym = symmetric_invariant_sizes(t);
  return sym[p.k[0]] || sym[p.k[3]];
}

}  // namespace propus
