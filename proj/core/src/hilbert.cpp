#include "subrad/hilbert.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace subrad {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > kBinomialMax) return kBinomialMax;
  }
  return static_cast<std::uint64_t>(result);
}

ExcitationConfig::ExcitationConfig(std::vector<int> sites)
    : sites_(std::move(sites)) {
  int prev = 0;
  for (int s : sites_) {
    if (s <= prev)
      throw std::invalid_argument(
          "ExcitationConfig: sites must be strictly increasing and >= 1");
    prev = s;
  }
}

ExcitationConfig::ExcitationConfig(std::initializer_list<int> sites)
    : ExcitationConfig(std::vector<int>(sites)) {}

int phase_index(const ExcitationConfig& cfg) {
  int f = 0;
  for (int s : cfg.sites()) f += s;
  return f;
}

std::pair<int, int> sort_pair(const ExcitationConfig& a,
                              const ExcitationConfig& b) {
  if (a.excitations() != b.excitations())
    throw std::invalid_argument("sort_pair: configurations from different spaces");
  if (a == b)
    throw std::invalid_argument("sort_pair: identical configurations");

  // One synchronized sweep over both sorted site lists.
  const auto& sa = a.sites();
  const auto& sb = b.sites();
  int only_a = 0, only_b = 0;
  int mism_a = 0, mism_b = 0;
  std::size_t i = 0, j = 0;
  while (i < sa.size() && j < sb.size()) {
    if (sa[i] == sb[j]) {
      ++i, ++j;
    } else if (sa[i] < sb[j]) {
      if (++mism_a > 1) return {0, 0};
      only_a = sa[i++];
    } else {
      if (++mism_b > 1) return {0, 0};
      only_b = sb[j++];
    }
  }
  mism_a += static_cast<int>(sa.size() - i);
  mism_b += static_cast<int>(sb.size() - j);
  if (mism_a != 1 || mism_b != 1) return {0, 0};
  if (i < sa.size()) only_a = sa[i];
  if (j < sb.size()) only_b = sb[j];
  return {only_a, only_b};
}

HilbertSpace::HilbertSpace(int atoms, int excitations, std::uint64_t dim_cap)
    : atoms_(atoms), excitations_(excitations) {
  if (excitations < 1 || excitations > atoms)
    throw std::invalid_argument("HilbertSpace: need 1 <= M <= N, got M=" +
                                std::to_string(excitations) + ", N=" +
                                std::to_string(atoms));
  const std::uint64_t d = binomial(atoms, excitations);
  if (d > dim_cap)
    throw std::invalid_argument("HilbertSpace: dimension C(" +
                                std::to_string(atoms) + "," +
                                std::to_string(excitations) + ") = " +
                                std::to_string(d) + " exceeds cap " +
                                std::to_string(dim_cap));
  dim_ = static_cast<std::size_t>(d);
}

bool HilbertSpace::contains(const ExcitationConfig& cfg) const {
  return cfg.excitations() == excitations_ && cfg.max_site() <= atoms_ &&
         (cfg.sites().empty() || cfg.sites().front() >= 1);
}

std::vector<ExcitationConfig> HilbertSpace::enumerate() const {
  std::vector<ExcitationConfig> out;
  out.reserve(dim_);
  std::vector<int> cur(static_cast<std::size_t>(excitations_));
  for (int j = 0; j < excitations_; ++j) cur[static_cast<std::size_t>(j)] = j + 1;
  const int m = excitations_;
  while (true) {
    out.emplace_back(cur);
    // Advance the rightmost index that can still move, then reset the tail.
    int j = m - 1;
    while (j >= 0 && cur[static_cast<std::size_t>(j)] == atoms_ - (m - 1 - j)) --j;
    if (j < 0) break;
    ++cur[static_cast<std::size_t>(j)];
    for (int i = j + 1; i < m; ++i)
      cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

std::size_t HilbertSpace::rank(const ExcitationConfig& cfg) const {
  if (!contains(cfg))
    throw std::invalid_argument("rank: configuration not in this space");
  // Count configurations that precede cfg in lexicographic order.
  std::uint64_t preceding = 0;
  const auto& sites = cfg.sites();
  int prev = 0;
  for (int j = 0; j < excitations_; ++j) {
    for (int x = prev + 1; x < sites[static_cast<std::size_t>(j)]; ++x)
      preceding += binomial(atoms_ - x, excitations_ - 1 - j);
    prev = sites[static_cast<std::size_t>(j)];
  }
  return static_cast<std::size_t>(preceding) + 1;
}

ExcitationConfig HilbertSpace::unrank(std::size_t index) const {
  if (index < 1 || index > dim_)
    throw std::invalid_argument("unrank: index " + std::to_string(index) +
                                " outside [1, " + std::to_string(dim_) + "]");
  std::uint64_t remaining = index - 1;
  std::vector<int> sites(static_cast<std::size_t>(excitations_));
  int x = 1;
  for (int j = 0; j < excitations_; ++j) {
    while (true) {
      const std::uint64_t block = binomial(atoms_ - x, excitations_ - 1 - j);
      if (remaining < block) break;
      remaining -= block;
      ++x;
    }
    sites[static_cast<std::size_t>(j)] = x++;
  }
  return ExcitationConfig(std::move(sites));
}

}  // namespace subrad
