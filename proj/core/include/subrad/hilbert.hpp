#ifndef SUBRAD_HILBERT_HPP
#define SUBRAD_HILBERT_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace subrad {

/// binomial(n, k), saturating at kBinomialMax instead of overflowing.
inline constexpr std::uint64_t kBinomialMax = UINT64_C(1) << 62;
std::uint64_t binomial(int n, int k);

/// A bare multi-excitation configuration: the strictly increasing list of
/// excited-site labels (1-based).
class ExcitationConfig {
 public:
  ExcitationConfig() = default;
  explicit ExcitationConfig(std::vector<int> sites);
  ExcitationConfig(std::initializer_list<int> sites);

  int excitations() const { return static_cast<int>(sites_.size()); }
  const std::vector<int>& sites() const { return sites_; }
  int max_site() const { return sites_.empty() ? 0 : sites_.back(); }

  bool operator==(const ExcitationConfig&) const = default;

 private:
  std::vector<int> sites_;
};

/// Sum of the excited-site labels; fixes the linear imprint phase of a
/// configuration.
int phase_index(const ExcitationConfig& cfg);

/// Compares two configurations of the same excitation number. If they differ
/// in exactly one excited site, returns (s1, s2) with s1 excited only in the
/// first and s2 only in the second; otherwise returns the (0, 0) sentinel.
/// Identical configurations are a domain error.
std::pair<int, int> sort_pair(const ExcitationConfig& a,
                              const ExcitationConfig& b);

inline constexpr std::uint64_t kDefaultDimCap = 20000;

/// The M-excitation sector of N two-level atoms. Provides the canonical
/// (lexicographic) enumeration of configurations and O(M) rank/unrank
/// between configurations and their 1-based position in that order.
class HilbertSpace {
 public:
  HilbertSpace(int atoms, int excitations,
               std::uint64_t dim_cap = kDefaultDimCap);

  int atoms() const { return atoms_; }
  int excitations() const { return excitations_; }
  std::size_t dim() const { return dim_; }

  bool contains(const ExcitationConfig& cfg) const;

  /// All configurations in canonical order; the position in this list is the
  /// bare-state label n used by the coupling matrix.
  std::vector<ExcitationConfig> enumerate() const;

  /// 1-based position of cfg in enumerate(), via the combinatorial number
  /// system (no list materialization).
  std::size_t rank(const ExcitationConfig& cfg) const;

  /// Inverse of rank(); index is 1-based.
  ExcitationConfig unrank(std::size_t index) const;

  bool operator==(const HilbertSpace&) const = default;

 private:
  int atoms_ = 0;
  int excitations_ = 0;
  std::size_t dim_ = 0;
};

}  // namespace subrad

#endif
