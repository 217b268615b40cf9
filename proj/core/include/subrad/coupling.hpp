#ifndef SUBRAD_COUPLING_HPP
#define SUBRAD_COUPLING_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <iosfwd>

#include "subrad/geometry.hpp"
#include "subrad/hilbert.hpp"

namespace subrad {

using Complex = std::complex<double>;

/// The dense non-Hermitian generator A of the amplitude equations
/// dc/dt = A c over the M-excitation sector, in units of Gamma.
/// Diagonal entries are -M/2; the entry (n, m) couples bare states that
/// differ in exactly one excited site and vanishes otherwise.
class CouplingMatrix {
 public:
  static CouplingMatrix assemble(const HilbertSpace& space,
                                 const Lattice& lattice);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return entries_; }
  const HilbertSpace& space() const { return space_; }
  const Lattice& lattice() const { return lattice_; }
  bool is_gauge_stripped() const { return gauge_stripped_; }

  /// Similarity transform removing the traveling-phase factors from the
  /// off-diagonals, leaving the complex-symmetric matrix with entries
  /// -F/2 + iG. Same spectrum as *this.
  CouplingMatrix gauge_stripped() const;

  /// Number of structurally allowed off-diagonal couplings per row,
  /// M * (N - M): each excited site can hop to each ground site.
  std::size_t structural_nonzeros_per_row() const;

  std::size_t count_offdiagonal_nonzeros(std::size_t row) const;  // 1-based

  /// Nonzero entries as CSV rows (row, col, re, im), 1-based.
  void write_nonzeros_csv(std::ostream& os) const;

 private:
  CouplingMatrix(HilbertSpace space, Lattice lattice, Eigen::MatrixXcd entries,
                 bool stripped)
      : space_(space), lattice_(std::move(lattice)),
        entries_(std::move(entries)), gauge_stripped_(stripped) {}

  HilbertSpace space_;
  Lattice lattice_;
  Eigen::MatrixXcd entries_;
  bool gauge_stripped_ = false;
};

}  // namespace subrad

#endif
