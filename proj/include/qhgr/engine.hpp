#pragma once

// Precomputed, immutable state behind the CLI and the HTTP service.
//
// Everything exact (GW numbers, potential, structure constants, the truncated
// matrices of every single-cycle family and their discriminants) is computed
// once in the constructor; per-request work is numeric specialization only.
// All accessors are const and safe to call from many threads.

#include <array>
#include <cstdint>
#include <future>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qhgr/dubrovin.hpp"
#include "qhgr/gw_potential.hpp"
#include "qhgr/params.hpp"
#include "qhgr/spectral.hpp"

namespace qhgr {

inline constexpr std::array<YoungDiagram22, 4> kBulkCycles{
    YoungDiagram22(2, 0), YoungDiagram22(1, 1), YoungDiagram22(2, 1), YoungDiagram22(2, 2)};

class Engine {
 public:
  explicit Engine(std::uint32_t max_degree = 2)
      : table_(solve_wdvv(max_degree)),
        potential_(build_potential(table_)),
        sc_(potential_, max_degree + 1) {
    const std::uint32_t top = max_alpha();
    families_.resize(top + 1);
    full_.resize(top + 1);
    char_polys_.resize(top + 1);
    verdicts_.resize(top + 1);
    for (std::uint32_t a = 0; a <= top; ++a) {
      full_[a] = dubrovin_matrix(hat_coordinates(), sc_, a);
      families_[a][0] = dubrovin_matrix(Coordinates{}, sc_, a);
      for (std::size_t k = 0; k < kBulkCycles.size(); ++k)
        families_[a][k + 1] = dubrovin_matrix(single_parameter_coordinates(kBulkCycles[k].index()), sc_, a);
    }
    std::vector<std::future<void>> jobs;
    for (std::uint32_t a = 0; a <= top; ++a)
      for (std::size_t k = 0; k < kBulkCycles.size(); ++k)
        jobs.push_back(std::async(std::launch::async, [this, a, k] {
          char_polys_[a][k] = qhgr::char_poly(families_[a][k + 1]);
          verdicts_[a][k] = classify(families_[a][k + 1], a);
        }));
    for (auto& j : jobs) j.get();
  }

  std::uint32_t max_degree() const { return table_.max_degree; }
  /// Largest truncation order the stored GW numbers determine.
  std::uint32_t max_alpha() const { return table_.max_degree + 1; }

  const GWTable& table() const { return table_; }
  const Potential& potential() const { return potential_; }
  const StructureConstants& structure_constants() const { return sc_; }

  /// Matrix symbolic in t_cycle only; nullopt gives the t = 0 operator.
  const DubrovinMatrix& family(std::optional<YoungDiagram22> cycle, std::uint32_t alpha) const {
    check_alpha(alpha);
    return families_[alpha][cycle ? slot(*cycle) + 1 : 0];
  }

  /// Matrix symbolic in t2..t5 (t0 = t1 = 0).
  const DubrovinMatrix& full_matrix(std::uint32_t alpha) const {
    check_alpha(alpha);
    return full_[alpha];
  }

  const CharPoly& char_poly(YoungDiagram22 cycle, std::uint32_t alpha) const {
    check_alpha(alpha);
    return char_polys_[alpha][slot(cycle)];
  }

  const SimplicityVerdict& verdict(YoungDiagram22 cycle, std::uint32_t alpha) const {
    check_alpha(alpha);
    return verdicts_[alpha][slot(cycle)];
  }

  /// Spectrum of K with only t_cycle = t nonzero; without a cycle, t must be 0.
  SpectrumSample spectrum(std::optional<YoungDiagram22> cycle, Complex t, Complex q, std::uint32_t alpha) const {
    if (!cycle && t != Complex(0.0)) throw InvalidValue("t", "a nonzero t needs a cycle");
    SpectrumSample s = numeric_spectrum(family(cycle, alpha), single_parameter_point(cycle, t), q);
    s.cycle = cycle;
    s.t = t;
    return s;
  }

  /// Reference sample at t = 0 followed by one sample per path point.
  std::vector<SpectrumSample> sweep(YoungDiagram22 cycle, std::span<const Complex> path, Complex q,
                                    std::uint32_t alpha) const {
    if (path.empty()) throw InvalidValue("path", "the sweep path is empty");
    return spectrum_sweep(cycle, family(cycle, alpha), path, q);
  }

  void check_alpha(std::uint32_t alpha) const {
    if (alpha > max_alpha()) {
      throw TruncationExceedsPotential("alpha = " + std::to_string(alpha) + " needs GW numbers of degree " +
                                       std::to_string(alpha - 1) + "; precomputed up to degree " +
                                       std::to_string(max_degree()));
    }
  }

  static std::size_t slot(YoungDiagram22 cycle) {
    if (!is_bulk_cycle(cycle))
      throw InvalidValue("cycle", "cycle (" + cycle.label() + ") is not one of (2,0), (1,1), (2,1), (2,2)");
    return cycle.index() - 2;
  }

 private:
  GWTable table_;
  Potential potential_;
  StructureConstants sc_;
  std::vector<std::array<DubrovinMatrix, 5>> families_;
  std::vector<DubrovinMatrix> full_;
  std::vector<std::array<CharPoly, 4>> char_polys_;
  std::vector<std::array<SimplicityVerdict, 4>> verdicts_;
};

}  // namespace qhgr
