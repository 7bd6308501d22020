#pragma once

// Plain-text and CSV renderings for eyeballing results on a terminal.

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "qhgr/dubrovin.hpp"
#include "qhgr/gw_potential.hpp"
#include "qhgr/spectral.hpp"

namespace qhgr {

namespace detail {

inline std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string format_complex(Complex z, int precision = 12) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.*f%+.*fi", precision, z.real(), precision, z.imag());
  return buf;
}

}  // namespace detail

/// GW numbers degree by degree, four per line in descending lexicographic order.
/// Only one representative of each {N(n2,n3,..), N(n3,n2,..)} pair is listed
/// (the one with n2 >= n3); the mirrored values are equal.
inline std::string format_gw_table(const GWTable& table) {
  std::ostringstream out;
  for (std::uint32_t d = 1; d <= table.max_degree; ++d) {
    std::vector<std::string> cells;
    std::size_t mirrored = 0;
    auto keys = gw_keys(d);
    std::sort(keys.begin(), keys.end(), [](const GWKey& a, const GWKey& b) { return a.n_hat > b.n_hat; });
    for (const auto& k : keys) {
      if (k.n_hat[0] < k.n_hat[1]) {
        ++mirrored;
        continue;
      }
      cells.push_back(k.label() + "=" + to_string(table.at(k)));
    }
    std::size_t width = 0;
    for (const auto& c : cells) width = std::max(width, c.size());
    out << "degree " << d << " (n2+n3+2n4+3n5 = " << 4 * d + 1 << ")\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      bool last_in_row = i % 4 == 3 || i + 1 == cells.size();
      out << (last_in_row ? cells[i] : detail::pad(cells[i], width + 2));
      if (last_in_row) out << "\n";
    }
    if (mirrored > 0)
      out << "(" << mirrored << " further values with n2 < n3 follow from N(n2,n3,n4,n5) = N(n3,n2,n4,n5))\n";
    if (d < table.max_degree) out << "\n";
  }
  return out.str();
}

inline std::string format_matrix(const DenseMatrix<QSeries>& m) {
  std::vector<std::string> cells;
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells.push_back(m(r, c).to_string());
      width[c] = std::max(width[c], cells.back().size());
    }
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string& s = cells[r * m.cols() + c];
      out << (c + 1 == m.cols() ? s : detail::pad(s, width[c] + 2));
    }
    out << "\n";
  }
  return out.str();
}

inline std::string format_matrix(const DubrovinMatrix& m) {
  std::ostringstream out;
  out << "basis: ";
  for (auto d : all_diagrams()) out << "(" << d.label() << ") ";
  out << "\ntruncation: q^d with d < " << m.alpha << "; column j = K * sigma_j\n";
  out << format_matrix(m.entries);
  return out.str();
}

inline std::string format_char_poly(const CharPoly& p) {
  std::ostringstream out;
  for (std::size_t k = p.coeffs.size(); k-- > 0;) out << "  lambda^" << k << ": " << p.coeffs[k].to_string() << "\n";
  return out.str();
}

inline std::string format_verdict(const std::string& cycle, std::uint32_t alpha, const SimplicityVerdict& v) {
  std::ostringstream out;
  out << "cycle:        " << cycle << "\n";
  out << "alpha:        " << alpha << "\n";
  out << "discriminant: " << v.witness.value.to_string() << "\n";
  if (v.witness.valuation) {
    out << "valuation:    " << *v.witness.valuation << "\n";
    out << "leading:      (" << to_string(v.witness.value.coefficient(*v.witness.valuation)) << ")q^"
        << *v.witness.valuation << "\n";
    out << "exceptional:  " << to_string(v.exceptional_locus) << " = 0\n";
  } else {
    out << "valuation:    inf\n";
  }
  out << "verdict:      " << to_string(v.kind) << "\n";
  return out.str();
}

inline std::string format_spectrum(const SpectrumSample& s) {
  std::ostringstream out;
  out << "cycle " << (s.cycle ? s.cycle->label() : std::string("none")) << "  t = " << detail::format_complex(s.t, 6)
      << "  q = " << detail::format_complex(s.q, 6) << "  alpha = " << s.alpha << "\n";
  for (auto z : s.eigenvalues) out << "  " << detail::format_complex(z) << "\n";
  out << "residual " << detail::format_double(s.residual) << "\n";
  return out.str();
}

/// One row per (frame, eigenvalue index).
inline std::string format_spectra_csv(const std::vector<SpectrumSample>& samples) {
  std::ostringstream out;
  out << "frame,cycle,t_re,t_im,q_re,q_im,alpha,index,re,im,residual\n";
  for (std::size_t f = 0; f < samples.size(); ++f) {
    const auto& s = samples[f];
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
      out << f << "," << (s.cycle ? "\"" + s.cycle->label() + "\"" : std::string()) << ","
          << detail::format_double(s.t.real()) << "," << detail::format_double(s.t.imag()) << ","
          << detail::format_double(s.q.real()) << "," << detail::format_double(s.q.imag()) << "," << s.alpha << ","
          << i << "," << detail::format_double(s.eigenvalues[i].real()) << ","
          << detail::format_double(s.eigenvalues[i].imag()) << "," << detail::format_double(s.residual) << "\n";
    }
  }
  return out.str();
}

}  // namespace qhgr
