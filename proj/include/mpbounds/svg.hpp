#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "mpbounds/matrix.hpp"
#include "mpbounds/region.hpp"

namespace mpbounds {

namespace detail {

inline std::string svg_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace detail

/// Region picture: the Cauchy circle (stroked), the inclusion disks
/// (semi-transparent fill), and optional eigenvalue dots of 2-pixel radius.
/// The square viewport spans 1.1 times the Cauchy radius from the origin;
/// imaginary axis points up.
inline void write_region_svg(std::ostream& out, double cauchy_rho, const InclusionRegion& region,
                             const std::vector<Complex>* eigenvalues = nullptr) {
  double extent = 1.1 * cauchy_rho;
  if (!(extent > 0.0)) extent = 1.0;
  const int pixels = 600;
  const double px = 2.0 * extent / pixels;  // one pixel in plane units

  const auto num = detail::svg_num;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pixels << "\" height=\""
      << pixels << "\" viewBox=\"" << num(-extent) << " " << num(-extent) << " "
      << num(2.0 * extent) << " " << num(2.0 * extent) << "\">\n";
  out << "  <g stroke-width=\"" << num(1.5 * px) << "\">\n";
  out << "    <circle cx=\"0\" cy=\"0\" r=\"" << num(cauchy_rho)
      << "\" fill=\"none\" stroke=\"#404040\" stroke-dasharray=\"" << num(6.0 * px) << " "
      << num(4.0 * px) << "\"/>\n";
  for (const Disk& d : region.disks) {
    out << "    <circle cx=\"" << num(d.center.real()) << "\" cy=\"" << num(-d.center.imag())
        << "\" r=\"" << num(d.radius)
        << "\" fill=\"#4682b4\" fill-opacity=\"0.25\" stroke=\"#4682b4\"/>\n";
  }
  if (eigenvalues) {
    for (const Complex& z : *eigenvalues) {
      out << "    <circle cx=\"" << num(z.real()) << "\" cy=\"" << num(-z.imag()) << "\" r=\""
          << num(2.0 * px) << "\" fill=\"#c0392b\"/>\n";
    }
  }
  out << "  </g>\n</svg>\n";
}

}  // namespace mpbounds
