#ifndef FLATZERO_FINITE_DIFF_HPP
#define FLATZERO_FINITE_DIFF_HPP

#include <array>
#include <complex>

namespace flatzero {

// Central differences with Richardson extrapolation.  All schemes here have
// O(h^2) leading error, so each extrapolation level multiplies the step
// ratio's square (factor 4) into the tableau.

namespace fd_detail {

template <typename Row>
inline Row richardson_combine(const Row& fine, const Row& coarse, double factor) {
  Row out{};
  for (std::size_t i = 0; i < fine.size(); ++i) out[i] = (factor * fine[i] - coarse[i]) / (factor - 1.0);
  return out;
}

template <typename Eval, typename Row>
inline Row richardson(Eval eval, double h, int levels) {
  constexpr int kMax = 4;
  if (levels > kMax) levels = kMax;
  if (levels < 0) levels = 0;
  Row tab[kMax + 1];
  for (int i = 0; i <= levels; ++i) tab[i] = eval(h / double(1 << i));
  double factor = 4.0;
  for (int step = 0; step < levels; ++step) {
    for (int i = 0; i + step < levels; ++i) tab[i] = richardson_combine<Row>(tab[i + 1], tab[i], factor);
    factor *= 4.0;
  }
  return tab[0];
}

}  // namespace fd_detail

// d/dx of a scalar function.
template <typename F>
double fd_derivative(F f, double x, double h, int levels = 1) {
  using Row = std::array<double, 1>;
  auto eval = [&](double hh) -> Row { return {(f(x + hh) - f(x - hh)) / (2.0 * hh)}; };
  return fd_detail::richardson<decltype(eval), Row>(eval, h, levels)[0];
}

// d^2/dx^2 of a scalar function.
template <typename F>
double fd_second_derivative(F f, double x, double h, int levels = 1) {
  using Row = std::array<double, 1>;
  double f0 = f(x);
  auto eval = [&](double hh) -> Row { return {(f(x + hh) - 2.0 * f0 + f(x - hh)) / (hh * hh)}; };
  return fd_detail::richardson<decltype(eval), Row>(eval, h, levels)[0];
}

struct WirtingerFirst {
  std::complex<double> d_z, d_zbar;
};

struct WirtingerSecond {
  std::complex<double> d_zz, d_zzbar, d_zbarzbar;
};

// First Wirtinger derivatives of f(x, y) -> complex by central differences:
// d_z = (f_x - i f_y)/2, d_zbar = (f_x + i f_y)/2.
template <typename F>
WirtingerFirst fd_wirtinger_first(F f, double x, double y, double h, int levels = 2) {
  using C = std::complex<double>;
  using Row = std::array<C, 2>;
  auto eval = [&](double hh) -> Row {
    C fx = (f(x + hh, y) - f(x - hh, y)) / (2.0 * hh);
    C fy = (f(x, y + hh) - f(x, y - hh)) / (2.0 * hh);
    return {fx, fy};
  };
  Row r = fd_detail::richardson<decltype(eval), Row>(eval, h, levels);
  const C i(0.0, 1.0);
  return {0.5 * (r[0] - i * r[1]), 0.5 * (r[0] + i * r[1])};
}

// Second Wirtinger derivatives from the Cartesian second differences:
// d_zz = (f_xx - f_yy - 2i f_xy)/4, d_zzbar = (f_xx + f_yy)/4,
// d_zbarzbar = (f_xx - f_yy + 2i f_xy)/4.
template <typename F>
WirtingerSecond fd_wirtinger_second(F f, double x, double y, double h, int levels = 2) {
  using C = std::complex<double>;
  using Row = std::array<C, 3>;
  C f0 = f(x, y);
  auto eval = [&](double hh) -> Row {
    C fxx = (f(x + hh, y) - 2.0 * f0 + f(x - hh, y)) / (hh * hh);
    C fyy = (f(x, y + hh) - 2.0 * f0 + f(x, y - hh)) / (hh * hh);
    C fxy = (f(x + hh, y + hh) - f(x + hh, y - hh) - f(x - hh, y + hh) + f(x - hh, y - hh)) / (4.0 * hh * hh);
    return {fxx, fyy, fxy};
  };
  Row r = fd_detail::richardson<decltype(eval), Row>(eval, h, levels);
  const C i(0.0, 1.0);
  return {0.25 * (r[0] - r[1] - 2.0 * i * r[2]), 0.25 * (r[0] + r[1]), 0.25 * (r[0] - r[1] + 2.0 * i * r[2])};
}

}  // namespace flatzero

#endif
