#include "isospec/diagnostics.hpp"

#include <cmath>

namespace isospec {

std::size_t step_count(double h, double t_final) {
  if (!(t_final > 0.0)) return 0;
  const double q = t_final / h;
  const double r = std::round(q);
  if (std::abs(q - r) <= 1e-9 * std::max(1.0, q)) {
    return static_cast<std::size_t>(r);
  }
  return static_cast<std::size_t>(std::ceil(q));
}

double max_value(const DriftSeries& d) {
  double m = 0.0;
  for (double v : d.values) m = std::max(m, v);
  return m;
}

std::pair<double, double> half_span_drifts(const DriftSeries& d) {
  if (d.times.empty()) return {0.0, 0.0};
  const double mid = 0.5 * d.times.back();
  double first = 0.0;
  double second = 0.0;
  for (std::size_t k = 0; k < d.values.size(); ++k) {
    if (d.times[k] <= mid) {
      first = std::max(first, d.values[k]);
    } else {
      second = std::max(second, d.values[k]);
    }
  }
  return {first, second};
}

double fit_loglog_slope(const std::vector<double>& h,
                        const std::vector<double>& err, double floor) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int m = 0;
  for (std::size_t i = 0; i < h.size() && i < err.size(); ++i) {
    if (!(err[i] >= floor) || !(h[i] > 0.0)) continue;
    const double x = std::log(h[i]);
    const double y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "fit_loglog_slope needs two points above the round-off floor");
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace isospec
