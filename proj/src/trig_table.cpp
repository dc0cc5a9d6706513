#include "posbuild/trig_table.hpp"

#include <numbers>
#include <stdexcept>

namespace posbuild {

namespace {
constexpr double kPi = std::numbers::pi;
}

double trig_integral(TrigKind kind, int n, int m) {
  if (n < 0 || m < 0) throw std::domain_error("trig_integral: negative index");
  switch (kind) {
    case TrigKind::sin:
      if (n == 0) return 0.0;
      return (n % 2 == 1) ? 2.0 / (n * kPi) : 0.0;
    case TrigKind::cos:
      return (n == 0) ? 1.0 : 0.0;
    case TrigKind::t_cos:
      if (n == 0) return 0.5;
      return (n % 2 == 1) ? -2.0 / (n * n * kPi * kPi) : 0.0;
    case TrigKind::cos_cos:
      if (n == 0 && m == 0) return 1.0;
      return (n == m) ? 0.5 : 0.0;
    case TrigKind::cos_sin:
      if (m == 0) return 0.0;
      if (n == 0) return trig_integral(TrigKind::sin, m);
      return ((n + m) % 2 == 1)
                 ? 2.0 * m / (kPi * (static_cast<double>(m) * m - static_cast<double>(n) * n))
                 : 0.0;
  }
  throw std::invalid_argument("trig_integral: unknown kind");
}

TrigTable::TrigTable(int max_index) : max_index_(max_index) {
  if (max_index < 1) throw std::domain_error("TrigTable: max_index must be >= 1");
  cos_sin_.resize(static_cast<size_t>(max_index) * max_index);
  for (int n = 1; n <= max_index; ++n)
    for (int m = 1; m <= max_index; ++m)
      cos_sin_[static_cast<size_t>(n - 1) * max_index + (m - 1)] =
          trig_integral(TrigKind::cos_sin, n, m);
}

double TrigTable::cos_sin(int n, int m) const {
  if (n < 1 || m < 1 || n > max_index_ || m > max_index_)
    throw std::domain_error("TrigTable: index out of range");
  return cos_sin_[static_cast<size_t>(n - 1) * max_index_ + (m - 1)];
}

}  // namespace posbuild
