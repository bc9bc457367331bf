#include "ramcut/sector/sector_point.hpp"

#include "ramcut/error.hpp"
#include "ramcut/qcalc/moves.hpp"

#include <algorithm>
#include <functional>

namespace ramcut::sector {

SectorPoint SectorPoint::from_alpha(std::vector<long> alpha) {
  if (alpha.size() < 2) throw DomainError("sector points need rank d >= 2");
  if (alpha.back() != 0) throw DomainError("exponent vector must end in 0");
  if (!std::is_sorted(alpha.begin(), alpha.end(), std::greater<>())) {
    throw DomainError("exponent vector must be descending");
  }
  SectorPoint p;
  p.x_.resize(alpha.size() - 1);
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i) p.x_[i] = alpha[i] - alpha[i + 1];
  p.alpha_ = std::move(alpha);
  return p;
}

SectorPoint SectorPoint::from_x(std::vector<long> x) {
  if (x.empty()) throw DomainError("sector points need rank d >= 2");
  for (long xi : x) {
    if (xi < 0) throw DomainError("sector coordinates must be non-negative");
  }
  SectorPoint p;
  p.alpha_.assign(x.size() + 1, 0);
  for (std::size_t i = x.size(); i-- > 0;) p.alpha_[i] = p.alpha_[i + 1] + x[i];
  p.x_ = std::move(x);
  return p;
}

SectorPoint SectorPoint::origin(unsigned d) {
  if (d < 2) throw DomainError("sector points need rank d >= 2");
  return from_x(std::vector<long>(d - 1, 0));
}

bool SectorPoint::on_boundary() const noexcept {
  return std::find(x_.begin(), x_.end(), 0L) != x_.end();
}

long SectorPoint::r_norm() const { return qcalc::r_norm(rank(), std::span<const long>(x_)); }

std::string SectorPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(x_[i]);
  }
  return out + ")";
}

SectorPoint fold(unsigned d, std::span<const long> raw) {
  if (raw.size() != d) throw DomainError("fold expects a vector of length d = " + std::to_string(d));
  std::vector<long> alpha(raw.begin(), raw.end());
  std::sort(alpha.begin(), alpha.end(), std::greater<>());
  const long last = alpha.back();
  for (long& a : alpha) a -= last;
  return SectorPoint::from_alpha(std::move(alpha));
}

}  // namespace ramcut::sector
