#include "embedkit/abelian_group.hpp"

#include <string>

#include "embedkit/errors.hpp"

namespace embedkit {

AbelianGroup::AbelianGroup(int sigma, int t) : sigma_(sigma), t_(t) {
  if (sigma < 0 || sigma > 20) throw ValidationError("2-rank must lie in [0, 20], got " + std::to_string(sigma));
  if (t < 1 || t % 2 == 0) throw ValidationError("cyclic factor must be odd and positive, got " + std::to_string(t));
}

AbelianGroup AbelianGroup::for_order(int n) {
  if (n < 1) throw ValidationError("group order must be positive, got " + std::to_string(n));
  int sigma = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++sigma;
  }
  return AbelianGroup(sigma, n);
}

GroupElement AbelianGroup::element(int label) const {
  if (label < 0 || label >= order()) throw ValidationError("group label " + std::to_string(label) + " out of range");
  return {static_cast<std::uint32_t>(label / t_), label % t_};
}

int AbelianGroup::label(const GroupElement& g) const noexcept {
  return g.cyc_part + t_ * static_cast<int>(g.two_part);
}

int AbelianGroup::add(int a, int b) const {
  const GroupElement x = element(a);
  const GroupElement y = element(b);
  return label({x.two_part ^ y.two_part, (x.cyc_part + y.cyc_part) % t_});
}

int AbelianGroup::negate(int a) const {
  const GroupElement x = element(a);
  return label({x.two_part, (t_ - x.cyc_part) % t_});
}

}  // namespace embedkit
