#pragma once

#include <cstddef>
#include <cstdint>

namespace embedkit {

// Element of Z_2^sigma x Z_t: a sigma-bit vector plus a residue mod t.
struct GroupElement {
  std::uint32_t two_part = 0;
  int cyc_part = 0;

  bool operator==(const GroupElement&) const = default;
};

// The group Z_2^sigma x Z_t (t odd) with elements labelled
// cyc_part + t * two_part, so labels run over 0 .. order()-1.
class AbelianGroup {
 public:
  AbelianGroup(int sigma, int t);

  // Factor n = 2^sigma * t with t odd.
  static AbelianGroup for_order(int n);

  int sigma() const noexcept { return sigma_; }
  int t() const noexcept { return t_; }
  int order() const noexcept { return (1 << sigma_) * t_; }

  GroupElement element(int label) const;
  int label(const GroupElement& g) const noexcept;

  int add(int a, int b) const;
  int negate(int a) const;
  bool is_involution(int a) const { return a != 0 && negate(a) == a; }

 private:
  int sigma_;
  int t_;
};

}  // namespace embedkit
