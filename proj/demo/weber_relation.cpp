// Shows the three explicit objects side by side for a small dimension: the
// low-weight generic set, the Weber--Abdel-Ghaffar set, and the invertible
// transform carrying one onto the other.

#include <iostream>

#include "gecs/gecs.hpp"

int main() {
  const unsigned r = 5;
  const auto low = gecs::low_weight_set(r, 3);
  const auto weber = gecs::weber_set(r);
  const auto s = gecs::weber_transform(r);

  std::cout << "low-weight generic (" << r << ",3) set, size " << low.size()
            << ":\n";
  gecs::write_set(std::cout, low);

  std::cout << "\ntransform S (all-one first column, unit columns after):\n";
  gecs::write_matrix(std::cout, s);

  std::cout << "\nimage of the low-weight set under S:\n";
  const auto image = gecs::apply_transform(low, s);
  gecs::write_set(std::cout, image);

  std::cout << "\nweber set, size " << weber.size() << ":\n";
  gecs::write_set(std::cout, weber);

  std::cout << "\nimage equals weber set: " << (image == weber ? "yes" : "no")
            << '\n';
  return 0;
}
