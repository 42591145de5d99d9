// A small tour: build the boundary of a triangle on a larger ground set,
// take its Alexander dual, and watch the duality theorem line up degree by
// degree.

#include <iostream>

#include "alexdual/homology.hpp"
#include "alexdual/io.hpp"
#include "alexdual/moves.hpp"

using namespace alexdual;

int main() {
  auto K = boundary_of_simplex({"a", "b", "c"}, {"a", "b", "c", "d", "e"});
  std::cout << "K = boundary of abc on the ground set {a..e}:\n" << write_complex(K) << "\n";

  auto report = check_duality(K, K.ground_ptr());
  std::cout << "K* (the Alexander dual):\n" << write_complex(report.dual) << "\n";

  for (const auto& c : report.degrees)
    if (!(c.homology.is_trivial() && c.cohomology.is_trivial()))
      std::cout << "H~" << c.degree << "(K) = " << c.homology.to_string() << "   H~^"
                << (report.n - c.degree - 3) << "(K*) = " << c.cohomology.to_string()
                << (c.match ? "   (match)" : "   (MISMATCH)") << "\n";

  auto nk = nerve(report.dual);
  std::cout << "\nThe nerve of K* is the boundary of a simplex: core has "
            << core(nk.complex).facets().size() << " facets\n";
  return report.all_match ? 0 : 1;
}
