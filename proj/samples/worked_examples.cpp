// Small tour of the library: one LR coefficient three ways, the two hives
// behind it, a four-term Schur identity in rank 4, and one zeta-series check.

#include <iostream>
#include <random>

#include "rsv/rsv.hpp"

int main() {
  using namespace rsv;

  const Partition x = Partition::parse("[2,1]"), u = Partition::parse("[3,2,1]");
  std::cout << "c^" << u.str() << "_{" << x.str() << "," << x.str() << "}: tableaux " << lr_coeff_tableaux(x, x, u) << ", hives "
            << count_hives(x, x, u).count << ", anti-hives " << count_anti_hives(x, x, u).count << "\n";

  for_each_hive(HiveBoundary(x, x, u, 3), HiveMode::hive, [](const Hive& h) { std::cout << h.grid() << "\n"; });

  // S_(2,1,0,0) * S_(0,0,0,-2) in four variables.
  const auto terms = reduction2_terms(Partition::parse("[2,1]"), Partition::parse("[2]"), {4, 2, 1});
  std::cout << "S_[2,1,0,0]@4 * S_[0,0,0,-2]@4 =";
  bool first = true;
  for (const auto& [w, c] : reduction2_weights(terms)) {
    std::cout << (first ? " " : " + ") << c << "*S_" << w.str();
    first = false;
  }
  const auto sym = verify_reduction2_symbolic(Partition::parse("[2,1]"), Partition::parse("[2]"), {4, 2, 1});
  std::cout << "\nsymbolic check: " << (sym.equal ? "equal" : "DIFFERENT") << "\n";

  std::mt19937_64 rng(7);
  const SatakeData d = random_satake(3, 1, 1, 0, Rational(2), rng, SatakeRange{});
  const auto rep = verify_unramified(d, {4, 4});
  std::cout << "zeta series l=3 m=1 n=1 j=0, caps (4,4): " << (rep.equal ? "equal" : "DIFFERENT") << "\n";
  std::cout << "coefficient of T1 T2: " << rep.lhs.coeff(1, 1) << "\n";
  return rep.equal && sym.equal ? 0 : 1;
}
