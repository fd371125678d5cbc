// Prints gamma_n, epsilon_n and the kernel of gamma_n for a few small ranks.
#include <iostream>

#include "numfun/numfun.hpp"

using namespace numfun;

static void print_int(IntMatrix const& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::cout << "   ";
    for (std::size_t j = 0; j < m.cols(); ++j) std::cout << ' ' << m(i, j);
    std::cout << '\n';
  }
}

static void print_rat(RatMatrix const& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::cout << "   ";
    for (std::size_t j = 0; j < m.cols(); ++j) std::cout << ' ' << m(i, j);
    std::cout << '\n';
  }
}

int main() {
  for (auto [k, n] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 2}, {1, 3}}) {
    AugAlgebra alg(k, n);
    GammaModule gam(k, n);
    std::cout << "k=" << k << " n=" << n << "  dim B=" << alg.dimension()
              << "  dim Gamma=" << gam.dimension() << '\n';

    std::cout << "  B basis:";
    for (auto const& x : alg.basis()) std::cout << " [" << x.key() << ']';
    std::cout << "\n  Gamma basis:";
    for (auto const& a : gam.basis()) std::cout << ' ' << a.key();
    std::cout << '\n';

    auto pair = gamma_epsilon_pair(k, n);
    std::cout << "  gamma:\n";
    print_int(pair.gamma);
    std::cout << "  epsilon:\n";
    print_rat(pair.epsilon());
    std::cout << "  gamma epsilon = 1: " << (verify_section(pair) ? "yes" : "no") << '\n';

    auto kc = kernel_of_gamma(k, n);
    std::cout << "  kernel basis (rank " << kc.kernel.rank() << "):\n";
    print_int(kc.kernel.basis());
    std::cout << "  equals saturated [rz] - r^n [z] span: " << (kc.match ? "yes" : "no")
              << "\n\n";
  }
}
