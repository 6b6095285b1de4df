// Prints a Voigt line profile K(x, y) and its companion L(x, y) across
// -10 <= x <= 10 for a few damping ratios y.

#include <cstdio>

#include "faddeeva/faddeeva.hpp"

int main() {
  const auto table = faddeeva::build_table({});
  std::printf("%8s %8s %24s %24s\n", "x", "y", "K", "L");
  for (double y : {1e-3, 0.1, 1.0}) {
    for (int i = -10; i <= 10; i += 2) {
      const auto kl = faddeeva::voigt(i, y, table);
      std::printf("%8d %8g %24s %24s\n", i, y, faddeeva::format_sci(kl.K).c_str(),
                  faddeeva::format_sci(kl.L).c_str());
    }
  }
}
