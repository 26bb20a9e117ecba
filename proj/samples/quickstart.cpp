// Builds the spaces for a three-element pair and prints each X(q) together
// with the verification verdicts.

#include <iostream>

#include "qorep/qorep.hpp"

int main() {
  using namespace qorep;
  const auto pair = validate_pair({"a", "b", "c"}, {{"a", "b"}}, {{"a", "b"}, {"b", "a"}}, false);
  const auto construction = construct(pair);
  for (const auto& [q, space] : construction.spaces) std::cout << "X(" << q << ") = " << space.to_string() << "\n";

  const auto report = verify(pair, construction);
  for (const auto& v : report.verdicts) {
    if (v.q == v.q_prime) continue;
    std::cout << v.q << " -> " << v.q_prime << ": clopen=" << v.clopen << " closed=" << v.closed
              << " inj=" << v.inj << (v.ok() ? "" : "  FAILED") << "\n";
  }
  std::cout << (report.pass ? "pass" : "fail") << "\n";
  return report.pass ? 0 : 1;
}
