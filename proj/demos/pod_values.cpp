// Prints a small table of partition counts with distinct odd parts (single
// partitions and triples), their residues, and one rediscovered congruence.
#include <qcert/claims.hpp>
#include <qcert/cli.hpp>

#include <iostream>

int main() {
  using namespace qcert;

  const std::size_t upto = 20;
  const SequenceTable single = pod_table(1, upto);
  const SequenceTable triple = pod_table(3, upto);

  std::cout << "n, pod(n), pod_3(n), pod_3(n) mod 9\n";
  for (std::size_t n = 0; n < upto; n++)
    std::cout << n << ", " << single.values[n].str() << ", " << triple.values[n].str()
              << ", " << triple.values[n] % 9 << "\n";

  // The first member of the infinite vanishing family mod 9.
  const auto claims = instantiate_family("pod3-mod9-powers", {{"alpha", 1}});
  const Certificate cert = verify(claims.at(0), 99, Limits{});
  std::cout << "\n" << cli_detail::describe_claim(cert.claim) << " for n <= " << cert.n_max
            << ": " << (cert.pass ? "verified" : "FAILED") << "\n";
  return 0;
}
