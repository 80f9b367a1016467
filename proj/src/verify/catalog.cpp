#include "engelkit/constructions.hpp"
#include "engelkit/verify.hpp"

namespace engelkit {

namespace {

CatalogEntry entry(std::string name, std::string body, Group g) {
  return {name, "group " + name + " = " + body, g.renamed(name)};
}

} // namespace

std::vector<CatalogEntry> catalog(const Limits &limits) {
  std::vector<CatalogEntry> out;
  out.push_back(entry("C1", "cyclic 1", cyclic_group(1)));
  out.push_back(entry("C3", "cyclic 3", cyclic_group(3)));
  out.push_back(entry("C5", "cyclic 5", cyclic_group(5)));
  out.push_back(entry("C6", "cyclic 6", cyclic_group(6)));
  out.push_back(entry("C8", "cyclic 8", cyclic_group(8)));
  out.push_back(entry("S3", "perm 3 gens (1 2), (1 2 3)",
                      permutation_group(3, {{{1, 2}}, {{1, 2, 3}}}, limits)));
  out.push_back(entry("S4", "perm 4 gens (1 2), (1 2 3 4)",
                      permutation_group(4, {{{1, 2}}, {{1, 2, 3, 4}}}, limits)));
  out.push_back(entry("A4", "perm 4 gens (1 2 3), (1 2)(3 4)",
                      permutation_group(4, {{{1, 2, 3}}, {{1, 2}, {3, 4}}}, limits)));
  out.push_back(entry("D8", "dihedral 8", dihedral_group(8, limits)));
  out.push_back(entry("D12", "dihedral 12", dihedral_group(12, limits)));
  out.push_back(entry("P32", "modular p=3 n=2", modular_group(3, 2)));
  out.push_back(entry("P53", "modular p=5 n=3", modular_group(5, 3)));

  const auto &s3 = out[5].group;
  const auto &c6 = out[3].group;
  const auto &p32 = out[10].group;
  out.push_back(entry("S3xC6", "direct S3 C6", direct_product(s3, c6)));
  out.push_back(entry("P32xS3", "direct P32 S3", direct_product(p32, s3)));

  // F_1 of the example at (p, n) = (3, 2): x acts by a -> a, b -> b a^3
  const auto a = p32.generators()[0];
  const auto b = p32.generators()[1];
  out.push_back(entry("F1", "semidirect C3 P32 action [g1, g2*g1^3]",
                      semidirect_product(out[1].group, p32, {a, p32.mul(b, p32.power(a, 3))},
                                         limits)));
  // C5 x| C8 with the generator of C8 squaring C5 (action of order 4)
  const auto &c5 = out[2].group;
  out.push_back(entry("C5sC8", "semidirect C8 C5 action [g1^2]",
                      semidirect_product(out[4].group, c5, {c5.power(c5.generators()[0], 2)},
                                         limits)));
  return out;
}

std::string catalog_definitions() {
  std::string text = "# built-in catalog\n";
  for (const auto &e : catalog())
    text += e.definition + "\n";
  return text;
}

} // namespace engelkit
