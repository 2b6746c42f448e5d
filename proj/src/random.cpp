#include "lbrep/random.hpp"

namespace lbrep {

namespace {

ExponentVector random_exponent(std::size_t rank, Rng& rng, int spread) {
  std::uniform_int_distribution<int> dist(-spread, spread);
  ExponentVector e(rank);
  for (std::size_t i = 0; i < rank; ++i) e[i] = dist(rng);
  return e;
}

}  // namespace

GroupRingElement random_element(const Context& context, Rng& rng, int max_terms, int spread) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> coeff(-5, 5);
  const auto& k = context->coefficients();
  GroupRingElement a(context);
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    a += GroupRingElement::monomial(context, random_exponent(context->rank(), rng, spread), k.from_integer(c));
  }
  return a;
}

GroupRingElement random_unit(const Context& context, Rng& rng, int spread) {
  std::bernoulli_distribution sign(0.5);
  const auto& k = context->coefficients();
  return GroupRingElement::monomial(context, random_exponent(context->rank(), rng, spread),
                                    k.from_integer(sign(rng) ? 1 : -1));
}

BraidWord random_word(int strands, int max_length, Rng& rng) {
  std::uniform_int_distribution<int> length(0, max_length);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution sign(0.5);
  BraidWord w{strands, {}};
  const int n = length(rng);
  for (int i = 0; i < n; ++i) w.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return w;
}

}  // namespace lbrep
