#include "xlag/exactnum/sturm.hpp"

#include "xlag/errors.hpp"

namespace xlag {

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p};
  if (p.degree() <= 0) return chain;
  chain.push_back(p.derivative());
  while (true) {
    Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps signs and tames coefficient growth.
    r = r.monic() * Rat(-sgn(r.leading()));
    chain.push_back(std::move(r));
  }
  return chain;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int variations_at(const std::vector<Poly>& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sgn(q(x)));
  return sign_changes(signs);
}

int variations_at_infinity(const std::vector<Poly>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sgn(q.leading()));
  return sign_changes(signs);
}

}  // namespace

int sturm_nonneg_root_count(const Poly& p) {
  if (p.is_zero()) throw InvalidParams("sturm_nonneg_root_count of the zero polynomial");
  const int v = p.valuation();
  const Poly q = p.divide_by_z_power(v);
  const auto chain = sturm_chain(q);
  return (v > 0 ? 1 : 0) + variations_at(chain, 0) - variations_at_infinity(chain);
}

int sturm_root_count(const Poly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw InvalidParams("sturm_root_count of the zero polynomial");
  if (!(a < b) || p.degree() == 0) return 0;
  Poly sq = exact_div(p, gcd(p, p.derivative()));
  if (sq(a) == 0) {
    // a itself is outside (a, b]; drop it so the chain is evaluated at a non-root.
    sq = exact_div(sq, Poly{-a, Rat(1)});
    if (sq.degree() <= 0) return 0;
  }
  const auto chain = sturm_chain(sq);
  return variations_at(chain, a) - variations_at(chain, b);
}

}  // namespace xlag
