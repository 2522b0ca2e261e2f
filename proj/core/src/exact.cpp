#include "ahs/exact.hpp"

#include "ahs/errors.hpp"

namespace ahs {

Natural binomial(unsigned long a, unsigned long b) {
  if (b > a) return 0;
  Natural r;
  mpz_bin_uiui(r.get_mpz_t(), a, b);
  return r;
}

Natural factorial(unsigned long m) {
  Natural r;
  mpz_fac_ui(r.get_mpz_t(), m);
  return r;
}

Natural rank_r(unsigned n, long D) {
  if (D < 0) return 0;
  return binomial(static_cast<unsigned long>(n) + static_cast<unsigned long>(D), static_cast<unsigned long>(D));
}

Natural rank_r1(unsigned n, long D, unsigned long delta) {
  if (delta == 0) throw DomainError("rank_r1 needs delta >= 1");
  return rank_r(n, D) - rank_r(n, D - static_cast<long>(delta));
}

Rational harmonic(unsigned n) {
  Rational h = 0;
  for (unsigned k = 1; k <= n; ++k) h += Rational(1, k);
  h.canonicalize();
  return h;
}

unsigned long degree_of(const MultiIndex& I) {
  unsigned long d = 0;
  for (unsigned i : I) d += i;
  return d;
}

Natural multi_factorial(const MultiIndex& I) {
  Natural r = 1;
  for (unsigned i : I) r *= factorial(i);
  return r;
}

CompositionGenerator::CompositionGenerator(unsigned n, unsigned long D)
    : index_(n + 1, 0), done_(false) {
  index_[0] = static_cast<unsigned>(D);
}

void CompositionGenerator::next() {
  if (done_) return;
  const std::size_t len = index_.size();
  // Find the rightmost position before the last one holding a positive part.
  std::size_t k = len >= 2 ? len - 2 : 0;
  while (true) {
    if (len < 2) {
      done_ = true;
      return;
    }
    if (index_[k] > 0) break;
    if (k == 0) {
      done_ = true;
      return;
    }
    --k;
  }
  // Move one unit right of k and gather everything after k into k+1.
  unsigned tail = index_[len - 1];
  index_[len - 1] = 0;
  --index_[k];
  index_[k + 1] += 1 + tail;
}

std::vector<MultiIndex> compositions(unsigned n, unsigned long D) {
  std::vector<MultiIndex> out;
  for (CompositionGenerator g(n, D); !g.done(); g.next()) out.push_back(g.current());
  return out;
}

void for_each_composition(unsigned n, unsigned long D, const std::function<void(const MultiIndex&)>& fn) {
  for (CompositionGenerator g(n, D); !g.done(); g.next()) fn(g.current());
}

unsigned long to_ulong(const Natural& v) {
  if (v < 0 || !v.fits_ulong_p()) throw ResourceError("integer does not fit in 64 bits", "ulong", 0);
  return v.get_ui();
}

}  // namespace ahs
