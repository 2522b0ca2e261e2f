#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

namespace ahs {

using Natural = mpz_class;
using Rational = mpq_class;

// Exponent vector (i_0, ..., i_n) of a monomial.
using MultiIndex = std::vector<unsigned>;

Natural binomial(unsigned long a, unsigned long b);
Natural factorial(unsigned long m);

// Number of degree-D monomials in n+1 variables; 0 for D < 0.
Natural rank_r(unsigned n, long D);
// r(n, D) - r(n, D - delta).
Natural rank_r1(unsigned n, long D, unsigned long delta);

// 1 + 1/2 + ... + 1/n, with the empty sum for n = 0.
Rational harmonic(unsigned n);

unsigned long degree_of(const MultiIndex& I);
// i_0! ... i_n!
Natural multi_factorial(const MultiIndex& I);

// Walks the compositions of D into n+1 nonnegative parts in lexicographic
// order, largest first: (D,0,...,0), (D-1,1,0,...), ..., (0,...,0,D).
class CompositionGenerator {
 public:
  CompositionGenerator(unsigned n, unsigned long D);
  const MultiIndex& current() const { return index_; }
  bool done() const { return done_; }
  void next();

 private:
  MultiIndex index_;
  bool done_;
};

std::vector<MultiIndex> compositions(unsigned n, unsigned long D);
void for_each_composition(unsigned n, unsigned long D, const std::function<void(const MultiIndex&)>& fn);

// Converts a rank to unsigned long, throwing if it does not fit.
unsigned long to_ulong(const Natural& v);

}  // namespace ahs
