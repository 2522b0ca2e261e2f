#include "ahs/combinatorics.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "ahs/errors.hpp"

namespace ahs {

Real log_natural(const Natural& m, Precision prec) {
  if (m <= 0) throw DomainError("log of a nonpositive integer");
  if (m == 1) return Real(prec);
  return log(Real(m, prec));
}

Real log_factorial(unsigned long m, Precision prec) {
  if (m <= 1) return Real(prec);
  return log_natural(factorial(m), prec);
}

Real c_bruteforce(unsigned n, unsigned long D, Precision prec, std::uint64_t cap) {
  Natural count = rank_r(n, static_cast<long>(D));
  if (count > Natural(static_cast<unsigned long>(cap))) {
    throw ResourceError("c_bruteforce: r(" + std::to_string(n) + "," + std::to_string(D) + ") = " +
                            count.get_str() + " exceeds the enumeration cap " + std::to_string(cap),
                        "bruteforce_cap", static_cast<double>(cap));
  }
  std::vector<Real> lf;
  lf.reserve(D + 1);
  for (unsigned long m = 0; m <= D; ++m) lf.push_back(log_factorial(m, prec));
  Real sum(prec);
  for (CompositionGenerator g(n, D); !g.done(); g.next()) {
    Real term = -lf[D];
    for (unsigned i : g.current()) term += lf[i];
    sum += term;
  }
  return sum;
}

Real q_exact(unsigned n, unsigned long D, Precision prec) {
  Real sum(prec);
  for (unsigned long m = 2; m <= D; ++m) {
    Natural coeff = rank_r(n, static_cast<long>(m) - 1) - rank_r(n, static_cast<long>(D - m));
    if (coeff == 0) continue;
    sum += Real(coeff, prec) * log_natural(m, prec);
  }
  return sum;
}

Real s_exact(unsigned n, unsigned long D, Precision prec) {
  if (n < 1) throw DomainError("s_exact needs n >= 1");
  Real sum(prec);
  for (unsigned long m = 2; m <= D; ++m) {
    Natural a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), m - 1, n);
    mpz_ui_pow_ui(b.get_mpz_t(), D - m, n);
    Natural coeff = a - b;
    if (coeff == 0) continue;
    sum += Real(coeff, prec) * log_natural(m, prec);
  }
  return sum;
}

namespace {

using MemoKey = std::tuple<unsigned, unsigned long, Precision>;

struct CMemo {
  std::shared_mutex mutex;
  std::map<MemoKey, Real> values;
};

CMemo& c_memo() {
  static CMemo memo;
  return memo;
}

bool memo_get(const MemoKey& key, Real& out) {
  CMemo& memo = c_memo();
  std::shared_lock lock(memo.mutex);
  auto it = memo.values.find(key);
  if (it == memo.values.end()) return false;
  out = it->second;
  return true;
}

void memo_put(const MemoKey& key, const Real& value) {
  CMemo& memo = c_memo();
  std::unique_lock lock(memo.mutex);
  memo.values.insert_or_assign(key, value);
}

}  // namespace

Real c_recurrence(unsigned n, unsigned long D, Precision prec) {
  if (n == 0 || D <= 1) return Real(prec);
  Real cached(prec);
  if (memo_get({n, D, prec}, cached)) return cached;
  Real sum(prec);
  for (unsigned long m = 0; m <= D; ++m) sum += c_recurrence(n - 1, m, prec);
  Real value = sum - q_exact(n, D, prec);
  memo_put({n, D, prec}, value);
  return value;
}

Real c1_binomial_form(unsigned long D, Precision prec) {
  Real sum(prec);
  for (unsigned long m = 0; m <= D; ++m) sum += log_natural(binomial(D, m), prec);
  return -sum;
}

}  // namespace ahs
