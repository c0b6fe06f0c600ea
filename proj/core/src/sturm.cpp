#include "areal/sturm.hpp"

#include <deque>
#include <stdexcept>

namespace areal {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (!(lo < hi)) throw std::invalid_argument("Interval: requires lo < hi");
}

Rational root_bound(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("root_bound of the zero polynomial");
  const Rational& lead = p.leading_coefficient();
  Rational best(0);
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coefficient(k) / lead);
    if (r > best) best = r;
  }
  return best + 1;
}

SturmChain::SturmChain(const Polynomial& p) : bound_(0) {
  if (p.is_zero()) throw std::invalid_argument("SturmChain of the zero polynomial");
  bound_ = root_bound(p);
  chain_.push_back(p);
  if (p.degree() >= 1) {
    chain_.push_back(p.derivative());
    while (true) {
      Polynomial r = poly_divmod(chain_[chain_.size() - 2], chain_.back()).remainder;
      if (r.is_zero()) break;
      // Positive rescale keeps signs intact and coefficients small.
      Rational scale = Rational(1) / abs(r.leading_coefficient());
      chain_.push_back(scale * -r);
    }
  }
}

int SturmChain::variations(const Rational& x) const {
  int count = 0;
  int prev = 0;
  for (const Polynomial& p : chain_) {
    int s = sign(p(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int SturmChain::count(const Interval& iv) const { return variations(iv.lo) - variations(iv.hi); }

int SturmChain::count_all() const { return count(Interval(-bound_, bound_)); }

int sturm_count(const Polynomial& p, const Interval& iv) { return SturmChain(p).count(iv); }

std::vector<Interval> isolate_real_roots(const Polynomial& p) {
  SturmChain chain(p);
  std::vector<Interval> out;
  int total = chain.count_all();
  if (total == 0) return out;

  std::deque<std::pair<Interval, int>> work;
  work.emplace_back(Interval(-chain.bound(), chain.bound()), total);
  while (!work.empty()) {
    auto [iv, cnt] = work.front();
    work.pop_front();
    if (cnt == 1) {
      // Shrink onto the root for a usable localization.
      while (iv.width() > Rational(1, 2)) {
        Rational mid = iv.midpoint();
        Interval left(iv.lo, mid);
        if (chain.count(left) == 1)
          iv = left;
        else
          iv = Interval(mid, iv.hi);
      }
      out.push_back(iv);
      continue;
    }
    Rational mid = iv.midpoint();
    Interval left(iv.lo, mid), right(mid, iv.hi);
    int cl = chain.count(left);
    if (cl > 0) work.emplace_back(left, cl);
    if (cnt - cl > 0) work.emplace_back(right, cnt - cl);
  }
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

Rational refine_root(const Polynomial& p, const Interval& iv, const Rational& tol) {
  if (sign(tol) <= 0) throw std::invalid_argument("refine_root: tol must be positive");
  if (p.is_zero()) throw std::invalid_argument("refine_root of the zero polynomial");
  // The square-free part has the same distinct roots, all simple, so the
  // Sturm bisection below never stalls on an even-multiplicity root.
  Polynomial sf = p;
  Polynomial g = poly_gcd(p, p.derivative());
  if (g.degree() >= 1) sf = poly_div_exact(p, g).monic();
  SturmChain chain(sf);
  Interval cur = iv;
  if (chain.count(cur) != 1)
    throw std::invalid_argument("refine_root: interval does not isolate exactly one real root");
  if (sign(sf(cur.hi)) == 0) return cur.hi;
  while (cur.width() > tol) {
    Rational mid = cur.midpoint();
    if (sign(sf(mid)) == 0) return mid;
    Interval left(cur.lo, mid);
    if (chain.count(left) == 1)
      cur = left;
    else
      cur = Interval(mid, cur.hi);
  }
  return cur.midpoint();
}

bool has_common_real_root(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero())
    throw std::invalid_argument("has_common_real_root: zero polynomial");
  Polynomial g = poly_gcd(p, q);
  if (g.degree() <= 0) return false;
  return SturmChain(g).count_all() > 0;
}

}  // namespace areal
