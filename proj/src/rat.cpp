#include "chambrier/rat.hpp"

#include <stdexcept>

namespace chambrier {

Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

int sgn(const Rat& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

Int floor_rat(const Rat& r) {
  Int n = rat_num(r), d = rat_den(r);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

std::string rat_to_string(const Rat& r) {
  Int d = rat_den(r);
  if (d == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + d.str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rat(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec vec_scale(const Rat& c, const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Rat vec_dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool vec_is_zero(const RatVec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

RatVec zeros(size_t n) { return RatVec(n, Rat(0)); }

IntVec primitive_signed(const RatVec& a) {
  Int lcm_den = 1;
  for (const Rat& x : a) lcm_den = boost::multiprecision::lcm(lcm_den, rat_den(x));
  IntVec v(a.size());
  Int g = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    Rat scaled = a[i] * lcm_den;
    v[i] = rat_num(scaled);
    g = boost::multiprecision::gcd(g, v[i]);
  }
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

IntVec primitive_unsigned(const RatVec& a) {
  IntVec v = primitive_signed(a);
  for (const Int& x : v) {
    if (x > 0) break;
    if (x < 0) {
      for (Int& y : v) y = -y;
      break;
    }
  }
  return v;
}

RatVec to_rat(const IntVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return r;
}

Rat eval_form(const IntVec& form, const RatVec& x) {
  Rat s = 0;
  for (size_t i = 0; i < form.size() && i < x.size(); ++i) s += Rat(form[i]) * x[i];
  return s;
}

}  // namespace chambrier
