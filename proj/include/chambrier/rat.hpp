#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace chambrier {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

Int rat_num(const Rat& r);
Int rat_den(const Rat& r);
int sgn(const Rat& r);

// floor/ceil toward -inf / +inf, exact.
Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

// "p/q" with q omitted when 1. Parsing accepts optional sign and "p" or "p/q".
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& c, const RatVec& a);
Rat vec_dot(const RatVec& a, const RatVec& b);
bool vec_is_zero(const RatVec& a);
RatVec zeros(size_t n);

// Clears denominators and divides by the gcd of the entries. The direction of
// the covector is preserved: use for inequality forms, where sign is meaning.
IntVec primitive_signed(const RatVec& a);
// Same, then flips sign so the first nonzero entry is positive: canonical
// representative of the line through the covector. Use for equality forms.
IntVec primitive_unsigned(const RatVec& a);

RatVec to_rat(const IntVec& a);
Rat eval_form(const IntVec& form, const RatVec& x);

}  // namespace chambrier
