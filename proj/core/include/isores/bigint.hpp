#ifndef ISORES_BIGINT_HPP
#define ISORES_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace isores {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(long long n);

// a * (a-1) * ... * (a-k+1); empty product for k == 0.
BigInt falling_factorial(long long a, long long k);

// C(n, k) for integer n; 0 when n < 0 or n < k.
BigInt binomial(long long n, long long k);

std::string to_decimal(const BigInt& v);

} // namespace isores

#endif
