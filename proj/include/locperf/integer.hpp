#ifndef LOCPERF_INTEGER_HPP
#define LOCPERF_INTEGER_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace locperf {

using Integer = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

/// Quotient of floor division (remainder has the sign of b).
Integer floor_div(const Integer& a, const Integer& b);

/// Representative of a mod b in [0, |b|); b must be nonzero.
Integer mod_floor(const Integer& a, const Integer& b);

/// Extended gcd: returns g = gcd(a,b) >= 0 and writes x, y with a*x + b*y = g.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y);

/// Inverse of a modulo m (m > 1, gcd(a,m) = 1); throws std::domain_error otherwise.
Integer mod_inverse(const Integer& a, const Integer& m);

/// Deterministic trial-division primality test; fine at desk scale.
bool is_prime(const Integer& n);

/// True when |n| is squarefree; n must be nonzero.
bool is_squarefree(const Integer& n);

std::string to_string(const Integer& n);
Integer parse_integer(const std::string& s);

/// "a b c" with a single space; empty vector renders as "".
std::string render_integer_list(const std::vector<Integer>& v);
std::vector<Integer> parse_integer_list(const std::string& s);

}  // namespace locperf

#endif
