#include "locperf/integer.hpp"

#include <sstream>
#include <stdexcept>

namespace locperf {

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("floor_div by zero");
    Integer q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("mod_floor by zero");
    Integer m = a % b;
    if (m < 0) m += abs(b);
    return m;
}

Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
    // Iterative extended Euclid on (|a|, |b|), signs fixed at the end.
    Integer old_r = abs(a), r = abs(b);
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    x = (a < 0) ? -old_s : old_s;
    y = (b < 0) ? -old_t : old_t;
    return old_r;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
    Integer x, y;
    Integer g = ext_gcd(mod_floor(a, m), m, x, y);
    if (g != 1) throw std::domain_error("mod_inverse: not invertible");
    return mod_floor(x, m);
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Integer d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_squarefree(const Integer& n) {
    if (n == 0) throw std::domain_error("is_squarefree: zero input");
    Integer m = abs(n);
    if (m % 4 == 0) return false;
    if (m % 2 == 0) m /= 2;
    for (Integer d = 3; d * d <= m; d += 2) {
        if (m % d == 0) {
            m /= d;
            if (m % d == 0) return false;
        }
    }
    return true;
}

std::string to_string(const Integer& n) { return n.str(); }

Integer parse_integer(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_integer: empty string");
    try {
        return Integer(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_integer: bad integer '" + s + "'");
    }
}

std::string render_integer_list(const std::vector<Integer>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += v[i].str();
    }
    return out;
}

std::vector<Integer> parse_integer_list(const std::string& s) {
    std::vector<Integer> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(parse_integer(tok));
    return out;
}

}  // namespace locperf
