#include "tropsa/rational.hpp"

#include "tropsa/error.hpp"

#include <algorithm>
#include <cctype>

namespace tropsa {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                                 : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        fail(ErrorKind::InvalidInput, "not a rational: \"" + std::string(text) + "\"");

    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        fail(ErrorKind::InvalidInput, "zero denominator: \"" + std::string(text) + "\"");
    Rational q(negative ? Integer(-n) : n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational make_rational(long num, long den) {
    if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

IntegerVector make_integer_vector(std::initializer_list<long> xs) {
    IntegerVector v;
    v.reserve(xs.size());
    for (long x : xs) v.emplace_back(x);
    return v;
}

RationalVector to_rational(const IntegerVector& v) {
    return RationalVector(v.begin(), v.end());
}

bool is_zero(const IntegerVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_zero(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Integer gcd_of(const IntegerVector& v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntegerVector primitive_on_ray(const RationalVector& v) {
    if (is_zero(v)) fail(ErrorKind::Precondition, "primitive vector of zero vector");
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    IntegerVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(Integer(x.get_num() * (l / x.get_den())));
    const Integer g = gcd_of(out);
    for (auto& x : out) x /= g;
    return out;
}

IntegerVector normalized_primitive(const RationalVector& v) {
    IntegerVector out = primitive_on_ray(v);
    const auto first = std::find_if(out.begin(), out.end(), [](const Integer& x) { return x != 0; });
    if (*first < 0)
        for (auto& x : out) x = -x;
    return out;
}

Rational dot(const IntegerVector& a, const IntegerVector& b) {
    ensure(a.size() == b.size(), "dot: size mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return Rational(s);
}

Rational dot(const RationalVector& a, const IntegerVector& b) {
    ensure(a.size() == b.size(), "dot: size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    ensure(a.size() == b.size(), "dot: size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string to_string(const IntegerVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

std::string to_string(const RationalVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

} // namespace tropsa
