#include "corner/rational.hpp"

#include <stdexcept>

namespace corner {

std::string rat_to_string(const Rat& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

/// Signed decimal digits only; leading zeros stripped so the big-int parser
/// cannot read them as an octal prefix.
boost::multiprecision::cpp_int parse_int(std::string t) {
  bool negative = false;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    negative = t[0] == '-';
    t.erase(0, 1);
  }
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad integer literal");
  const auto first = t.find_first_not_of('0');
  t = first == std::string::npos ? "0" : t.substr(first);
  boost::multiprecision::cpp_int v(t);
  return negative ? -v : v;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const auto num = parse_int(s.substr(0, slash));
    const auto den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in: " + s);
    return Rat(num, den);
  }
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    bool negative = false;
    std::string body = s;
    if (body[0] == '+' || body[0] == '-') {
      negative = body[0] == '-';
      body.erase(0, 1);
    }
    const auto body_dot = body.find('.');
    auto num = parse_int(body.substr(0, body_dot) + body.substr(body_dot + 1));
    const size_t frac_len = body.size() - body_dot - 1;
    if (negative) num = -num;
    boost::multiprecision::cpp_int den(1);
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rat(num, den);
  }
  return Rat(parse_int(s));
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

std::vector<double> to_doubles(const RatVec& v) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = rat_to_double(v[i]);
  return out;
}

RatVec rat_mat_apply(const RatMat& m, const RatVec& v) {
  RatVec out(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw std::invalid_argument("matrix/vector size mismatch");
    Rat acc(0);
    for (size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

RatMat rat_mat_mul(const RatMat& a, const RatMat& b) {
  if (a.empty() || b.empty()) return {};
  const size_t n = a.size(), k = b.size(), m = b[0].size();
  RatMat out(n, RatVec(m, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("matrix size mismatch");
    for (size_t j = 0; j < m; ++j) {
      Rat acc(0);
      for (size_t l = 0; l < k; ++l) acc += a[i][l] * b[l][j];
      out[i][j] = acc;
    }
  }
  return out;
}

RatMat rat_identity(int n) {
  RatMat id(n, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

bool is_zero_vec(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RatVec ray_canonical(const RatVec& v) {
  Rat best(0);
  for (const auto& x : v) {
    Rat a = x < 0 ? Rat(-x) : x;
    if (a > best) best = a;
  }
  if (best == 0) throw std::invalid_argument("ray_canonical: zero vector");
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / best;
  return out;
}

}  // namespace corner
