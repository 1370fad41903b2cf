#include "sgo/base_rings.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "sgo/error.hpp"

namespace sgo {

std::string ring_name(RingKind kind) {
  return kind == RingKind::RationalIntegers ? "Z" : "Z[i]";
}

RingKind parse_ring(const std::string& name) {
  if (name == "Z") return RingKind::RationalIntegers;
  if (name == "Z[i]") return RingKind::GaussianIntegers;
  throw InvalidArgument("unknown base ring '" + name + "' (expected \"Z\" or \"Z[i]\")");
}

std::optional<Gaussian> exact_divide(Gaussian x, Gaussian y) {
  if (y.is_zero()) throw InvalidArgument("division by zero");
  const Gaussian t = x * y.conj();
  const Int n = y.norm();
  if (t.re % n != 0 || t.im % n != 0) return std::nullopt;
  return Gaussian{t.re / n, t.im / n};
}

Gaussian normalize_first_quadrant(Gaussian z) {
  if (z.is_zero()) return z;
  for (int k = 0; k < 4; ++k) {
    if (z.re > 0 && z.im >= 0) return z;
    z = z * Gaussian{0, 1};
  }
  return z;  // unreachable
}

std::string to_string(Gaussian z) {
  std::ostringstream out;
  if (z.im == 0) {
    out << z.re;
    return out.str();
  }
  if (z.re != 0) out << z.re << (z.im > 0 ? "+" : "-");
  else if (z.im < 0) out << "-";
  const Int b = std::llabs(z.im);
  if (b != 1) out << b;
  out << "i";
  return out.str();
}

namespace {

Int parse_int(const std::string& s, const std::string& whole) {
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  std::size_t pos = 0;
  Int v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw InvalidArgument("cannot parse Gaussian integer '" + whole + "'");
  }
  if (pos != s.size()) throw InvalidArgument("cannot parse Gaussian integer '" + whole + "'");
  return v;
}

std::string strip(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  return s;
}

}  // namespace

Gaussian parse_gaussian(const std::string& text) {
  const std::string s = strip(text);
  if (s.empty()) throw InvalidArgument("empty Gaussian integer");
  if (s.back() != 'i') {
    const Int v = parse_int(s, text);
    if (s == "+" || s == "-") throw InvalidArgument("cannot parse Gaussian integer '" + text + "'");
    return {v, 0};
  }
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0, parse_int(body, text)};
  return {parse_int(body.substr(0, split), text), parse_int(body.substr(split), text)};
}

GaussianRational::GaussianRational(Gaussian n, Gaussian d) : num(n), den(d) {
  if (d.is_zero()) throw InvalidArgument("zero denominator");
  // Make the denominator a positive rational integer, then cancel the content.
  num = num * den.conj();
  den = Gaussian{den.norm(), 0};
  Int g = std::gcd(std::gcd(std::llabs(num.re), std::llabs(num.im)), den.re);
  if (g == 0) g = den.re;
  num = {num.re / g, num.im / g};
  den = {den.re / g, 0};
}

GaussianRational GaussianRational::inverse() const {
  if (num.is_zero()) throw InvalidArgument("inverse of zero");
  return GaussianRational(den, num);
}

GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
  return GaussianRational(x.num * y.num, x.den * y.den);
}

GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
  return x * y.inverse();
}

std::string to_string(const GaussianRational& q) {
  const GaussianRational r(q.num, q.den);
  if (r.den == Gaussian{1}) return to_string(r.num);
  const bool compound = r.num.re != 0 && r.num.im != 0;
  return (compound ? "(" + to_string(r.num) + ")" : to_string(r.num)) + "/" + to_string(r.den);
}

GaussianRational parse_gaussian_rational(const std::string& text) {
  std::string s = strip(text);
  const auto slash = s.find('/');
  auto unwrap = [](std::string part) {
    if (part.size() >= 2 && part.front() == '(' && part.back() == ')')
      part = part.substr(1, part.size() - 2);
    return part;
  };
  if (slash == std::string::npos) return GaussianRational(parse_gaussian(unwrap(s)));
  return GaussianRational(parse_gaussian(unwrap(s.substr(0, slash))),
                          parse_gaussian(unwrap(s.substr(slash + 1))));
}

bool is_rational_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::pair<Int, int>> factor_integer(Int n) {
  if (n == 0) throw InvalidArgument("cannot factor zero");
  n = std::llabs(n);
  std::vector<std::pair<Int, int>> out;
  for (Int d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Gaussian MaximalIdeal::display_generator() const {
  if (ring == RingKind::RationalIntegers || generator.im == 0 || generator.re == 0)
    return generator;
  Gaussian best = generator;
  int best_key = 4;
  Gaussian z = generator;
  for (int k = 0; k < 4; ++k, z = z * Gaussian{0, 1}) {
    if (z.re <= 0) continue;
    const int key = (std::llabs(z.re) > std::llabs(z.im) ? 2 : 0) + (z.im < 0 ? 1 : 0);
    if (key < best_key) {
      best_key = key;
      best = z;
    }
  }
  return best;
}

std::string MaximalIdeal::label() const { return "(" + to_string(display_generator()) + ")"; }

MaximalIdeal maximal_ideal_from_generator(RingKind ring, Gaussian generator) {
  MaximalIdeal m;
  m.ring = ring;
  if (ring == RingKind::RationalIntegers) {
    if (generator.im != 0) throw InvalidArgument("'" + to_string(generator) + "' is not in Z");
    const Int p = std::llabs(generator.re);
    if (!is_rational_prime(p)) throw InvalidArgument(to_string(generator) + " is not prime in Z");
    m.generator = {p, 0};
    m.residue_characteristic = p;
    m.residue_field_size = p;
    return m;
  }
  const Gaussian g = normalize_first_quadrant(generator);
  const Int n = g.norm();
  if (is_rational_prime(n)) {
    m.residue_characteristic = n;
    m.residue_field_size = n;
  } else if (g.im == 0 && is_rational_prime(g.re) && g.re % 4 == 3) {
    m.residue_characteristic = g.re;
    m.residue_field_size = n;
  } else {
    throw InvalidArgument(to_string(generator) + " is not prime in Z[i]");
  }
  m.generator = g;
  return m;
}

MaximalIdeal parse_place(RingKind ring, const std::string& text) {
  std::string s = strip(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return maximal_ideal_from_generator(ring, parse_gaussian(s));
}

std::vector<std::pair<MaximalIdeal, int>> factor_rational_prime(RingKind ring, Int p) {
  if (!is_rational_prime(p)) throw InvalidArgument(std::to_string(p) + " is not a rational prime");
  std::vector<std::pair<MaximalIdeal, int>> out;
  if (ring == RingKind::RationalIntegers) {
    out.emplace_back(maximal_ideal_from_generator(ring, {p, 0}), 1);
    return out;
  }
  if (p == 2) {
    out.emplace_back(maximal_ideal_from_generator(ring, {1, 1}), 2);
  } else if (p % 4 == 3) {
    out.emplace_back(maximal_ideal_from_generator(ring, {p, 0}), 1);
  } else {
    for (Int a = 1; a * a < p; ++a) {
      const Int rest = p - a * a;
      Int b = 1;
      while (b * b < rest) ++b;
      if (b * b == rest) {
        out.emplace_back(maximal_ideal_from_generator(ring, {a, b}), 1);
        out.emplace_back(maximal_ideal_from_generator(ring, {a, -b}), 1);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int valuation(Gaussian z, const MaximalIdeal& m) {
  if (z.is_zero()) throw InvalidArgument("valuation of zero");
  if (m.ring == RingKind::RationalIntegers && z.im != 0)
    throw InvalidArgument(to_string(z) + " is not an element of Z");
  Int v = 0;
  while (auto q = exact_divide(z, m.generator)) {
    z = *q;
    ++v;
  }
  return v;
}

Int valuation(const GaussianRational& q, const MaximalIdeal& m) {
  return valuation(q.num, m) - valuation(q.den, m);
}

namespace {

void add_element_factors(RingKind ring, Gaussian z, Int sign, std::map<MaximalIdeal, Int>& acc) {
  if (ring == RingKind::RationalIntegers && z.im != 0)
    throw InvalidArgument(to_string(z) + " is not an element of Z");
  const Int size = ring == RingKind::RationalIntegers ? std::llabs(z.re) : z.norm();
  for (const auto& [p, unused] : factor_integer(size)) {
    for (const auto& [m, e] : factor_rational_prime(ring, p)) {
      const Int v = valuation(z, m);
      if (v != 0) acc[m] += sign * v;
    }
  }
}

}  // namespace

FractionalIdeal FractionalIdeal::principal(RingKind ring, const GaussianRational& q) {
  if (q.is_zero()) throw InvalidArgument("the zero ideal is not a fractional ideal");
  FractionalIdeal out(ring);
  add_element_factors(ring, q.num, +1, out.factors_);
  add_element_factors(ring, q.den, -1, out.factors_);
  std::erase_if(out.factors_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

FractionalIdeal FractionalIdeal::from_factors(
    RingKind ring, const std::vector<std::pair<MaximalIdeal, Int>>& factors) {
  FractionalIdeal out(ring);
  for (const auto& [m, e] : factors) {
    if (m.ring != ring) throw InvalidArgument("maximal ideal " + m.label() + " lives over another ring");
    out.factors_[m] += e;
  }
  std::erase_if(out.factors_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Int FractionalIdeal::valuation(const MaximalIdeal& m) const {
  auto it = factors_.find(m);
  return it == factors_.end() ? 0 : it->second;
}

FractionalIdeal FractionalIdeal::operator*(const FractionalIdeal& other) const {
  if (ring_ != other.ring_) throw InvalidArgument("ideals over different rings");
  FractionalIdeal out = *this;
  for (const auto& [m, e] : other.factors_) out.factors_[m] += e;
  std::erase_if(out.factors_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

FractionalIdeal FractionalIdeal::inverse() const {
  FractionalIdeal out = *this;
  for (auto& [m, e] : out.factors_) e = -e;
  return out;
}

std::optional<GaussianRational> is_principal(const FractionalIdeal& ideal) {
  Gaussian num{1}, den{1};
  for (const auto& [m, e] : ideal.factors()) {
    for (Int k = 0; k < std::llabs(e); ++k) {
      if (e > 0) num = num * m.generator;
      else den = den * m.generator;
    }
  }
  return GaussianRational(num, den);
}

std::string to_string(const FractionalIdeal& ideal) {
  if (ideal.is_unit_ideal()) return "R";
  std::string out;
  for (const auto& [m, e] : ideal.factors()) {
    if (!out.empty()) out += "*";
    out += m.label();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace sgo
