#include "refl/cyclotomic.hpp"

#include <sstream>

namespace refl {

Cyclotomic Cyclotomic::zeta_pow(int k) {
  k %= 12;
  if (k < 0) k += 12;
  Cyclotomic z(Rational(0), Rational(1), Rational(0), Rational(0));
  Cyclotomic r = one();
  for (int i = 0; i < k; ++i) r = r * z;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  return Cyclotomic(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2],
                    c_[3] + o.c_[3]);
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  return Cyclotomic(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2],
                    c_[3] - o.c_[3]);
}

Cyclotomic Cyclotomic::operator-() const {
  return Cyclotomic(-c_[0], -c_[1], -c_[2], -c_[3]);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  std::array<Rational, 7> raw{};
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < 4; ++j) raw[i + j] += c_[i] * o.c_[j];
  }
  // z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
  Cyclotomic r(raw[0] + (-raw[4] - raw[6]), raw[1] - raw[5], raw[2] + raw[4],
               raw[3] + raw[5]);
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // Solve (this * x) = 1 as a 4x4 rational linear system: column j is the
  // coefficient vector of this * z^j.
  Rational a[4][4];
  for (int j = 0; j < 4; ++j) {
    Cyclotomic col = *this * zeta_pow(j);
    for (int i = 0; i < 4; ++i) a[i][j] = col.coeff(i);
  }
  Rational b[4] = {1, 0, 0, 0};
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    while (a[piv][c] == 0) ++piv;
    for (int j = 0; j < 4; ++j) std::swap(a[c][j], a[piv][j]);
    std::swap(b[c], b[piv]);
    Rational d = a[c][c];
    for (int j = 0; j < 4; ++j) a[c][j] /= d;
    b[c] /= d;
    for (int r = 0; r < 4; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int j = 0; j < 4; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  return Cyclotomic(b[0], b[1], b[2], b[3]);
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic r = Cyclotomic(c_[0]);
  for (int i = 1; i < 4; ++i)
    r = r + Cyclotomic(c_[i]) * zeta_pow(12 - i);
  return r;
}

static std::string rat_str(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  os << rat_str(c_[0]) << " + " << rat_str(c_[1]) << "*z + " << rat_str(c_[2])
     << "*z^2 + " << rat_str(c_[3]) << "*z^3";
  return os.str();
}

static Rational parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: '" + s + "'");
  }
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
  // Accepts the serialized form "c0 + c1*z + c2*z^2 + c3*z^3"; each term is
  // optional but must appear in basis order.
  std::array<Rational, 4> c{};
  std::istringstream is(text);
  std::string tok;
  bool first = true;
  while (is >> tok) {
    bool neg = false;
    if (!first) {
      if (tok == "+") {
        // separator
      } else if (tok == "-") {
        neg = true;
      } else {
        throw std::invalid_argument("bad cyclotomic: '" + text + "'");
      }
      if (!(is >> tok)) throw std::invalid_argument("bad cyclotomic: '" + text + "'");
    }
    first = false;
    int deg = 0;
    std::string num = tok;
    auto star = tok.find('*');
    if (star != std::string::npos) {
      num = tok.substr(0, star);
      std::string zpart = tok.substr(star + 1);
      if (zpart == "z")
        deg = 1;
      else if (zpart == "z^2")
        deg = 2;
      else if (zpart == "z^3")
        deg = 3;
      else
        throw std::invalid_argument("bad cyclotomic term: '" + tok + "'");
    }
    Rational v = parse_rat(num);
    c[deg] += neg ? -v : v;
  }
  return Cyclotomic(c[0], c[1], c[2], c[3]);
}

size_t Cyclotomic::hash() const {
  size_t h = 0xcbf29ce484222325ull;
  std::hash<std::string> sh;
  for (int i = 0; i < 4; ++i) {
    std::ostringstream os;
    os << c_[i];
    h = (h ^ sh(os.str())) * 0x100000001b3ull;
  }
  return h;
}

}  // namespace refl
