#include "twistalg/scalars.hpp"

#include <numeric>
#include <sstream>

#include "twistalg/error.hpp"

namespace twistalg {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::CompositeCharacteristic: return "CompositeCharacteristic";
    case Errc::OrderDivisibleByP: return "OrderDivisibleByP";
    case Errc::OrderNotSupported: return "OrderNotSupported";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NoExtension: return "NoExtension";
    case Errc::InvalidAction: return "InvalidAction";
    case Errc::BadFormOrder: return "BadFormOrder";
    case Errc::NotAnAutomorphism: return "NotAnAutomorphism";
    case Errc::NotCohomologous: return "NotCohomologous";
    case Errc::BadForm: return "BadForm";
    case Errc::NotIntegralM: return "NotIntegralM";
    case Errc::EigenvaluesNotInField: return "EigenvaluesNotInField";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NoSolution: return "NoSolution";
    case Errc::ZNotCentral: return "ZNotCentral";
    case Errc::RelationFails: return "RelationFails";
    case Errc::CommutationFails: return "CommutationFails";
    case Errc::SpanDeficient: return "SpanDeficient";
    case Errc::NoInvertibleSolution: return "NoInvertibleSolution";
    case Errc::MultiplicativityFails: return "MultiplicativityFails";
    case Errc::NonTerminating: return "NonTerminating";
    case Errc::RadicalUndetermined: return "RadicalUndetermined";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t old_r = mod(a, n), r = n, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  return mod(old_s, n);
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t n) {
  __int128 result = 1 % n, b = mod(base, n);
  while (exp) {
    if (exp & 1) result = result * b % n;
    b = b * b % n;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t n) {
  if (n == 1) return 1;
  std::int64_t x = mod(a, n), k = 1;
  while (x != 1) {
    x = static_cast<std::int64_t>(static_cast<__int128>(x) * mod(a, n) % n);
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------------------

RootScalar::RootScalar(std::int64_t order, std::int64_t exponent) : order_(order) {
  if (order < 1) throw Error(Errc::OrderNotSupported, "root order must be positive");
  exponent_ = mod(exponent, order);
}

std::int64_t RootScalar::true_order() const { return order_ / std::gcd(order_, exponent_); }

RootScalar RootScalar::reduced() const {
  std::int64_t g = std::gcd(order_, exponent_);
  return {order_ / g, exponent_ / g};
}

RootScalar RootScalar::with_order(std::int64_t n) const {
  RootScalar r = reduced();
  if (n % r.order_ != 0)
    throw Error(Errc::OrderNotSupported, "root does not lie in the requested mu_n");
  return {n, r.exponent_ * (n / r.order_)};
}

RootScalar RootScalar::pow(std::int64_t k) const {
  return {order_, static_cast<std::int64_t>(static_cast<__int128>(exponent_) * mod(k, order_) % order_)};
}

RootScalar operator*(const RootScalar& a, const RootScalar& b) {
  std::int64_t n = lcm64(a.order_, b.order_);
  return {n, a.exponent_ * (n / a.order_) + b.exponent_ * (n / b.order_)};
}

bool operator==(const RootScalar& a, const RootScalar& b) {
  RootScalar x = a.reduced(), y = b.reduced();
  return x.order_ == y.order_ && x.exponent_ == y.exponent_;
}

RootScalar frobenius_inverse_power(const RootScalar& z, std::int64_t q) {
  auto inv = inverse_mod(q, z.order());
  if (!inv) {
    std::ostringstream os;
    os << "q=" << q << " shares a factor with root order " << z.order();
    throw Error(Errc::NotInvertible, os.str());
  }
  return z.pow(*inv);
}

// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<std::int64_t>;  // low degree first

// a*b mod (x^e + sum m_i x^i) over F_p.
Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& modulus, std::int64_t p) {
  const int e = static_cast<int>(modulus.size());
  std::vector<std::int64_t> prod(2 * e, 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int d = 2 * e - 1; d >= e; --d) {
    std::int64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < e; ++i) prod[d - e + i] = mod(prod[d - e + i] - c * modulus[i], p);
  }
  prod.resize(e);
  return prod;
}

// Remainder of f modulo monic g (both low degree first, g given with leading 1).
Poly poly_rem(Poly f, const Poly& g, std::int64_t p) {
  const int dg = static_cast<int>(g.size()) - 1;
  for (int d = static_cast<int>(f.size()) - 1; d >= dg; --d) {
    std::int64_t c = mod(f[d], p);
    if (c == 0) continue;
    for (int i = 0; i <= dg; ++i) f[d - dg + i] = mod(f[d - dg + i] - c * g[i], p);
  }
  f.resize(std::max(dg, 0));
  return f;
}

bool is_irreducible(const Poly& lower, std::int64_t p) {
  const int e = static_cast<int>(lower.size());
  Poly f = lower;
  f.push_back(1);
  for (int d = 1; d <= e / 2; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::int64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      Poly r = poly_rem(f, g, p);
      bool zero = true;
      for (auto v : r) zero = zero && v == 0;
      if (zero) return false;
    }
  }
  return true;
}

std::uint32_t encode(const Poly& c, std::int64_t p) {
  std::int64_t code = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) code = code * p + c[i];
  return static_cast<std::uint32_t>(code);
}

Poly decode(std::uint32_t code, std::int64_t p, int e) {
  Poly c(e);
  for (int i = 0; i < e; ++i) {
    c[i] = code % p;
    code /= static_cast<std::uint32_t>(p);
  }
  return c;
}

}  // namespace

FieldSpec::FieldSpec(std::int64_t p, int e) {
  if (!is_prime(p)) throw Error(Errc::CompositeCharacteristic, "characteristic must be prime");
  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->q = 1;
  for (int i = 0; i < e; ++i) t->q *= p;
  if (t->q > (std::int64_t{1} << 24)) throw Error(Errc::OrderNotSupported, "field too large");

  // Least irreducible x^e + lower, lower ordered by its integer encoding.
  for (std::int64_t code = 0; code < t->q; ++code) {
    Poly lower = decode(static_cast<std::uint32_t>(code), p, e);
    if (is_irreducible(lower, p)) {
      t->modulus = lower;
      break;
    }
  }

  const std::int64_t order = t->q - 1;
  const auto factors = prime_factors(order);
  // Least primitive element by encoding.
  Poly gen;
  for (std::int64_t code = 1; code < t->q && gen.empty(); ++code) {
    Poly cand = decode(static_cast<std::uint32_t>(code), p, e);
    auto power = [&](std::int64_t k) {
      Poly r = decode(1, p, e), b = cand;
      while (k) {
        if (k & 1) r = mulmod_poly(r, b, t->modulus, p);
        b = mulmod_poly(b, b, t->modulus, p);
        k >>= 1;
      }
      return r;
    };
    bool primitive = true;
    for (auto l : factors) primitive = primitive && encode(power(order / l), p) != 1;
    if (primitive) gen = cand;
  }

  t->exp.resize(2 * std::max<std::int64_t>(order, 1));
  t->log.assign(t->q, 0);
  Poly x = decode(1, p, e);
  for (std::int64_t k = 0; k < order; ++k) {
    std::uint32_t c = encode(x, p);
    t->exp[k] = t->exp[k + order] = FieldElement{c};
    t->log[c] = k;
    x = mulmod_poly(x, gen, t->modulus, p);
  }

  t->neg.resize(t->q);
  for (std::int64_t a = 0; a < t->q; ++a) {
    Poly c = decode(static_cast<std::uint32_t>(a), p, e);
    for (auto& v : c) v = mod(-v, p);
    t->neg[a] = encode(c, p);
  }
  t_ = t;
  if (p != 2 && t->q <= 1024) {
    t->add.resize(t->q * t->q);
    for (std::int64_t a = 0; a < t->q; ++a)
      for (std::int64_t b = 0; b < t->q; ++b)
        t->add[a * t->q + b] = add_slow({static_cast<std::uint32_t>(a)}, {static_cast<std::uint32_t>(b)}).code;
  }
}

FieldElement FieldSpec::add_slow(FieldElement a, FieldElement b) const {
  const std::int64_t p = t_->p;
  std::uint32_t x = a.code, y = b.code, out = 0, scale = 1;
  for (int i = 0; i < t_->e; ++i) {
    out += static_cast<std::uint32_t>(((x % p) + (y % p)) % p) * scale;
    x /= static_cast<std::uint32_t>(p);
    y /= static_cast<std::uint32_t>(p);
    scale *= static_cast<std::uint32_t>(p);
  }
  return {out};
}

std::vector<std::int64_t> FieldSpec::coordinates(FieldElement a) const { return decode(a.code, t_->p, t_->e); }

FieldElement FieldSpec::from_coordinates(const std::vector<std::int64_t>& c) const {
  Poly r(t_->e, 0);
  for (std::size_t i = 0; i < c.size() && i < r.size(); ++i) r[i] = mod(c[i], t_->p);
  return {encode(r, t_->p)};
}

FieldElement FieldSpec::inv(FieldElement a) const {
  if (a.code == 0) throw Error(Errc::NotInvertible, "division by zero in field");
  const std::int64_t order = t_->q - 1;
  return t_->exp[mod(-t_->log[a.code], order)];
}

FieldElement FieldSpec::pow(FieldElement a, std::int64_t k) const {
  if (a.code == 0) return k == 0 ? one() : zero();
  const std::int64_t order = t_->q - 1;
  return t_->exp[static_cast<std::size_t>(static_cast<__int128>(t_->log[a.code]) * mod(k, order) % order)];
}

FieldElement FieldSpec::embed(const RootScalar& z) const {
  const std::int64_t order = t_->q - 1;
  RootScalar r = z.reduced();
  if (order % r.order() != 0) {
    std::ostringstream os;
    os << "mu_" << r.order() << " not contained in F_" << t_->q;
    throw Error(Errc::OrderNotSupported, os.str());
  }
  return t_->exp[static_cast<std::size_t>((order / r.order()) * r.exponent() % std::max<std::int64_t>(order, 1))];
}

FieldSpec field_make(std::int64_t p, const std::set<std::int64_t>& orders) {
  if (!is_prime(p)) throw Error(Errc::CompositeCharacteristic, "characteristic must be prime");
  std::int64_t l = 1;
  for (auto n : orders) {
    if (n < 1) throw Error(Errc::OrderNotSupported, "root orders must be positive");
    if (n % p == 0) {
      std::ostringstream os;
      os << "root order " << n << " is divisible by p=" << p;
      throw Error(Errc::OrderDivisibleByP, os.str());
    }
    l = lcm64(l, n);
  }
  return FieldSpec(p, static_cast<int>(multiplicative_order(p, l)));
}

}  // namespace twistalg
