#include "twistalg/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "twistalg/error.hpp"

namespace twistalg {

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
  static std::mutex lock;
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard<std::mutex> g(lock);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d
  std::vector<std::int64_t> num(static_cast<std::size_t>(n + 1), 0);
  num[0] = -1;
  num[n] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const std::int64_t c = num[i];
      quot[i - dd] = c;
      for (std::size_t k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
    }
    num = std::move(quot);
  }
  std::lock_guard<std::mutex> g(lock);
  cache[n] = num;
  return num;
}

Cyclotomic Cyclotomic::root(std::int64_t n, std::int64_t k) {
  Cyclotomic c(n);
  c.add_root(k);
  return c;
}

Cyclotomic Cyclotomic::integer(std::int64_t n, std::int64_t v) {
  Cyclotomic c(n);
  c.c_[0] = v;
  return c;
}

void Cyclotomic::add_root(std::int64_t k, std::int64_t times) { c_[mod(k, conductor())] += times; }

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.conductor() != conductor()) throw Error(Errc::DimensionMismatch, "cyclotomic conductors differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (o.conductor() != conductor()) throw Error(Errc::DimensionMismatch, "cyclotomic conductors differ");
  Cyclotomic r(conductor());
  const std::int64_t n = conductor();
  for (std::int64_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::int64_t j = 0; j < n; ++j)
      if (o.c_[j] != 0) r.c_[(i + j) % n] += c_[i] * o.c_[j];
  }
  return r;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic r(conductor());
  for (std::int64_t i = 0; i < conductor(); ++i) r.c_[mod(-i, conductor())] = c_[i];
  return r;
}

std::vector<std::int64_t> Cyclotomic::reduced() const {
  const auto phi = cyclotomic_polynomial(conductor());
  const std::size_t deg = phi.size() - 1;
  std::vector<std::int64_t> r = c_;
  for (std::size_t i = r.size(); i-- > deg;) {
    const std::int64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= deg; ++k) r[i - deg + k] -= c * phi[k];
  }
  r.resize(deg);
  return r;
}

bool Cyclotomic::is_zero() const {
  for (auto v : reduced())
    if (v != 0) return false;
  return true;
}

bool Cyclotomic::is_integer(std::int64_t* value) const {
  auto r = reduced();
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return false;
  if (value) *value = r.empty() ? 0 : r[0];
  return true;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.reduced() == b.reduced(); }

}  // namespace twistalg
