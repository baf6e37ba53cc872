#include "afp/field.hpp"

#include <string>

#include "afp/types.hpp"

namespace afp {

namespace {

using Poly = std::vector<unsigned>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inverse_mod(unsigned a, unsigned p) {
  for (unsigned x = 1; x < p; ++x) {
    if ((a * x) % p == 1) return x;
  }
  throw Error("no inverse modulo p");
}

// Remainder of a by b over GF(p); b nonzero.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const auto db = b.size() - 1;
  const auto lead_inv = inverse_mod(b.back(), p);
  while (a.size() > db) {
    const auto shift = a.size() - 1 - db;
    const auto factor = (a.back() * lead_inv) % p;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p * p - factor * b[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits(unsigned value, unsigned p, unsigned k) {
  Poly out(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

unsigned undigits(const Poly& d, unsigned p) {
  unsigned v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::vector<unsigned>> default_modulus(unsigned q) {
  switch (q) {
    case 4: return Poly{1, 1, 1};
    case 8: return Poly{1, 1, 0, 1};
    case 9: return Poly{1, 0, 1};
    case 16: return Poly{1, 1, 0, 0, 1};
    default: return std::nullopt;
  }
}

bool is_irreducible(unsigned p, const std::vector<unsigned>& poly) {
  Poly f = poly;
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const auto deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // Every monic polynomial of degree d.
    unsigned count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (unsigned c = 0; c < count; ++c) {
      Poly g = digits(c, p, static_cast<unsigned>(d));
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0 || a >= q_) throw InvalidInput("zero has no multiplicative inverse");
  return inv_[a];
}

FiniteField gf(unsigned p, unsigned k, std::optional<std::vector<unsigned>> modulus) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidInput("field degree must be at least 1");
  unsigned q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > FiniteField::kMaxOrder) {
      throw InvalidInput("field orders above " + std::to_string(FiniteField::kMaxOrder) + " are not supported");
    }
  }

  Poly mod;
  if (k > 1) {
    if (!modulus) modulus = default_modulus(q);
    if (!modulus) throw InvalidInput("no default irreducible polynomial for q = " + std::to_string(q));
    mod = *modulus;
    if (mod.size() != k + 1) {
      throw InvalidInput("irreducible polynomial for degree " + std::to_string(k) + " needs " + std::to_string(k + 1) +
                         " coefficients");
    }
    for (auto c : mod) {
      if (c >= p) throw InvalidInput("polynomial coefficients must lie in [0, p)");
    }
    if (mod.back() == 0) throw InvalidInput("leading coefficient must be nonzero");
    if (!is_irreducible(p, mod)) throw InvalidInput("polynomial is reducible over GF(" + std::to_string(p) + ")");
    const auto lead_inv = inverse_mod(mod.back(), p);
    for (auto& c : mod) c = (c * lead_inv) % p;
  } else if (modulus && !modulus->empty()) {
    throw InvalidInput("a polynomial only applies to extension fields (k > 1)");
  }

  FiniteField f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = q;
  f.modulus_ = mod;
  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  f.neg_.resize(q);
  f.inv_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    const auto da = digits(a, p, k);
    for (unsigned b = 0; b < q; ++b) {
      const auto db = digits(b, p, k);
      Poly sum(k);
      for (unsigned i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
      f.add_[a * q + b] = undigits(sum, p);

      Poly prod(2 * k - 1, 0);
      for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      }
      if (k > 1) prod = poly_mod(prod, mod, p);
      prod.resize(k, 0);
      f.mul_[a * q + b] = undigits(prod, p);
    }
  }
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      if (f.add_[a * q + b] == 0) f.neg_[a] = b;
      if (f.mul_[a * q + b] == 1) f.inv_[a] = b;
    }
  }
  f.self_check();
  return f;
}

FiniteField gf_of_order(unsigned q, std::optional<std::vector<unsigned>> modulus) {
  if (q < 2) throw InvalidInput("field order must be at least 2");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned k = 0;
  unsigned rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw InvalidInput(std::to_string(q) + " is not a prime power");
  return gf(p, k, std::move(modulus));
}

void FiniteField::self_check() const {
  const auto fail = [](const std::string& what) { throw Error("field table self-check failed: " + what); };
  for (unsigned a = 0; a < q_; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a) fail("identity");
    if (a != 0 && mul(a, inv_[a]) != 1) fail("multiplicative inverse");
    unsigned acc = 0;
    for (unsigned i = 0; i < p_; ++i) acc = add(acc, a);
    if (acc != 0) fail("characteristic");
    for (unsigned b = 0; b < q_; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) fail("commutativity");
      if (a != 0 && b != 0 && mul(a, b) == 0) fail("zero divisor");
      for (unsigned c = 0; c < q_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
      }
    }
  }
}

}  // namespace afp
