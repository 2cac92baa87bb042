#include "ringlab/constructions.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace ringlab {

namespace {

std::size_t capped_power(std::size_t base, std::size_t exp, const Limits& limits, const std::string& what) {
  std::size_t cap = std::min(limits.max_order, kMaxSupportedOrder);
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > cap / base) {
      throw RingError(ErrorCode::OutOfCap, what + " would exceed the order cap " + std::to_string(cap));
    }
    v *= base;
  }
  if (v > cap) throw RingError(ErrorCode::OutOfCap, what + " would exceed the order cap " + std::to_string(cap));
  return v;
}

void require_cap(std::size_t n, const Limits& limits, const std::string& what) {
  std::size_t cap = std::min(limits.max_order, kMaxSupportedOrder);
  if (n > cap) throw RingError(ErrorCode::OutOfCap, what + " has order " + std::to_string(n) + " above cap " + std::to_string(cap));
}

// Wraps a composite label so it can be used as a coefficient.
std::string coeff(const std::string& s) {
  if (s.find_first_of("+ ") != std::string::npos || (s.size() > 1 && s.find('-', 1) != std::string::npos)) {
    return "(" + s + ")";
  }
  return s;
}

// Rings whose elements are fixed-length vectors over one base ring, with
// componentwise addition.
struct DigitSpace {
  const TableRing& base;
  std::size_t len;
  std::size_t order;
  std::vector<Elem> digits;  // order * len

  DigitSpace(const TableRing& b, std::size_t length, std::size_t ord) : base(b), len(length), order(ord) {
    digits.resize(order * len);
    for (std::size_t x = 0; x < order; ++x) {
      std::size_t v = x;
      for (std::size_t i = 0; i < len; ++i) {
        digits[x * len + i] = static_cast<Elem>(v % base.order());
        v /= base.order();
      }
    }
  }

  const Elem* at(std::size_t x) const { return &digits[x * len]; }

  Elem encode(const std::vector<Elem>& d) const {
    std::size_t x = 0;
    for (std::size_t i = len; i-- > 0;) x = x * base.order() + d[i];
    return static_cast<Elem>(x);
  }

  RawTables tables(const std::function<void(const Elem*, const Elem*, std::vector<Elem>&)>& mul_digits,
                   const std::vector<Elem>& one_digits) const {
    RawTables t;
    t.order = order;
    t.add.resize(order * order);
    t.mul.resize(order * order);
    std::vector<Elem> out(len);
    for (std::size_t a = 0; a < order; ++a) {
      const Elem* da = at(a);
      for (std::size_t b = 0; b < order; ++b) {
        const Elem* db = at(b);
        for (std::size_t i = 0; i < len; ++i) out[i] = base.add(da[i], db[i]);
        t.add[a * order + b] = encode(out);
        mul_digits(da, db, out);
        t.mul[a * order + b] = encode(out);
      }
    }
    std::vector<Elem> zero(len, base.zero());
    t.zero = encode(zero);
    t.one = encode(one_digits);
    return t;
  }
};

std::string matrix_label(const TableRing& base, std::size_t k, const Elem* entries, const std::vector<int>& position) {
  std::string s = "[";
  for (std::size_t i = 0; i < k; ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < k; ++j) {
      if (j) s += ",";
      int p = position[i * k + j];
      s += p < 0 ? base.label(base.zero()) : base.label(entries[p]);
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace

bool Endomorphism::is_identity() const {
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] != i) return false;
  }
  return true;
}

Endomorphism validate_endomorphism(RingPtr ring, std::vector<Elem> map) {
  const TableRing& r = *ring;
  auto fail = [](const std::string& why) { throw RingError(ErrorCode::InvalidEndomorphism, why); };
  if (map.size() != r.order()) fail("map has " + std::to_string(map.size()) + " entries, ring has order " + std::to_string(r.order()));
  for (Elem v : map) {
    if (v >= r.order()) fail("image " + std::to_string(v) + " out of range");
  }
  if (map[r.zero()] != r.zero()) fail("alpha(0) != 0");
  if (map[r.one()] != r.one()) fail("alpha(1) != 1");
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = 0; b < r.order(); ++b) {
      if (map[r.add(a, b)] != r.add(map[a], map[b])) {
        fail("not additive at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
      if (map[r.mul(a, b)] != r.mul(map[a], map[b])) {
        fail("not multiplicative at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  return Endomorphism{std::move(ring), std::move(map)};
}

Endomorphism identity_endomorphism(RingPtr ring) {
  std::vector<Elem> map(ring->order());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<Elem>(i);
  return Endomorphism{std::move(ring), std::move(map)};
}

Endomorphism frobenius(RingPtr field) {
  const Construction& c = field->construction();
  if (c.kind != ConstructionKind::Galois) {
    throw RingError(ErrorCode::InvalidEndomorphism, "frob is defined on gf(q) only");
  }
  std::size_t q = c.param;
  std::size_t p = 2;
  while (q % p) ++p;
  std::vector<Elem> map(field->order());
  for (Elem a = 0; a < field->order(); ++a) map[a] = field->pow(a, p);
  return validate_endomorphism(std::move(field), std::move(map));
}

Endomorphism read_endomorphism_file(RingPtr ring, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RingError(ErrorCode::Io, "cannot open endomorphism file " + path);
  std::string word;
  std::size_t n = 0;
  if (!(in >> word) || word != "order" || !(in >> n)) {
    throw RingError(ErrorCode::InvalidEndomorphism, path + ": expected 'order n'");
  }
  if (n != ring->order()) {
    throw RingError(ErrorCode::InvalidEndomorphism, path + ": order " + std::to_string(n) + " does not match ring order " + std::to_string(ring->order()));
  }
  std::vector<Elem> map(n);
  std::vector<bool> seen(n, false);
  for (std::size_t line = 0; line < n; ++line) {
    long long i, j;
    std::string arrow;
    if (!(in >> i >> arrow >> j) || arrow != "->" || i < 0 || j < 0 || static_cast<std::size_t>(i) >= n) {
      throw RingError(ErrorCode::InvalidEndomorphism, path + ": expected " + std::to_string(n) + " lines 'i -> j'");
    }
    map[static_cast<std::size_t>(i)] = static_cast<Elem>(j);
    seen[static_cast<std::size_t>(i)] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw RingError(ErrorCode::InvalidEndomorphism, path + ": some element has no image");
  }
  return validate_endomorphism(std::move(ring), std::move(map));
}

RingPtr build_zmod(std::size_t n, const Limits& limits) {
  if (n < 2) throw RingError(ErrorCode::RangeError, "z(n) needs n >= 2");
  require_cap(n, limits, "z(" + std::to_string(n) + ")");
  RawTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<Elem>((a + b) % n);
      t.mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  t.zero = 0;
  t.one = 1;
  Construction c;
  c.kind = ConstructionKind::Zmod;
  c.param = n;
  return validate_ring(std::move(t), {}, std::move(c));
}

RingPtr build_gf(std::size_t q, const Limits& limits) {
  struct FieldSpec {
    std::size_t p, m;
    std::vector<std::size_t> modulus;  // monic modulus x^m + sum modulus[i] x^i
  };
  static const std::map<std::size_t, FieldSpec> specs = {
      {2, {2, 1, {0}}}, {3, {3, 1, {0}}}, {5, {5, 1, {0}}}, {7, {7, 1, {0}}},
      {4, {2, 2, {1, 1}}}, {8, {2, 3, {1, 1, 0}}}, {9, {3, 2, {2, 2}}},
  };
  auto it = specs.find(q);
  if (it == specs.end()) throw RingError(ErrorCode::UnsupportedOrder, "gf(" + std::to_string(q) + ") is not supported");
  require_cap(q, limits, "gf(" + std::to_string(q) + ")");
  const FieldSpec& f = it->second;
  if (f.m == 1) {
    RingPtr prime = build_zmod(q, limits);
    RawTables t;
    t.order = q;
    t.zero = prime->zero();
    t.one = prime->one();
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) {
        t.add.push_back(prime->add(a, b));
        t.mul.push_back(prime->mul(a, b));
      }
    Construction c;
    c.kind = ConstructionKind::Galois;
    c.param = q;
    return validate_ring(std::move(t), {}, std::move(c));
  }

  auto to_digits = [&](std::size_t x) {
    std::vector<std::size_t> d(f.m);
    for (auto& v : d) {
      v = x % f.p;
      x /= f.p;
    }
    return d;
  };
  auto from_digits = [&](const std::vector<std::size_t>& d) {
    std::size_t x = 0;
    for (std::size_t i = f.m; i-- > 0;) x = x * f.p + d[i];
    return static_cast<Elem>(x);
  };
  RawTables t;
  t.order = q;
  t.add.resize(q * q);
  t.mul.resize(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      auto da = to_digits(a), db = to_digits(b);
      std::vector<std::size_t> sum(f.m);
      for (std::size_t i = 0; i < f.m; ++i) sum[i] = (da[i] + db[i]) % f.p;
      t.add[a * q + b] = from_digits(sum);
      std::vector<std::size_t> prod(2 * f.m - 1, 0);
      for (std::size_t i = 0; i < f.m; ++i)
        for (std::size_t j = 0; j < f.m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % f.p;
      // x^m = -sum modulus[i] x^i
      for (std::size_t deg = prod.size() - 1; deg >= f.m; --deg) {
        std::size_t lead = prod[deg];
        prod[deg] = 0;
        for (std::size_t i = 0; i < f.m; ++i) {
          std::size_t shift = deg - f.m + i;
          prod[shift] = (prod[shift] + (f.p - f.modulus[i]) * lead) % f.p;
        }
      }
      prod.resize(f.m);
      t.mul[a * q + b] = from_digits(prod);
    }
  t.zero = 0;
  t.one = 1;
  std::vector<std::string> labels(q);
  for (std::size_t x = 0; x < q; ++x) {
    auto d = to_digits(x);
    std::string s;
    for (std::size_t i = f.m; i-- > 0;) {
      if (!d[i]) continue;
      std::string term;
      if (i == 0) term = std::to_string(d[i]);
      else {
        term = d[i] == 1 ? "" : std::to_string(d[i]);
        term += i == 1 ? "a" : "a^" + std::to_string(i);
      }
      s += (s.empty() ? "" : "+") + term;
    }
    labels[x] = s.empty() ? "0" : s;
  }
  Construction c;
  c.kind = ConstructionKind::Galois;
  c.param = q;
  return validate_ring(std::move(t), std::move(labels), std::move(c));
}

RingPtr build_matrix(const RingPtr& base, std::size_t k, const Limits& limits) {
  if (k < 1) throw RingError(ErrorCode::RangeError, "matrix size must be >= 1");
  const TableRing& r = *base;
  std::size_t n = capped_power(r.order(), k * k, limits, "m(" + std::to_string(k) + ",R)");
  DigitSpace space(r, k * k, n);
  std::vector<Elem> one(k * k, r.zero());
  for (std::size_t i = 0; i < k; ++i) one[i * k + i] = r.one();
  auto mul = [&](const Elem* a, const Elem* b, std::vector<Elem>& out) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Elem acc = r.zero();
        for (std::size_t l = 0; l < k; ++l) acc = r.add(acc, r.mul(a[i * k + l], b[l * k + j]));
        out[i * k + j] = acc;
      }
  };
  RawTables t = space.tables(mul, one);
  std::vector<int> position(k * k);
  for (std::size_t i = 0; i < k * k; ++i) position[i] = static_cast<int>(i);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = matrix_label(r, k, space.at(x), position);
  Construction c;
  c.kind = ConstructionKind::Matrix;
  c.bases = {base};
  c.param = k;
  return validate_ring(std::move(t), std::move(labels), std::move(c));
}

RingPtr build_triangular(const RingPtr& base, std::size_t k, const Limits& limits) {
  if (k < 1) throw RingError(ErrorCode::RangeError, "triangular size must be >= 1");
  const TableRing& r = *base;
  const std::size_t stored = k * (k + 1) / 2;
  std::size_t n = capped_power(r.order(), stored, limits, "t(" + std::to_string(k) + ",R)");
  std::vector<int> position(k * k, -1);
  {
    int p = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) position[i * k + j] = p++;
  }
  DigitSpace space(r, stored, n);
  std::vector<Elem> one(stored, r.zero());
  for (std::size_t i = 0; i < k; ++i) one[static_cast<std::size_t>(position[i * k + i])] = r.one();
  auto mul = [&](const Elem* a, const Elem* b, std::vector<Elem>& out) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        Elem acc = r.zero();
        for (std::size_t l = i; l <= j; ++l) {
          acc = r.add(acc, r.mul(a[position[i * k + l]], b[position[l * k + j]]));
        }
        out[static_cast<std::size_t>(position[i * k + j])] = acc;
      }
  };
  RawTables t = space.tables(mul, one);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = matrix_label(r, k, space.at(x), position);
  Construction c;
  c.kind = ConstructionKind::Triangular;
  c.bases = {base};
  c.param = k;
  return validate_ring(std::move(t), std::move(labels), std::move(c));
}

RingPtr build_product(const std::vector<RingPtr>& factors, const Limits& limits) {
  if (factors.empty()) throw RingError(ErrorCode::RangeError, "product needs at least one factor");
  std::size_t cap = std::min(limits.max_order, kMaxSupportedOrder);
  std::size_t n = 1;
  for (const auto& f : factors) {
    if (n > cap / f->order()) throw RingError(ErrorCode::OutOfCap, "product would exceed the order cap " + std::to_string(cap));
    n *= f->order();
  }
  const std::size_t len = factors.size();
  std::vector<Elem> digits(n * len);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t v = x;
    for (std::size_t i = 0; i < len; ++i) {
      digits[x * len + i] = static_cast<Elem>(v % factors[i]->order());
      v /= factors[i]->order();
    }
  }
  auto encode = [&](const std::vector<Elem>& d) {
    std::size_t x = 0;
    for (std::size_t i = len; i-- > 0;) x = x * factors[i]->order() + d[i];
    return static_cast<Elem>(x);
  };
  RawTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  std::vector<Elem> s(len), p(len);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < len; ++i) {
        s[i] = factors[i]->add(digits[a * len + i], digits[b * len + i]);
        p[i] = factors[i]->mul(digits[a * len + i], digits[b * len + i]);
      }
      t.add[a * n + b] = encode(s);
      t.mul[a * n + b] = encode(p);
    }
  std::vector<Elem> zero(len), one(len);
  for (std::size_t i = 0; i < len; ++i) {
    zero[i] = factors[i]->zero();
    one[i] = factors[i]->one();
  }
  t.zero = encode(zero);
  t.one = encode(one);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::string l = "(";
    for (std::size_t i = 0; i < len; ++i) l += (i ? "," : "") + factors[i]->label(digits[x * len + i]);
    labels[x] = l + ")";
  }
  Construction c;
  c.kind = ConstructionKind::Product;
  c.bases = factors;
  return validate_ring(std::move(t), std::move(labels), std::move(c));
}

RingPtr build_trivial_extension(const RingPtr& base, const Limits& limits) {
  const TableRing& r = *base;
  std::size_t m = r.order();
  std::size_t n = capped_power(m, 2, limits, "triv(R)");
  RawTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Elem r1 = static_cast<Elem>(a / m), m1 = static_cast<Elem>(a % m);
      Elem r2 = static_cast<Elem>(b / m), m2 = static_cast<Elem>(b % m);
      t.add[a * n + b] = r.add(r1, r2) * static_cast<Elem>(m) + r.add(m1, m2);
      // (r, m)(s, n) = (rs, rn + ms)
      t.mul[a * n + b] = r.mul(r1, r2) * static_cast<Elem>(m) + r.add(r.mul(r1, m2), r.mul(m1, r2));
    }
  t.zero = r.zero() * static_cast<Elem>(m) + r.zero();
  t.one = r.one() * static_cast<Elem>(m) + r.zero();
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = "(" + r.label(static_cast<Elem>(x / m)) + "," + r.label(static_cast<Elem>(x % m)) + ")";
  Construction c;
  c.kind = ConstructionKind::TrivialExtension;
  c.bases = {base};
  return validate_ring(std::move(t), std::move(labels), std::move(c));
}

RingPtr build_group_ring(const RingPtr& base, const GroupPtr& group, const Limits& limits) {
  const TableRing& r = *base;
  const GroupTable& g = *group;
  std::size_t n = capped_power(r.order(), g.order, limits, "group ring");
  DigitSpace space(r, g.order, n);
  std::vector<Elem> one(g.order, r.zero());
  one[g.identity] = r.one();
  auto mul = [&](const Elem* a, const Elem* b, std::vector<Elem>& out) {
    std::fill(out.begin(), out.end(), r.zero());
    for (Elem x = 0; x < g.order; ++x) {
      if (a[x] == r.zero()) continue;
      for (Elem y = 0; y < g.order; ++y) {
        if (b[y] == r.zero()) continue;
        Elem xy = g.mul(x, y);
        out[xy] = r.add(out[xy], r.mul(a[x], b[y]));
      }
    }
  };
  RawTables t = space.tables(mul, one);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem* d = space.at(x);
    std::string s;
    for (Elem h = 0; h < g.order; ++h) {
      if (d[h] == r.zero()) continue;
      std::string term;
      if (h == g.identity) term = r.label(d[h]);
      else if (d[h] == r.one()) term = g.names[h];
      else term = coeff(r.label(d[h])) + g.names[h];
      s += (s.empty() ? "" : "+") + term;
    }
    labels[x] = s.empty() ? "0" : s;
  }
  Construction c;
  c.kind = ConstructionKind::GroupRing;
  c.bases = {base};
  c.group = group;
  return validate_ring(std::move(t), std::move(labels), std::move(c));
}

RingPtr build_truncated_skew_poly(const RingPtr& base, const Endomorphism& alpha, std::size_t k, const Limits& limits) {
  if (k < 1) throw RingError(ErrorCode::RangeError, "truncation degree must be >= 1");
  const TableRing& r = *base;
  if (alpha.ring.get() != base.get() && !(alpha.ring && alpha.ring->same_tables(r))) {
    throw RingError(ErrorCode::InvalidEndomorphism, "endomorphism belongs to a different ring");
  }
  std::size_t n = capped_power(r.order(), k, limits, "skew(R,alpha," + std::to_string(k) + ")");
  // alpha_pow[i][b] = alpha^i(b)
  std::vector<std::vector<Elem>> alpha_pow(k, std::vector<Elem>(r.order()));
  for (Elem b = 0; b < r.order(); ++b) alpha_pow[0][b] = b;
  for (std::size_t i = 1; i < k; ++i)
    for (Elem b = 0; b < r.order(); ++b) alpha_pow[i][b] = alpha.map[alpha_pow[i - 1][b]];
  DigitSpace space(r, k, n);
  std::vector<Elem> one(k, r.zero());
  one[0] = r.one();
  auto mul = [&](const Elem* a, const Elem* b, std::vector<Elem>& out) {
    std::fill(out.begin(), out.end(), r.zero());
    // (a_i x^i)(b_j x^j) = a_i alpha^i(b_j) x^(i+j)
    for (std::size_t i = 0; i < k; ++i) {
      if (a[i] == r.zero()) continue;
      for (std::size_t j = 0; i + j < k; ++j) {
        out[i + j] = r.add(out[i + j], r.mul(a[i], alpha_pow[i][b[j]]));
      }
    }
  };
  RawTables t = space.tables(mul, one);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem* d = space.at(x);
    std::string s;
    for (std::size_t i = 0; i < k; ++i) {
      if (d[i] == r.zero()) continue;
      std::string mono = i == 1 ? "x" : "x^" + std::to_string(i);
      std::string term;
      if (i == 0) term = r.label(d[i]);
      else if (d[i] == r.one()) term = mono;
      else term = coeff(r.label(d[i])) + mono;
      s += (s.empty() ? "" : "+") + term;
    }
    labels[x] = s.empty() ? "0" : s;
  }
  Construction c;
  c.kind = ConstructionKind::SkewPoly;
  c.bases = {base};
  c.param = k;
  c.map = alpha.map;
  c.alpha_is_identity = alpha.is_identity();
  return validate_ring(std::move(t), std::move(labels), std::move(c));
}

ElemSet ideal_closure(const TableRing& r, const ElemSet& gens, Side side) {
  const std::size_t n = r.order();
  ElemSet in(n);
  std::vector<Elem> members;
  std::vector<Elem> work;
  auto push = [&](Elem x) {
    if (!in.contains(x)) {
      in.insert(x);
      members.push_back(x);
      work.push_back(x);
    }
  };
  push(r.zero());
  gens.for_each(push);
  while (!work.empty()) {
    Elem x = work.back();
    work.pop_back();
    for (Elem s = 0; s < n; ++s) {
      if (side != Side::Right) push(r.mul(s, x));
      if (side != Side::Left) push(r.mul(x, s));
    }
    // Members may grow during this loop; new ones are queued and revisit x.
    for (std::size_t i = 0; i < members.size(); ++i) push(r.add(x, members[i]));
  }
  return in;
}

std::optional<IdealViolation> ideal_violation(const TableRing& r, const ElemSet& s, Side side) {
  if (s.universe() != r.order()) return IdealViolation{0, 0, "set belongs to a different ring"};
  if (!s.contains(r.zero())) return IdealViolation{r.zero(), r.zero(), "does not contain 0"};
  auto members = s.elements();
  for (Elem a : members) {
    if (!s.contains(r.neg(a))) return IdealViolation{a, a, "not closed under negation"};
    for (Elem b : members) {
      if (!s.contains(r.add(a, b))) return IdealViolation{a, b, "not closed under addition"};
    }
    for (Elem x = 0; x < r.order(); ++x) {
      if (side != Side::Right && !s.contains(r.mul(x, a))) return IdealViolation{x, a, "not closed under left multiplication"};
      if (side != Side::Left && !s.contains(r.mul(a, x))) return IdealViolation{a, x, "not closed under right multiplication"};
    }
  }
  return std::nullopt;
}

RingPtr build_quotient(const RingPtr& base, const ElemSet& ideal) {
  const TableRing& r = *base;
  if (auto v = ideal_violation(r, ideal, Side::TwoSided)) {
    throw RingError(ErrorCode::NotAnIdeal, v->reason + " at (" + r.label(v->a) + ", " + r.label(v->b) + ")");
  }
  if (ideal.contains(r.one())) throw RingError(ErrorCode::ImproperIdeal, "ideal contains 1");
  const std::size_t n = r.order();
  auto members = ideal.elements();
  std::vector<Elem> rep(n);
  for (Elem x = 0; x < n; ++x) {
    Elem best = x;
    for (Elem i : members) best = std::min(best, r.add(x, i));
    rep[x] = best;
  }
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (rep[x] == x) reps.push_back(x);
  }
  std::vector<Elem> rank(n, 0);
  for (std::size_t i = 0; i < reps.size(); ++i) rank[reps[i]] = static_cast<Elem>(i);
  std::vector<Elem> projection(n);
  for (Elem x = 0; x < n; ++x) projection[x] = rank[rep[x]];
  const std::size_t m = reps.size();
  RawTables t;
  t.order = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      t.add[a * m + b] = projection[r.add(reps[a], reps[b])];
      t.mul[a * m + b] = projection[r.mul(reps[a], reps[b])];
    }
  t.zero = projection[r.zero()];
  t.one = projection[r.one()];
  std::vector<std::string> labels(m);
  for (std::size_t a = 0; a < m; ++a) labels[a] = "[" + r.label(reps[a]) + "]";
  Construction c;
  c.kind = ConstructionKind::Quotient;
  c.bases = {base};
  c.map = std::move(projection);
  return validate_ring(std::move(t), std::move(labels), std::move(c));
}

namespace {

RingPtr restrict_to(const RingPtr& base, const std::vector<Elem>& members, Elem one, ConstructionKind kind) {
  const TableRing& r = *base;
  std::vector<Elem> local(r.order(), UINT32_MAX);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Elem>(i);
  const std::size_t m = members.size();
  RawTables t;
  t.order = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Elem s = local[r.add(members[a], members[b])];
      Elem p = local[r.mul(members[a], members[b])];
      if (s == UINT32_MAX || p == UINT32_MAX) {
        throw RingError(ErrorCode::NotAnIdeal, "subset is not closed under the ring operations");
      }
      t.add[a * m + b] = s;
      t.mul[a * m + b] = p;
    }
  if (local[r.zero()] == UINT32_MAX || local[one] == UINT32_MAX) {
    throw RingError(ErrorCode::NotAnIdeal, "subset does not contain the required identities");
  }
  t.zero = local[r.zero()];
  t.one = local[one];
  std::vector<std::string> labels(m);
  for (std::size_t a = 0; a < m; ++a) labels[a] = r.label(members[a]);
  Construction c;
  c.kind = kind;
  c.bases = {base};
  c.map = members;
  return validate_ring(std::move(t), std::move(labels), std::move(c));
}

}  // namespace

RingPtr build_corner(const RingPtr& base, Elem e) {
  const TableRing& r = *base;
  r.checked(e);
  if (r.mul(e, e) != e) throw RingError(ErrorCode::NotIdempotent, r.label(e) + " is not idempotent");
  if (e == r.zero()) throw RingError(ErrorCode::ZeroCorner, "corner at 0 is the zero ring");
  ElemSet corner(r.order());
  for (Elem x = 0; x < r.order(); ++x) corner.insert(r.mul(r.mul(e, x), e));
  return restrict_to(base, corner.elements(), e, ConstructionKind::Corner);
}

RingPtr build_subring(const RingPtr& base, const ElemSet& members) {
  return restrict_to(base, members.elements(), base->one(), ConstructionKind::Subring);
}

std::optional<CompatibilityWitness> check_alpha_compatible(const TableRing& r, const Endomorphism& alpha) {
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = 0; b < r.order(); ++b) {
      bool plain = r.mul(a, b) == r.zero();
      bool twisted = r.mul(a, alpha.map[b]) == r.zero();
      if (plain != twisted) return CompatibilityWitness{a, b};
    }
  return std::nullopt;
}

Elem matrix_index(const TableRing& base, std::size_t k, const std::vector<Elem>& entries) {
  std::size_t x = 0;
  for (std::size_t i = k * k; i-- > 0;) x = x * base.order() + entries.at(i);
  return static_cast<Elem>(x);
}

Elem matrix_unit(const TableRing& base, std::size_t k, std::size_t i, std::size_t j) {
  std::vector<Elem> entries(k * k, base.zero());
  entries.at(i * k + j) = base.one();
  return matrix_index(base, k, entries);
}

namespace {

const Construction& group_ring_meta(const TableRing& rg) {
  const Construction& c = rg.construction();
  if (c.kind != ConstructionKind::GroupRing) throw RingError(ErrorCode::NotAGroupRing, "ring was not built as a group ring");
  return c;
}

Elem group_ring_digits(const TableRing& rg, const std::vector<Elem>& d) {
  const TableRing& r = *group_ring_meta(rg).bases[0];
  std::size_t x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * r.order() + d[i];
  return static_cast<Elem>(x);
}

}  // namespace

Elem group_ring_scalar(const TableRing& rg, Elem a) {
  const Construction& c = group_ring_meta(rg);
  std::vector<Elem> d(c.group->order, c.bases[0]->zero());
  d[c.group->identity] = a;
  return group_ring_digits(rg, d);
}

Elem group_ring_basis(const TableRing& rg, Elem g) {
  const Construction& c = group_ring_meta(rg);
  std::vector<Elem> d(c.group->order, c.bases[0]->zero());
  d.at(g) = c.bases[0]->one();
  return group_ring_digits(rg, d);
}

}  // namespace ringlab
