#include "ringlab/table_ring.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

namespace ringlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidRing: return "InvalidRing";
    case ErrorCode::OutOfCap: return "OutOfCap";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::ImproperIdeal: return "ImproperIdeal";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::ZeroCorner: return "ZeroCorner";
    case ErrorCode::InvalidEndomorphism: return "InvalidEndomorphism";
    case ErrorCode::NotAGroupRing: return "NotAGroupRing";
    case ErrorCode::BadElementRef: return "BadElementRef";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::Io: return "IoError";
  }
  return "Error";
}

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : RingError(ErrorCode::SyntaxError, "at offset " + std::to_string(offset) + ": expected one of {" +
                                            join_expected(expected) + "} but found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

std::string to_string(const AxiomViolation& v) {
  std::ostringstream os;
  switch (v.axiom) {
    case Axiom::TableShape: os << "TableShape"; break;
    case Axiom::NotAbelianGroup: os << "NotAbelianGroup(" << v.a << "," << v.b << ")"; break;
    case Axiom::NoIdentity: os << "NoIdentity(" << v.a << ")"; break;
    case Axiom::NonAssociative: os << "NonAssociative(" << v.a << "," << v.b << "," << v.c << ")"; break;
    case Axiom::NonDistributive: os << "NonDistributive(" << v.a << "," << v.b << "," << v.c << ")"; break;
    case Axiom::ZeroRing: os << "ZeroRing"; break;
  }
  if (!v.detail.empty()) os << ": " << v.detail;
  return os.str();
}

namespace {

std::string describe_all(const std::vector<AxiomViolation>& vs) {
  std::string out;
  for (const auto& v : vs) {
    if (!out.empty()) out += "; ";
    out += to_string(v);
  }
  return out;
}

}  // namespace

InvalidRing::InvalidRing(std::vector<AxiomViolation> violations)
    : RingError(ErrorCode::InvalidRing, describe_all(violations)), violations_(std::move(violations)) {}

bool InvalidRing::has(Axiom a) const {
  return std::any_of(violations_.begin(), violations_.end(), [a](const AxiomViolation& v) { return v.axiom == a; });
}

std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

namespace {

// Little-endian byte stream so the checksum does not depend on host order.
std::uint64_t table_checksum(const std::vector<std::uint16_t>& t) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint16_t v : t) {
    std::array<unsigned char, 2> bytes{static_cast<unsigned char>(v & 0xff), static_cast<unsigned char>(v >> 8)};
    h = fnv1a64(bytes.data(), bytes.size(), h);
  }
  return h;
}

}  // namespace

std::uint64_t TableRing::add_checksum() const { return table_checksum(add_); }
std::uint64_t TableRing::mul_checksum() const { return table_checksum(mul_); }

bool TableRing::same_tables(const TableRing& other) const {
  return order_ == other.order_ && zero_ == other.zero_ && one_ == other.one_ && add_ == other.add_ &&
         mul_ == other.mul_;
}

Elem TableRing::checked(std::size_t a) const {
  if (a >= order_) {
    throw RingError(ErrorCode::IndexOutOfRange,
                    "element " + std::to_string(a) + " not below ring order " + std::to_string(order_));
  }
  return static_cast<Elem>(a);
}

Elem TableRing::pow(Elem a, std::uint64_t k) const {
  Elem result = one_;
  Elem base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

PowerOrbit TableRing::power_orbit(Elem a) const {
  PowerOrbit orbit;
  std::vector<std::uint32_t> seen_at(order_, UINT32_MAX);
  Elem x = a;
  while (seen_at[x] == UINT32_MAX) {
    seen_at[x] = static_cast<std::uint32_t>(orbit.powers.size());
    orbit.powers.push_back(x);
    x = mul(x, a);
  }
  orbit.cycle_start = seen_at[x];
  return orbit;
}

Elem TableRing::integer(long long m) const {
  Elem acc = zero_;
  Elem step = m >= 0 ? one_ : neg(one_);
  unsigned long long count = m >= 0 ? static_cast<unsigned long long>(m) : static_cast<unsigned long long>(-m);
  // Additive order divides |R|, so reduce the count first.
  count %= order_;
  for (unsigned long long i = 0; i < count; ++i) acc = add(acc, step);
  return acc;
}

namespace {

struct Checker {
  const RawTables& t;
  std::size_t n;

  Elem add(Elem a, Elem b) const { return t.add[static_cast<std::size_t>(a) * n + b]; }
  Elem mul(Elem a, Elem b) const { return t.mul[static_cast<std::size_t>(a) * n + b]; }
};

}  // namespace

RingPtr validate_ring(RawTables t, std::vector<std::string> labels, Construction construction) {
  const std::size_t n = t.order;
  if (n == 0 || t.add.size() != n * n || t.mul.size() != n * n || t.zero >= n || t.one >= n) {
    throw InvalidRing({{Axiom::TableShape, 0, 0, 0, "tables must be square of the declared order"}});
  }
  if (n > kMaxSupportedOrder) {
    throw RingError(ErrorCode::OutOfCap, "order " + std::to_string(n) + " exceeds storage limit");
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (t.add[i] >= n || t.mul[i] >= n) {
      throw InvalidRing({{Axiom::TableShape, static_cast<Elem>(i / n), static_cast<Elem>(i % n), 0,
                          "table entry out of range"}});
    }
  }
  if (n < 2 || t.zero == t.one) {
    throw InvalidRing({{Axiom::ZeroRing, 0, 0, 0, "1 = 0"}});
  }

  Checker c{t, n};
  std::vector<AxiomViolation> found;
  auto report = [&](Axiom ax, Elem a, Elem b, Elem cc, std::string detail) {
    for (const auto& v : found) {
      if (v.axiom == ax) return;
    }
    found.push_back({ax, a, b, cc, std::move(detail)});
  };

  std::vector<std::uint16_t> neg(n, 0);
  for (Elem a = 0; a < n; ++a) {
    if (c.add(t.zero, a) != a || c.add(a, t.zero) != a) report(Axiom::NoIdentity, a, 0, 0, "zero is not additive identity");
    if (c.mul(t.one, a) != a || c.mul(a, t.one) != a) report(Axiom::NoIdentity, a, 0, 0, "one is not multiplicative identity");
    bool has_inverse = false;
    for (Elem b = 0; b < n; ++b) {
      if (c.add(a, b) != c.add(b, a)) report(Axiom::NotAbelianGroup, a, b, 0, "addition not commutative");
      if (!has_inverse && c.add(a, b) == t.zero) {
        neg[a] = static_cast<std::uint16_t>(b);
        has_inverse = true;
      }
    }
    if (!has_inverse) report(Axiom::NotAbelianGroup, a, a, 0, "no additive inverse");
  }

  auto check_triple = [&](Elem a, Elem b, Elem cc) {
    if (c.add(c.add(a, b), cc) != c.add(a, c.add(b, cc))) report(Axiom::NotAbelianGroup, a, b, cc, "addition not associative");
    if (c.mul(c.mul(a, b), cc) != c.mul(a, c.mul(b, cc))) report(Axiom::NonAssociative, a, b, cc, "");
    if (c.mul(a, c.add(b, cc)) != c.add(c.mul(a, b), c.mul(a, cc))) report(Axiom::NonDistributive, a, b, cc, "left");
    if (c.mul(c.add(b, cc), a) != c.add(c.mul(b, a), c.mul(cc, a))) report(Axiom::NonDistributive, a, b, cc, "right");
  };

  bool sampled = false;
  if (n <= kExhaustiveValidationLimit) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem cc = 0; cc < n; ++cc) check_triple(a, b, cc);
  } else {
    sampled = true;
    std::mt19937_64 rng(0x5eed'0f'babeULL);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    constexpr int kSamples = 100000;
    for (int i = 0; i < kSamples; ++i) {
      Elem a = pick(rng), b = pick(rng), cc = pick(rng);
      check_triple(a, b, cc);
    }
  }

  if (!found.empty()) throw InvalidRing(std::move(found));

  auto ring = std::make_shared<TableRing>();
  ring->order_ = n;
  ring->zero_ = t.zero;
  ring->one_ = t.one;
  ring->add_.assign(t.add.begin(), t.add.end());
  ring->mul_.assign(t.mul.begin(), t.mul.end());
  ring->neg_ = std::move(neg);
  if (labels.size() != n) {
    labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  }
  ring->labels_ = std::move(labels);
  ring->construction_ = std::move(construction);
  ring->sampled_ = sampled;
  return ring;
}

Elem elem_add(const TableRing& r, Elem a, Elem b) { return r.add(r.checked(a), r.checked(b)); }
Elem elem_mul(const TableRing& r, Elem a, Elem b) { return r.mul(r.checked(a), r.checked(b)); }
Elem elem_neg(const TableRing& r, Elem a) { return r.neg(r.checked(a)); }
Elem elem_sub(const TableRing& r, Elem a, Elem b) { return r.sub(r.checked(a), r.checked(b)); }
Elem elem_pow(const TableRing& r, Elem a, std::uint64_t k) { return r.pow(r.checked(a), k); }

}  // namespace ringlab
