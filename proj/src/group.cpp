#include "ringlab/group.hpp"

#include "ringlab/error.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace ringlab {

namespace {

std::size_t smallest_prime_factor(std::size_t n) {
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return p;
  }
  return n;
}

[[noreturn]] void invalid_group(const std::string& why) { throw RingError(ErrorCode::InvalidGroup, why); }

}  // namespace

bool GroupTable::is_2group() const { return prime_base() == 2 || order == 1; }

std::size_t GroupTable::prime_base() const {
  if (order == 1) return 1;
  std::size_t p = smallest_prime_factor(order);
  std::size_t m = order;
  while (m % p == 0) m /= p;
  return m == 1 ? p : 0;
}

bool GroupTable::is_p_group(std::size_t p) const {
  std::size_t b = prime_base();
  return b == 1 || b == p;
}

GroupPtr validate_group(std::size_t n, std::vector<Elem> op, Elem identity, std::vector<std::string> names) {
  if (n == 0 || op.size() != n * n || identity >= n) invalid_group("table must be square with a valid identity index");
  if (n > kMaxGroupOrder) {
    throw RingError(ErrorCode::OutOfCap, "group order " + std::to_string(n) + " exceeds " + std::to_string(kMaxGroupOrder));
  }
  for (Elem v : op) {
    if (v >= n) invalid_group("table entry out of range");
  }
  auto g = std::make_shared<GroupTable>();
  g->order = n;
  g->op = std::move(op);
  g->identity = identity;
  for (Elem a = 0; a < n; ++a) {
    if (g->mul(identity, a) != a || g->mul(a, identity) != a) {
      invalid_group("identity fails at element " + std::to_string(a));
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c))) {
          invalid_group("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
  g->inverse.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b) {
      if (g->mul(a, b) == identity && g->mul(b, a) == identity) {
        g->inverse[a] = b;
        found = true;
      }
    }
    if (!found) invalid_group("element " + std::to_string(a) + " has no inverse");
  }
  g->element_order.assign(n, 1);
  g->exponent = 1;
  for (Elem a = 0; a < n; ++a) {
    std::size_t k = 1;
    for (Elem x = a; x != identity; x = g->mul(x, a)) ++k;
    g->element_order[a] = k;
    g->exponent = std::lcm(g->exponent, k);
  }
  if (names.size() != n) {
    names.resize(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = i == identity ? "1" : "g" + std::to_string(i);
  }
  g->names = std::move(names);
  return g;
}

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) throw RingError(ErrorCode::UnsupportedGroup, "C(0)");
  if (n > kMaxGroupOrder) throw RingError(ErrorCode::OutOfCap, "C(" + std::to_string(n) + ") too large");
  std::vector<Elem> op(n * n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) op[i * n + j] = static_cast<Elem>((i + j) % n);
  }
  return validate_group(n, std::move(op), 0, std::move(names));
}

GroupPtr dihedral_group(std::size_t n) {
  if (n == 0) throw RingError(ErrorCode::UnsupportedGroup, "D(0)");
  if (2 * n > kMaxGroupOrder) throw RingError(ErrorCode::OutOfCap, "D(" + std::to_string(n) + ") too large");
  const std::size_t order = 2 * n;
  std::vector<Elem> op(order * order);
  std::vector<std::string> names(order);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      std::string r = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
      std::string s = j ? "s" : "";
      names[i + n * j] = (r + s).empty() ? "1" : r + s;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          // r^i s^j r^k s^l = r^(i +- k) s^(j+l)
          std::size_t rot = j ? (i + n - k) % n : (i + k) % n;
          op[(i + n * j) * order + (k + n * l)] = static_cast<Elem>(rot + n * ((j + l) % 2));
        }
    }
  return validate_group(order, std::move(op), 0, std::move(names));
}

GroupPtr quaternion_group() {
  // basis[a][b] = (sign, basis index) of e_a * e_b for e = 1, i, j, k.
  static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<Elem> op(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int s = (a >= 4 ? -1 : 1) * (b >= 4 ? -1 : 1) * sign[a % 4][b % 4];
      int base = prod[a % 4][b % 4];
      op[static_cast<std::size_t>(a * 8 + b)] = static_cast<Elem>(base + (s < 0 ? 4 : 0));
    }
  return validate_group(8, std::move(op), 0, {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

namespace {

std::string cycle_notation(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == static_cast<int>(start)) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x + 1);
      first = false;
      x = static_cast<std::size_t>(perm[x]);
    }
    out += ")";
  }
  return out.empty() ? "1" : out;
}

}  // namespace

GroupPtr symmetric_group(std::size_t n) {
  if (n == 0 || n > 4) throw RingError(ErrorCode::UnsupportedGroup, "S(n) supports 1 <= n <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<Elem> op(order * order);
  std::vector<std::string> names(order);
  for (std::size_t a = 0; a < order; ++a) {
    names[a] = cycle_notation(perms[a]);
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][static_cast<std::size_t>(perms[b][x])];
      op[a * order + b] = index_of(c);
    }
  }
  return validate_group(order, std::move(op), 0, std::move(names));
}

GroupPtr direct_product(const std::vector<GroupPtr>& factors) {
  if (factors.empty()) throw RingError(ErrorCode::UnsupportedGroup, "empty direct product");
  if (factors.size() == 1) return factors.front();
  std::size_t order = 1;
  for (const auto& f : factors) {
    order *= f->order;
    if (order > kMaxGroupOrder) throw RingError(ErrorCode::OutOfCap, "direct product order exceeds " + std::to_string(kMaxGroupOrder));
  }
  auto digits = [&](std::size_t x) {
    std::vector<Elem> d;
    for (const auto& f : factors) {
      d.push_back(static_cast<Elem>(x % f->order));
      x /= f->order;
    }
    return d;
  };
  auto compose = [&](const std::vector<Elem>& d) {
    std::size_t x = 0;
    for (std::size_t i = factors.size(); i-- > 0;) x = x * factors[i]->order + d[i];
    return static_cast<Elem>(x);
  };
  std::vector<Elem> op(order * order);
  std::vector<std::string> names(order);
  std::vector<Elem> ident;
  for (const auto& f : factors) ident.push_back(f->identity);
  for (std::size_t a = 0; a < order; ++a) {
    auto da = digits(a);
    std::string name = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) name += (i ? "," : "") + factors[i]->names[da[i]];
    names[a] = name + ")";
    for (std::size_t b = 0; b < order; ++b) {
      auto db = digits(b);
      std::vector<Elem> dc(factors.size());
      for (std::size_t i = 0; i < factors.size(); ++i) dc[i] = factors[i]->mul(da[i], db[i]);
      op[a * order + b] = compose(dc);
    }
  }
  return validate_group(order, std::move(op), compose(ident), std::move(names));
}

GroupPtr read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RingError(ErrorCode::Io, "cannot open group file " + path);
  std::string word;
  std::size_t n = 0;
  Elem identity = 0;
  if (!(in >> word) || word != "order" || !(in >> n)) invalid_group(path + ": expected 'order n' on line 1");
  if (!(in >> word) || word != "identity" || !(in >> identity)) invalid_group(path + ": expected 'identity i' on line 2");
  if (n == 0 || n > kMaxGroupOrder) throw RingError(ErrorCode::OutOfCap, path + ": unsupported group order");
  std::vector<Elem> op(n * n);
  for (auto& v : op) {
    long long x;
    if (!(in >> x) || x < 0) invalid_group(path + ": expected " + std::to_string(n * n) + " nonnegative indices");
    v = static_cast<Elem>(x);
  }
  return validate_group(n, std::move(op), identity);
}

}  // namespace ringlab
