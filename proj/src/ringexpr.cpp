#include "ringlab/ringexpr.hpp"

#include <algorithm>
#include <cctype>

namespace ringlab {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {
    if (text.size() > kMaxExprLength) {
      throw RangeError(kMaxExprLength, "expression longer than " + std::to_string(kMaxExprLength) + " characters");
    }
  }

  RingExpr ring() {
    skip_ws();
    std::size_t at = pos_;
    std::string kw = word();
    RingExpr e;
    if (kw == "z") {
      e.kind = RingKind::Zmod;
      expect("(");
      e.n = integer_at_least(2, "z(n) needs n >= 2");
      expect(")");
    } else if (kw == "gf") {
      e.kind = RingKind::Galois;
      expect("(");
      std::size_t q_at = peek_offset();
      e.n = integer();
      static constexpr std::size_t supported[] = {2, 3, 4, 5, 7, 8, 9};
      if (std::find(std::begin(supported), std::end(supported), e.n) == std::end(supported)) {
        throw RangeError(q_at, "gf(q) supports q in {2,3,4,5,7,8,9}");
      }
      expect(")");
    } else if (kw == "m" || kw == "t") {
      e.kind = kw == "m" ? RingKind::Matrix : RingKind::Triangular;
      expect("(");
      e.n = integer_at_least(1, kw + "(k, R) needs k >= 1");
      expect(",");
      e.children.push_back(ring());
      expect(")");
    } else if (kw == "prod") {
      e.kind = RingKind::Product;
      expect("(");
      e.children.push_back(ring());
      while (accept(",")) e.children.push_back(ring());
      expect(")");
    } else if (kw == "quot") {
      e.kind = RingKind::Quotient;
      expect("(");
      e.children.push_back(ring());
      expect(",");
      expect("[");
      e.indices.push_back(integer());
      while (accept(",")) e.indices.push_back(integer());
      expect("]");
      expect(")");
    } else if (kw == "corner") {
      e.kind = RingKind::Corner;
      expect("(");
      e.children.push_back(ring());
      expect(",");
      e.n = integer();
      expect(")");
    } else if (kw == "triv") {
      e.kind = RingKind::Trivial;
      expect("(");
      e.children.push_back(ring());
      expect(")");
    } else if (kw == "group") {
      e.kind = RingKind::GroupRing;
      expect("(");
      e.children.push_back(ring());
      expect(",");
      e.group = group();
      expect(")");
    } else if (kw == "poly") {
      e.kind = RingKind::Poly;
      expect("(");
      e.children.push_back(ring());
      expect(",");
      e.n = integer_at_least(1, "poly(R, k) needs k >= 1");
      expect(")");
    } else if (kw == "skew") {
      e.kind = RingKind::Skew;
      expect("(");
      e.children.push_back(ring());
      expect(",");
      e.endo = endo();
      expect(",");
      e.n = integer_at_least(1, "skew(R, alpha, k) needs k >= 1");
      expect(")");
    } else {
      fail_at(at, {"z", "gf", "m", "t", "prod", "quot", "corner", "triv", "group", "poly", "skew"});
    }
    return e;
  }

  GroupExpr group() {
    GroupExpr first = group_atom();
    skip_ws();
    if (pos_ >= text_.size() || std::tolower(static_cast<unsigned char>(text_[pos_])) != 'x') return first;
    GroupExpr prod;
    prod.kind = GroupKind::Product;
    prod.factors.push_back(std::move(first));
    while (true) {
      skip_ws();
      if (pos_ >= text_.size() || std::tolower(static_cast<unsigned char>(text_[pos_])) != 'x') break;
      ++pos_;
      prod.factors.push_back(group_atom());
    }
    return prod;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail_at(pos_, {"end of input"});
  }

 private:
  GroupExpr group_atom() {
    skip_ws();
    std::size_t at = pos_;
    GroupExpr g;
    if (accept("@")) {
      g.kind = GroupKind::File;
      g.file = file_name();
      return g;
    }
    std::string kw = group_keyword();
    if (kw == "c") {
      g.kind = GroupKind::Cyclic;
      expect("(");
      g.n = integer_at_least(1, "c(n) needs n >= 1");
      expect(")");
    } else if (kw == "d") {
      g.kind = GroupKind::Dihedral;
      expect("(");
      g.n = integer_at_least(1, "d(n) needs n >= 1");
      expect(")");
    } else if (kw == "q8") {
      g.kind = GroupKind::Quaternion;
    } else if (kw == "s") {
      g.kind = GroupKind::Symmetric;
      expect("(");
      std::size_t n_at = peek_offset();
      g.n = integer();
      if (g.n < 1 || g.n > 4) throw RangeError(n_at, "s(n) needs 1 <= n <= 4");
      expect(")");
    } else {
      fail_at(at, {"c", "d", "q8", "s", "@"});
    }
    return g;
  }

  EndoExpr endo() {
    skip_ws();
    std::size_t at = pos_;
    EndoExpr e;
    if (accept("@")) {
      e.kind = EndoKind::File;
      e.file = file_name();
      return e;
    }
    std::string kw = word();
    if (kw == "id") e.kind = EndoKind::Identity;
    else if (kw == "frob") e.kind = EndoKind::Frobenius;
    else fail_at(at, {"id", "frob", "@"});
    return e;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::size_t peek_offset() {
    skip_ws();
    return pos_;
  }

  std::string found_at(std::size_t at) const {
    if (at >= text_.size()) return "end of input";
    return "'" + std::string(1, text_[at]) + "'";
  }

  [[noreturn]] void fail_at(std::size_t at, std::vector<std::string> expected) const {
    throw SyntaxError(std::min(at, text_.size()), std::move(expected), found_at(at));
  }

  // Lowercased alphanumeric run.
  std::string word() {
    skip_ws();
    std::string w;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      w += static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_])));
      ++pos_;
    }
    return w;
  }

  // Group atoms are "q8" or a single letter; a greedy word would swallow the
  // product sign in "q8xc(2)".
  std::string group_keyword() {
    skip_ws();
    auto lower = [&](std::size_t i) {
      return i < text_.size() ? static_cast<char>(std::tolower(static_cast<unsigned char>(text_[i]))) : '\0';
    };
    if (lower(pos_) == 'q' && lower(pos_ + 1) == '8') {
      pos_ += 2;
      return "q8";
    }
    if (!std::isalpha(static_cast<unsigned char>(lower(pos_)))) return {};
    return std::string(1, lower(pos_++));
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail_at(pos_, {"'" + std::string(tok) + "'"});
  }

  std::size_t integer() {
    skip_ws();
    std::size_t at = pos_;
    std::size_t v = 0;
    std::size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (++digits > 9) throw RangeError(at, "integer literal too large");
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (!digits) fail_at(at, {"INT"});
    return v;
  }

  std::size_t integer_at_least(std::size_t lo, const std::string& why) {
    std::size_t at = peek_offset();
    std::size_t v = integer();
    if (v < lo) throw RangeError(at, why);
    return v;
  }

  std::string file_name() {
    std::size_t at = pos_;
    std::string f;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ',' || c == ')' || std::isspace(static_cast<unsigned char>(c))) break;
      f += c;
      ++pos_;
    }
    if (f.empty()) fail_at(at, {"FILE"});
    return f;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_group(const GroupExpr& g, std::string& out) {
  switch (g.kind) {
    case GroupKind::Cyclic: out += "c(" + std::to_string(g.n) + ")"; break;
    case GroupKind::Dihedral: out += "d(" + std::to_string(g.n) + ")"; break;
    case GroupKind::Quaternion: out += "q8"; break;
    case GroupKind::Symmetric: out += "s(" + std::to_string(g.n) + ")"; break;
    case GroupKind::File: out += "@" + g.file; break;
    case GroupKind::Product:
      for (std::size_t i = 0; i < g.factors.size(); ++i) {
        if (i) out += g.factors[i - 1].kind == GroupKind::File ? " x" : "x";
        print_group(g.factors[i], out);
      }
      break;
  }
}

void print_ring(const RingExpr& e, std::string& out) {
  auto child = [&](std::size_t i) { print_ring(e.children.at(i), out); };
  switch (e.kind) {
    case RingKind::Zmod: out += "z(" + std::to_string(e.n) + ")"; break;
    case RingKind::Galois: out += "gf(" + std::to_string(e.n) + ")"; break;
    case RingKind::Matrix:
    case RingKind::Triangular:
      out += (e.kind == RingKind::Matrix ? "m(" : "t(") + std::to_string(e.n) + ",";
      child(0);
      out += ")";
      break;
    case RingKind::Product:
      out += "prod(";
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += ",";
        child(i);
      }
      out += ")";
      break;
    case RingKind::Quotient:
      out += "quot(";
      child(0);
      out += ",[";
      for (std::size_t i = 0; i < e.indices.size(); ++i) out += (i ? "," : "") + std::to_string(e.indices[i]);
      out += "])";
      break;
    case RingKind::Corner:
      out += "corner(";
      child(0);
      out += "," + std::to_string(e.n) + ")";
      break;
    case RingKind::Trivial:
      out += "triv(";
      child(0);
      out += ")";
      break;
    case RingKind::GroupRing:
      out += "group(";
      child(0);
      out += ",";
      print_group(e.group.value(), out);
      out += ")";
      break;
    case RingKind::Poly:
      out += "poly(";
      child(0);
      out += "," + std::to_string(e.n) + ")";
      break;
    case RingKind::Skew:
      out += "skew(";
      child(0);
      out += ",";
      switch (e.endo.kind) {
        case EndoKind::Identity: out += "id"; break;
        case EndoKind::Frobenius: out += "frob"; break;
        case EndoKind::File: out += "@" + e.endo.file; break;
      }
      out += "," + std::to_string(e.n) + ")";
      break;
  }
}

Elem element_ref(const TableRing& r, std::size_t index, const char* what) {
  if (index >= r.order()) {
    throw RingError(ErrorCode::BadElementRef, std::string(what) + " index " + std::to_string(index) +
                                                  " is outside the child ring of order " + std::to_string(r.order()));
  }
  return static_cast<Elem>(index);
}

}  // namespace

RingExpr parse(std::string_view text) {
  Parser p(text);
  RingExpr e = p.ring();
  p.finish();
  return e;
}

GroupExpr parse_group(std::string_view text) {
  Parser p(text);
  GroupExpr g = p.group();
  p.finish();
  return g;
}

std::string print_canonical(const RingExpr& expr) {
  std::string out;
  print_ring(expr, out);
  return out;
}

std::string print_canonical(const GroupExpr& expr) {
  std::string out;
  print_group(expr, out);
  return out;
}

std::string canonical_hash(const RingExpr& expr) {
  std::string text = print_canonical(expr);
  return hex64(fnv1a64(text.data(), text.size()));
}

GroupPtr build_group(const GroupExpr& g) {
  switch (g.kind) {
    case GroupKind::Cyclic: return cyclic_group(g.n);
    case GroupKind::Dihedral: return dihedral_group(g.n);
    case GroupKind::Quaternion: return quaternion_group();
    case GroupKind::Symmetric: return symmetric_group(g.n);
    case GroupKind::File: return read_group_file(g.file);
    case GroupKind::Product: {
      std::vector<GroupPtr> factors;
      for (const auto& f : g.factors) factors.push_back(build_group(f));
      return direct_product(factors);
    }
  }
  throw RingError(ErrorCode::UnsupportedGroup, "unknown group kind");
}

RingPtr compile(const RingExpr& e, const CompileOptions& options) {
  const Limits& lim = options.limits;
  auto child = [&](std::size_t i) { return compile(e.children.at(i), options); };
  switch (e.kind) {
    case RingKind::Zmod: return build_zmod(e.n, lim);
    case RingKind::Galois: return build_gf(e.n, lim);
    case RingKind::Matrix: return build_matrix(child(0), e.n, lim);
    case RingKind::Triangular: return build_triangular(child(0), e.n, lim);
    case RingKind::Product: {
      std::vector<RingPtr> factors;
      for (std::size_t i = 0; i < e.children.size(); ++i) factors.push_back(child(i));
      return build_product(factors, lim);
    }
    case RingKind::Quotient: {
      RingPtr base = child(0);
      ElemSet gens(base->order());
      for (std::size_t idx : e.indices) gens.insert(element_ref(*base, idx, "quot generator"));
      return build_quotient(base, ideal_closure(*base, gens, Side::TwoSided));
    }
    case RingKind::Corner: {
      RingPtr base = child(0);
      return build_corner(base, element_ref(*base, e.n, "corner idempotent"));
    }
    case RingKind::Trivial: return build_trivial_extension(child(0), lim);
    case RingKind::GroupRing: return build_group_ring(child(0), build_group(e.group.value()), lim);
    case RingKind::Poly: {
      RingPtr base = child(0);
      return build_truncated_skew_poly(base, identity_endomorphism(base), e.n, lim);
    }
    case RingKind::Skew: {
      RingPtr base = child(0);
      Endomorphism alpha = e.endo.kind == EndoKind::Identity    ? identity_endomorphism(base)
                           : e.endo.kind == EndoKind::Frobenius ? frobenius(base)
                                                                : read_endomorphism_file(base, e.endo.file);
      return build_truncated_skew_poly(base, alpha, e.n, lim);
    }
  }
  throw RingError(ErrorCode::SyntaxError, "unknown ring kind");
}

}  // namespace ringlab
