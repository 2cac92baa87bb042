#include "ringlab/analysis.hpp"

namespace ringlab {

const char* pred_name(Pred p) {
  switch (p) {
    case Pred::UJsharp: return "UJ#";
    case Pred::UJ: return "UJ";
    case Pred::UU: return "UU";
    case Pred::Boolean: return "Boolean";
    case Pred::Local: return "local";
    case Pred::Division: return "division";
    case Pred::Reduced: return "reduced";
    case Pred::Commutative: return "commutative";
    case Pred::Semipotent: return "semi-potent";
    case Pred::Regular: return "regular";
    case Pred::Exchange: return "exchange";
    case Pred::DedekindFinite: return "Dedekind-finite";
    case Pred::TwoPrimal: return "2-primal";
    case Pred::LiftsModJ: return "idempotents lift mod J";
  }
  return "?";
}

Analysis::Analysis(RingPtr ring, std::optional<InvariantBundle> bundle)
    : ring_(std::move(ring)), bundle_(bundle ? std::move(*bundle) : compute_bundle(*ring_)) {
  bases_.resize(ring_->construction().bases.size());
}

const Verdict& Analysis::verdict(Pred p) {
  auto it = verdicts_.find(p);
  if (it != verdicts_.end()) return it->second;
  const TableRing& r = *ring_;
  const InvariantBundle& b = bundle_;
  Verdict v;
  switch (p) {
    case Pred::UJsharp: v = is_ujsharp(r, b); break;
    case Pred::UJ: v = is_uj(r, b); break;
    case Pred::UU: v = is_uu(r, b); break;
    case Pred::Boolean: v = is_boolean(r, b); break;
    case Pred::Local: v = is_local(r, b); break;
    case Pred::Division: v = is_division(r, b); break;
    case Pred::Reduced: v = is_reduced(r, b); break;
    case Pred::Commutative: v = is_commutative(r, b); break;
    case Pred::Semipotent: v = is_semipotent(r, b); break;
    case Pred::Regular: v = is_regular(r, b); break;
    case Pred::Exchange: v = is_exchange(r, b); break;
    case Pred::DedekindFinite: v = is_dedekind_finite(r, b); break;
    case Pred::TwoPrimal: v = is_2primal(r, b); break;
    case Pred::LiftsModJ: {
      Analysis& q = radical_quotient();
      v = idempotents_lift(r, b, q.ring(), q.bundle());
      break;
    }
  }
  return verdicts_.emplace(p, std::move(v)).first->second;
}

const CleanProfile& Analysis::clean() {
  if (!clean_) clean_ = clean_family(*ring_, bundle_);
  return *clean_;
}

Analysis& Analysis::radical_quotient() {
  if (!quotient_) quotient_ = std::make_unique<Analysis>(build_quotient(ring_, bundle_.jacobson));
  return *quotient_;
}

Analysis& Analysis::base(std::size_t i) {
  if (i >= bases_.size()) throw std::out_of_range("construction has no base ring " + std::to_string(i));
  if (!bases_[i]) bases_[i] = std::make_unique<Analysis>(ring_->construction().bases[i]);
  return *bases_[i];
}

bool Analysis::semiregular() { return radical_quotient().holds(Pred::Regular) && holds(Pred::LiftsModJ); }
bool Analysis::semiboolean() { return radical_quotient().holds(Pred::Boolean) && holds(Pred::LiftsModJ); }
bool Analysis::potent() { return holds(Pred::Semipotent) && holds(Pred::LiftsModJ); }

std::optional<std::size_t> Analysis::jacobson_nilpotency() {
  if (!nilpotency_) nilpotency_ = nilpotency_index(*ring_, bundle_.jacobson);
  return *nilpotency_;
}

const std::vector<ElemSet>& Analysis::ideals_in_jacobson(std::size_t cap) {
  if (ideals_) return *ideals_;
  std::vector<ElemSet> out;
  const TableRing& r = *ring_;
  if (bundle_.jacobson.count() > 1) {
    out.push_back(bundle_.jacobson);
    for (Elem j : bundle_.jacobson.elements()) {
      if (out.size() >= cap) break;
      if (j == r.zero()) continue;
      ElemSet single(r.order());
      single.insert(j);
      ElemSet ideal = ideal_closure(r, single, Side::TwoSided);
      bool seen = false;
      for (const auto& o : out) seen = seen || o == ideal;
      if (!seen) out.push_back(std::move(ideal));
    }
  }
  ideals_ = std::move(out);
  return *ideals_;
}

ElemSet Analysis::project_to_radical_quotient(const ElemSet& s) {
  Analysis& q = radical_quotient();
  const auto& map = q.ring().construction().map;
  ElemSet out(q.ring().order());
  s.for_each([&](Elem x) { out.insert(map[x]); });
  return out;
}

std::string render_elements(const TableRing& r, const std::vector<Elem>& members) {
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += members[i] < r.order() ? r.label(members[i]) : "#" + std::to_string(members[i]);
  }
  return out;
}

std::string render_set(const TableRing& r, const ElemSet& s) { return "{" + render_elements(r, s.elements()) + "}"; }

}  // namespace ringlab
