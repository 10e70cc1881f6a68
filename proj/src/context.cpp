#include "zhelo/context.hpp"

namespace zhelo {

TypeContext::TypeContext(const std::string& tag) : tag_(tag) {}

const RootSystem& TypeContext::root_system() {
  if (!rs_) rs_ = build_root_system(parse_type(tag_));
  return *rs_;
}

const InvariantRing& TypeContext::invariants() {
  if (!ring_) ring_ = invariant_generators(root_system());
  return *ring_;
}

CoinvariantSpace& TypeContext::coinvariants() {
  if (!cs_) cs_ = std::make_unique<CoinvariantSpace>(root_system(), invariants());
  return *cs_;
}

const ChevalleyBasis& TypeContext::chevalley() {
  if (!cb_) cb_ = build_chevalley(root_system());
  return *cb_;
}

const std::vector<ZheloInvariant>& TypeContext::generators() {
  if (!gens_) gens_ = solve_generators(root_system(), invariants());
  return *gens_;
}

bool TypeContext::is_g2() const { return tag_.size() && tag_[0] == 'G'; }

const MonoidGraph& TypeContext::monoid() {
  require(!is_g2(), "the monoid machinery excludes G2");
  if (!monoid_) monoid_ = enumerate_monoid(root_system(), invariants(), coinvariants());
  return *monoid_;
}

const std::vector<int>& TypeContext::pmap_image() {
  require(!is_g2(), "the monoid machinery excludes G2");
  if (!pmap_) {
    monoid();
    pmap_ = compute_pmap(root_system(), chevalley(), coinvariants(), *monoid_);
  }
  return *pmap_;
}

}  // namespace zhelo
