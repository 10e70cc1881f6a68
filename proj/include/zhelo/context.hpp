#pragma once

#include <memory>
#include <optional>
#include <string>

#include "zhelo/bgg.hpp"
#include "zhelo/chevalley.hpp"
#include "zhelo/monoid.hpp"
#include "zhelo/rootsys.hpp"
#include "zhelo/verify.hpp"
#include "zhelo/zhelobenko.hpp"

namespace zhelo {

// Lazily computed per-type state.  The expensive pieces (generator solves,
// the monoid) are built once and shared by whatever asks for them.
class TypeContext {
 public:
  explicit TypeContext(const std::string& tag);

  const std::string& tag() const { return tag_; }
  const RootSystem& root_system();
  const InvariantRing& invariants();
  CoinvariantSpace& coinvariants();
  const ChevalleyBasis& chevalley();
  const std::vector<ZheloInvariant>& generators();
  const MonoidGraph& monoid();          // faults on G2
  const std::vector<int>& pmap_image(); // faults on G2
  bool is_g2() const;

 private:
  std::string tag_;
  std::optional<RootSystem> rs_;
  std::optional<InvariantRing> ring_;
  std::unique_ptr<CoinvariantSpace> cs_;
  std::optional<ChevalleyBasis> cb_;
  std::optional<std::vector<ZheloInvariant>> gens_;
  std::optional<MonoidGraph> monoid_;
  std::optional<std::vector<int>> pmap_;
};

}  // namespace zhelo
