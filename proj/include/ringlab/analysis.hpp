#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "ringlab/ideals.hpp"
#include "ringlab/radicals.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// A ring together with every structural set the property deciders need:
/// the right-ideal lattice, units, idempotents, nilpotents, socle, J(R),
/// delta(R) by consensus and the quasinilpotent set.
///
/// Everything is computed eagerly in the constructor and is read-only
/// afterwards, so one analysis can be shared between threads.
class RingAnalysis {
 public:
  explicit RingAnalysis(FiniteRing R)
      : ring_(std::make_unique<FiniteRing>(std::move(R))),
        lattice_(std::make_unique<RightIdealLattice>(*ring_)),
        basic_(element_sets(*ring_)),
        socle_(lattice_->socle()),
        jacobson_(ringlab::jacobson(*lattice_)),
        delta_(ringlab::delta(*lattice_, jacobson_)),
        qnil_(qnil_set(*ring_)) {
    idempotent_list_ = basic_.idempotents.members();
  }

  const FiniteRing& ring() const { return *ring_; }
  const RightIdealLattice& lattice() const { return *lattice_; }
  const ElementSet& units() const { return basic_.units; }
  const ElementSet& idempotents() const { return basic_.idempotents; }
  const std::vector<ElementId>& idempotent_list() const { return idempotent_list_; }
  const ElementSet& nilpotents() const { return basic_.nilpotents; }
  const ElementSet& socle() const { return socle_; }
  const ElementSet& jacobson() const { return jacobson_; }
  const DeltaComputation& delta_computation() const { return delta_; }
  const ElementSet& delta() const { return delta_.consensus; }
  const ElementSet& qnil() const { return qnil_; }

 private:
  std::unique_ptr<FiniteRing> ring_;
  std::unique_ptr<RightIdealLattice> lattice_;
  BasicSets basic_;
  ElementSet socle_;
  ElementSet jacobson_;
  DeltaComputation delta_;
  ElementSet qnil_;
  std::vector<ElementId> idempotent_list_;
};

}  // namespace ringlab
