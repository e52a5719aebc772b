#pragma once

#include "qmap/arch.hpp"
#include "qmap/circuit.hpp"

#include <optional>
#include <vector>

namespace qmap {

inline constexpr VirtualId kFree = -1;

/// Injective virtual -> physical assignment, kept together with its inverse.
class Placement {
  public:
    Placement() = default;
    Placement(int n_physical, std::vector<PhysicalId> virtual_to_physical);

    int n_virtual() const { return static_cast<int>(v2p_.size()); }
    int n_physical() const { return static_cast<int>(p2v_.size()); }

    PhysicalId physical_of(VirtualId v) const { return v2p_[static_cast<std::size_t>(v)]; }
    /// kFree when nothing is stored at p.
    VirtualId virtual_at(PhysicalId p) const { return p2v_[static_cast<std::size_t>(p)]; }
    bool is_free(PhysicalId p) const { return virtual_at(p) == kFree; }

    const std::vector<PhysicalId>& as_vector() const { return v2p_; }

    /// Exchanges the contents of two slots (either may be free).
    void exchange(PhysicalId a, PhysicalId b);
    /// Moves the state at `src` into the free slot `dst`.
    void move(PhysicalId src, PhysicalId dst);

    bool operator==(const Placement& o) const { return v2p_ == o.v2p_ && p2v_.size() == o.p2v_.size(); }

  private:
    std::vector<PhysicalId> v2p_;
    std::vector<VirtualId> p2v_;
};

enum class PlacementStrategy : std::uint8_t { block, random };

}  // namespace qmap
