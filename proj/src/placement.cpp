#include "qmap/placement.hpp"

#include <stdexcept>
#include <string>

namespace qmap {

Placement::Placement(int n_physical, std::vector<PhysicalId> virtual_to_physical)
    : v2p_(std::move(virtual_to_physical)), p2v_(static_cast<std::size_t>(n_physical), kFree) {
    for (std::size_t v = 0; v < v2p_.size(); ++v) {
        const PhysicalId p = v2p_[v];
        if (p < 0 || p >= n_physical) {
            throw std::invalid_argument("placement: virtual " + std::to_string(v) +
                                        " mapped outside the device");
        }
        if (p2v_[static_cast<std::size_t>(p)] != kFree) {
            throw std::invalid_argument("placement: physical " + std::to_string(p) +
                                        " assigned twice");
        }
        p2v_[static_cast<std::size_t>(p)] = static_cast<VirtualId>(v);
    }
}

void Placement::exchange(PhysicalId a, PhysicalId b) {
    const VirtualId va = p2v_[static_cast<std::size_t>(a)];
    const VirtualId vb = p2v_[static_cast<std::size_t>(b)];
    p2v_[static_cast<std::size_t>(a)] = vb;
    p2v_[static_cast<std::size_t>(b)] = va;
    if (va != kFree) v2p_[static_cast<std::size_t>(va)] = b;
    if (vb != kFree) v2p_[static_cast<std::size_t>(vb)] = a;
}

void Placement::move(PhysicalId src, PhysicalId dst) {
    if (is_free(src) || !is_free(dst)) {
        throw std::logic_error("placement: move needs an occupied source and a free destination");
    }
    exchange(src, dst);
}

}  // namespace qmap
