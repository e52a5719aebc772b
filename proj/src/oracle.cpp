#include "qmap/oracle.hpp"

#include "qmap/dag.hpp"
#include "qmap/mapper.hpp"

#include <functional>
#include <queue>
#include <unordered_map>
#include <vector>

namespace qmap {

namespace {

// Slot contents packed 4 bits per physical qubit, executed-gate mask above.
using State = std::uint64_t;
constexpr std::uint64_t kEmpty = 0xF;
constexpr int kMaskShift = 4 * kOracleMaxPhysical;

class Search {
  public:
    Search(const Circuit& c, const Architecture& a) : c_(c), a_(a), n_phys_(a.n_physical()) {
        const DependencyDag dag = build_dag(c);
        pred_mask_.resize(c.size(), 0);
        for (std::size_t g = 0; g < c.size(); ++g)
            for (int h : dag.predecessors[g]) pred_mask_[g] |= 1u << h;
        all_done_ = c.size() == 0 ? 0 : (1u << c.size()) - 1;
        for (PhysicalId p = 0; p < n_phys_; ++p)
            for (PhysicalId q = p + 1; q < n_phys_; ++q)
                if (a.are_adjacent(p, q)) swaps_.push_back({p, q});
    }

    int run(const Placement& pl) {
        State start = 0;
        for (PhysicalId p = 0; p < kOracleMaxPhysical; ++p) {
            const std::uint64_t v = p < n_phys_ && !pl.is_free(p) ? static_cast<std::uint64_t>(pl.virtual_at(p)) : kEmpty;
            start |= v << (4 * p);
        }
        start = close(start);

        using Entry = std::pair<int, State>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
        std::unordered_map<State, int> best;
        best[start] = 0;
        frontier.push({0, start});
        while (!frontier.empty()) {
            const auto [d, s] = frontier.top();
            frontier.pop();
            if (best[s] < d) continue;
            if (mask(s) == all_done_) return d;
            auto relax = [&](State next, int cost) {
                next = close(next);
                auto it = best.find(next);
                if (it == best.end() || it->second > d + cost) {
                    best[next] = d + cost;
                    frontier.push({d + cost, next});
                }
            };
            for (const auto& [p, q] : swaps_) {
                if (slot(s, p) == kEmpty && slot(s, q) == kEmpty) continue;
                relax(exchanged(s, p, q), 1);
            }
            for (PhysicalId p = 0; p < n_phys_; ++p) {
                if (slot(s, p) == kEmpty) continue;
                for (PhysicalId q = 0; q < n_phys_; ++q) {
                    if (a_.core_of(p) == a_.core_of(q)) continue;
                    if (slot(s, q) == kEmpty) {
                        relax(exchanged(s, p, q), 1);  // teleport
                    } else if (p < q) {
                        relax(exchanged(s, p, q), 2);  // exchange
                    }
                }
            }
        }
        throw RoutingError("no routing exists for this instance");
    }

  private:
    static std::uint64_t slot(State s, PhysicalId p) { return (s >> (4 * p)) & 0xF; }
    static unsigned mask(State s) { return static_cast<unsigned>(s >> kMaskShift); }

    static State exchanged(State s, PhysicalId p, PhysicalId q) {
        const std::uint64_t vp = slot(s, p);
        const std::uint64_t vq = slot(s, q);
        s &= ~((std::uint64_t{0xF} << (4 * p)) | (std::uint64_t{0xF} << (4 * q)));
        return s | (vq << (4 * p)) | (vp << (4 * q));
    }

    PhysicalId where(State s, VirtualId v) const {
        for (PhysicalId p = 0; p < n_phys_; ++p)
            if (slot(s, p) == static_cast<std::uint64_t>(v)) return p;
        return -1;
    }

    // Runs every gate that is ready and executable in place; this never
    // forecloses a cheaper schedule because it leaves the placement alone.
    State close(State s) const {
        bool progressed = true;
        while (progressed) {
            progressed = false;
            const unsigned done = mask(s);
            for (std::size_t g = 0; g < c_.size(); ++g) {
                const unsigned bit = 1u << g;
                if ((done & bit) || (pred_mask_[g] & ~done)) continue;
                const Gate& gate = c_[g];
                if (gate.arity() == 2 &&
                    !a_.are_adjacent(where(s, gate.operands[0]), where(s, gate.operands[1]))) {
                    continue;
                }
                s |= static_cast<State>(bit) << kMaskShift;
                progressed = true;
                break;
            }
        }
        return s;
    }

    const Circuit& c_;
    const Architecture& a_;
    int n_phys_;
    std::vector<unsigned> pred_mask_;
    unsigned all_done_ = 0;
    std::vector<std::pair<PhysicalId, PhysicalId>> swaps_;
};

}  // namespace

int oracle_min_route(const Circuit& c, const Architecture& a, const Placement& pl) {
    if (a.n_physical() > kOracleMaxPhysical || c.size() > static_cast<std::size_t>(kOracleMaxGates)) {
        throw OracleGuardError("oracle limited to " + std::to_string(kOracleMaxPhysical) +
                               " physical qubits and " + std::to_string(kOracleMaxGates) +
                               " gates (got " + std::to_string(a.n_physical()) + " and " +
                               std::to_string(c.size()) + ")");
    }
    if (pl.n_virtual() != c.n_qubits() || pl.n_physical() != a.n_physical()) {
        throw std::invalid_argument("placement does not match circuit and architecture");
    }
    return Search(c, a).run(pl);
}

}  // namespace qmap
