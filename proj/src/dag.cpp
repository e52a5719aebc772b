#include "qmap/dag.hpp"

#include <algorithm>

namespace qmap {

int DependencyDag::max_layer() const {
    if (layer.empty()) return -1;
    return *std::max_element(layer.begin(), layer.end());
}

DependencyDag build_dag(const Circuit& c) {
    DependencyDag dag;
    const std::size_t n = c.size();
    dag.predecessors.resize(n);
    dag.successors.resize(n);
    dag.layer.assign(n, 0);

    // last gate touching each virtual qubit
    std::vector<int> last(static_cast<std::size_t>(c.n_qubits()), -1);
    for (std::size_t i = 0; i < n; ++i) {
        const Gate& g = c[i];
        auto& preds = dag.predecessors[i];
        for (int k = 0; k < g.arity(); ++k) {
            const int h = last[static_cast<std::size_t>(g.operands[k])];
            if (h >= 0 && std::find(preds.begin(), preds.end(), h) == preds.end()) {
                preds.push_back(h);
            }
        }
        std::sort(preds.begin(), preds.end());
        int layer = 0;
        for (int h : preds) {
            dag.successors[static_cast<std::size_t>(h)].push_back(static_cast<int>(i));
            layer = std::max(layer, dag.layer[static_cast<std::size_t>(h)] + 1);
        }
        dag.layer[i] = layer;
        for (int k = 0; k < g.arity(); ++k) {
            last[static_cast<std::size_t>(g.operands[k])] = static_cast<int>(i);
        }
    }
    return dag;
}

}  // namespace qmap
