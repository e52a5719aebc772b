#include "qmap/arch.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <limits>
#include <map>

namespace qmap {

std::string_view topology_name(IntraTopology t) {
    switch (t) {
        case IntraTopology::all_to_all: return "alltoall";
        case IntraTopology::line: return "line";
        case IntraTopology::grid: return "grid";
    }
    return "?";
}

std::string_view topology_name(InterTopology t) {
    switch (t) {
        case InterTopology::all_to_all: return "alltoall";
        case InterTopology::line: return "line";
        case InterTopology::ring: return "ring";
        case InterTopology::grid: return "grid";
    }
    return "?";
}

IntraTopology parse_intra_topology(std::string_view s) {
    if (s == "alltoall" || s == "all-to-all") return IntraTopology::all_to_all;
    if (s == "line") return IntraTopology::line;
    if (s == "grid" || s == "2d-grid") return IntraTopology::grid;
    throw InvalidArchitecture("unknown intra-core topology '" + std::string(s) + "'");
}

InterTopology parse_inter_topology(std::string_view s) {
    if (s == "alltoall" || s == "all-to-all") return InterTopology::all_to_all;
    if (s == "line") return InterTopology::line;
    if (s == "ring") return InterTopology::ring;
    if (s == "grid" || s == "2d-grid") return InterTopology::grid;
    throw InvalidArchitecture("unknown inter-core topology '" + std::string(s) + "'");
}

std::pair<int, int> grid_shape(int count) {
    if (count < 1) throw InvalidArchitecture("grid needs a positive count");
    int r = static_cast<int>(std::sqrt(static_cast<double>(count)));
    while (r > 1 && (r * r > count || count % r != 0)) --r;
    if (r == 1 && count > 3) {
        throw InvalidArchitecture("cannot lay out " + std::to_string(count) +
                                  " nodes as a 2D grid (prime count)");
    }
    return {r, count / r};
}

void CostModel::validate() const {
    if (dur_1q < 1 || dur_2q < 1 || dur_swap < 1 || dur_teleport < 1) {
        throw InvalidArchitecture("operation durations must be >= 1");
    }
    if (swap_primitive_count < 1) throw InvalidArchitecture("swap_primitive_count must be >= 1");
    if (readout_rate == 0 || control_bits_per_gate == 0) {
        throw InvalidArchitecture("rates must be > 0");
    }
}

namespace {

using Adjacency = std::vector<std::vector<int>>;

void link(Adjacency& adj, int a, int b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
}

Adjacency make_all_to_all(int n) {
    Adjacency adj(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) link(adj, a, b);
    return adj;
}

Adjacency make_line(int n) {
    Adjacency adj(static_cast<std::size_t>(n));
    for (int a = 0; a + 1 < n; ++a) link(adj, a, a + 1);
    return adj;
}

Adjacency make_ring(int n) {
    Adjacency adj = make_line(n);
    if (n >= 3) link(adj, n - 1, 0);
    return adj;
}

Adjacency make_grid(int n) {
    const auto [rows, cols] = grid_shape(n);
    Adjacency adj(static_cast<std::size_t>(n));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int i = r * cols + c;
            if (c + 1 < cols) link(adj, i, i + 1);
            if (r + 1 < rows) link(adj, i, i + cols);
        }
    }
    return adj;
}

// all-pairs BFS; returns row-major distances, throws if disconnected
std::vector<int> all_pairs(const Adjacency& adj, const char* what) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> dist(static_cast<std::size_t>(n) * n, -1);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        int* row = &dist[static_cast<std::size_t>(s) * n];
        row[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (row[v] < 0) {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        if (std::find(row, row + n, -1) != row + n) {
            throw InvalidArchitecture(std::string(what) + " graph is disconnected");
        }
    }
    return dist;
}

}  // namespace

Architecture Architecture::build(int n_cores, int qubits_per_core, IntraTopology intra,
                                 InterTopology inter) {
    if (n_cores < 1) throw InvalidArchitecture("n_cores must be >= 1");
    if (qubits_per_core < 1) throw InvalidArchitecture("qubits_per_core must be >= 1");
    if (static_cast<long long>(n_cores) * qubits_per_core > (1LL << 20)) {
        throw InvalidArchitecture("architecture too large");
    }
    Architecture a;
    a.n_cores_ = n_cores;
    a.qubits_per_core_ = qubits_per_core;
    a.intra_ = intra;
    a.inter_ = inter;

    switch (intra) {
        case IntraTopology::all_to_all: a.local_adj_ = make_all_to_all(qubits_per_core); break;
        case IntraTopology::line: a.local_adj_ = make_line(qubits_per_core); break;
        case IntraTopology::grid: a.local_adj_ = make_grid(qubits_per_core); break;
    }
    switch (inter) {
        case InterTopology::all_to_all: a.core_adj_ = make_all_to_all(n_cores); break;
        case InterTopology::line: a.core_adj_ = make_line(n_cores); break;
        case InterTopology::ring: a.core_adj_ = make_ring(n_cores); break;
        case InterTopology::grid: a.core_adj_ = make_grid(n_cores); break;
    }
    for (auto& l : a.local_adj_) std::sort(l.begin(), l.end());
    for (auto& l : a.core_adj_) std::sort(l.begin(), l.end());
    a.local_dist_ = all_pairs(a.local_adj_, "intra-core coupling");
    a.core_dist_ = all_pairs(a.core_adj_, "inter-core link");
    return a;
}

void Architecture::check_physical(PhysicalId p) const {
    if (p < 0 || p >= n_physical()) {
        throw std::out_of_range("physical qubit " + std::to_string(p) + " out of range");
    }
}

void Architecture::check_core(CoreId c) const {
    if (c < 0 || c >= n_cores_) throw std::out_of_range("core " + std::to_string(c) + " out of range");
}

CoreId Architecture::core_of(PhysicalId p) const {
    check_physical(p);
    return p / qubits_per_core_;
}

bool Architecture::are_adjacent(PhysicalId p, PhysicalId q) const {
    check_physical(p);
    check_physical(q);
    if (p == q || p / qubits_per_core_ != q / qubits_per_core_) return false;
    return local_dist_[static_cast<std::size_t>(local_slot(p)) * qubits_per_core_ + local_slot(q)] == 1;
}

int Architecture::intra_distance(PhysicalId p, PhysicalId q) const {
    check_physical(p);
    check_physical(q);
    if (p / qubits_per_core_ != q / qubits_per_core_) {
        throw std::invalid_argument("intra_distance: qubits " + std::to_string(p) + " and " +
                                    std::to_string(q) + " are in different cores");
    }
    return local_dist_[static_cast<std::size_t>(local_slot(p)) * qubits_per_core_ + local_slot(q)];
}

int Architecture::core_distance(CoreId a, CoreId b) const {
    check_core(a);
    check_core(b);
    return core_dist_[static_cast<std::size_t>(a) * n_cores_ + b];
}

bool Architecture::cores_linked(CoreId a, CoreId b) const { return core_distance(a, b) == 1; }

std::vector<PhysicalId> Architecture::neighbors(PhysicalId p) const {
    check_physical(p);
    const PhysicalId base = p - local_slot(p);
    std::vector<PhysicalId> out;
    for (int s : local_adj_[static_cast<std::size_t>(local_slot(p))]) out.push_back(base + s);
    return out;
}

std::vector<std::pair<CoreId, CoreId>> Architecture::inter_links() const {
    std::vector<std::pair<CoreId, CoreId>> out;
    for (CoreId a = 0; a < n_cores_; ++a)
        for (int b : core_adj_[static_cast<std::size_t>(a)])
            if (a < b) out.emplace_back(a, b);
    return out;
}

std::string Architecture::spec_string() const {
    return std::to_string(n_cores_) + "x" + std::to_string(qubits_per_core_) + ":" +
           std::string(topology_name(intra_)) + "/" + std::string(topology_name(inter_));
}

namespace {

int to_int(std::string_view s, const std::string& what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw InvalidArchitecture("bad integer for " + what + ": '" + std::string(s) + "'");
    }
    return v;
}

std::uint64_t to_u64(std::string_view s, const std::string& what) {
    // accept plain integers and exact scientific forms such as 1e6
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size()) return v;
    double d = 0;
    auto [dptr, dec] = std::from_chars(s.data(), s.data() + s.size(), d);
    if (dec != std::errc() || dptr != s.data() + s.size() || d < 0 || d != std::floor(d) ||
        d > 1.8e19) {
        throw InvalidArchitecture("bad unsigned integer for " + what + ": '" + std::string(s) + "'");
    }
    return static_cast<std::uint64_t>(d);
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

Architecture parse_arch_spec(std::string_view spec) {
    const auto x = spec.find('x');
    if (x == std::string_view::npos) {
        throw InvalidArchitecture("architecture spec must look like CxQ:intra/inter");
    }
    const auto colon = spec.find(':');
    const std::string_view cores = spec.substr(0, x);
    const std::string_view qpc =
        spec.substr(x + 1, colon == std::string_view::npos ? std::string_view::npos : colon - x - 1);
    IntraTopology intra = IntraTopology::all_to_all;
    InterTopology inter = InterTopology::all_to_all;
    if (colon != std::string_view::npos) {
        const std::string_view topo = spec.substr(colon + 1);
        const auto slash = topo.find('/');
        if (slash == std::string_view::npos) {
            throw InvalidArchitecture("architecture spec must look like CxQ:intra/inter");
        }
        intra = parse_intra_topology(topo.substr(0, slash));
        inter = parse_inter_topology(topo.substr(slash + 1));
    }
    return Architecture::build(to_int(cores, "cores"), to_int(qpc, "qubits per core"), intra, inter);
}

ArchDescription parse_arch_file(std::string_view text) {
    std::map<std::string, std::string, std::less<>> kv;
    int line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw InvalidArchitecture("line " + std::to_string(line_no) + ": expected key = value");
        }
        std::string key(trim(line.substr(0, eq)));
        if (!kv.emplace(key, std::string(trim(line.substr(eq + 1)))).second) {
            throw InvalidArchitecture("line " + std::to_string(line_no) + ": duplicate key " + key);
        }
    }
    auto take = [&](const char* key) -> std::string {
        auto it = kv.find(key);
        if (it == kv.end()) return {};
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    const std::string n_cores = take("n_cores");
    const std::string qpc = take("qubits_per_core");
    if (n_cores.empty() || qpc.empty()) {
        throw InvalidArchitecture("architecture file needs n_cores and qubits_per_core");
    }
    std::string intra = take("intra");
    std::string inter = take("inter");
    CostModel cost;
    auto override_int = [&](const char* key, int& field) {
        if (auto v = take(key); !v.empty()) field = to_int(v, key);
    };
    auto override_u64 = [&](const char* key, std::uint64_t& field) {
        if (auto v = take(key); !v.empty()) field = to_u64(v, key);
    };
    override_int("dur_1q", cost.dur_1q);
    override_int("dur_2q", cost.dur_2q);
    override_int("dur_swap", cost.dur_swap);
    override_int("dur_teleport", cost.dur_teleport);
    override_int("swap_primitive_count", cost.swap_primitive_count);
    override_u64("readout_rate", cost.readout_rate);
    override_u64("control_bits_per_gate", cost.control_bits_per_gate);
    if (!kv.empty()) throw InvalidArchitecture("unknown architecture key '" + kv.begin()->first + "'");
    cost.validate();
    return ArchDescription{
        Architecture::build(to_int(n_cores, "n_cores"), to_int(qpc, "qubits_per_core"),
                            intra.empty() ? IntraTopology::all_to_all : parse_intra_topology(intra),
                            inter.empty() ? InterTopology::all_to_all : parse_inter_topology(inter)),
        cost};
}

std::string to_arch_file(const ArchDescription& d) {
    const auto& a = d.arch;
    const auto& c = d.cost;
    std::string s;
    s += "n_cores = " + std::to_string(a.n_cores()) + "\n";
    s += "qubits_per_core = " + std::to_string(a.qubits_per_core()) + "\n";
    s += "intra = " + std::string(topology_name(a.intra())) + "\n";
    s += "inter = " + std::string(topology_name(a.inter())) + "\n";
    s += "dur_1q = " + std::to_string(c.dur_1q) + "\n";
    s += "dur_2q = " + std::to_string(c.dur_2q) + "\n";
    s += "dur_swap = " + std::to_string(c.dur_swap) + "\n";
    s += "dur_teleport = " + std::to_string(c.dur_teleport) + "\n";
    s += "swap_primitive_count = " + std::to_string(c.swap_primitive_count) + "\n";
    s += "readout_rate = " + std::to_string(c.readout_rate) + "\n";
    s += "control_bits_per_gate = " + std::to_string(c.control_bits_per_gate) + "\n";
    return s;
}

}  // namespace qmap
