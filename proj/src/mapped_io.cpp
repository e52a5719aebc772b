#include "qmap/mapped_io.hpp"

#include "qmap/digest.hpp"
#include "qmap/qasm.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace qmap {

namespace {

constexpr std::string_view kMagic = "qmap-mapped 1";

std::string placement_line(const char* key, const Placement& p) {
    std::string s = key;
    for (PhysicalId q : p.as_vector()) s += " " + std::to_string(q);
    return s;
}

std::string arch_line(const Architecture& a) { return "arch " + a.spec_string(); }
std::string config_line(const MapperConfig& cfg) { return "config " + cfg.canonical(); }

class LineReader {
  public:
    explicit LineReader(std::string_view text) : text_(text) {}

    bool done() const { return text_.empty(); }
    int line() const { return line_; }

    std::string_view next() {
        if (text_.empty()) throw MappedFormatError("unexpected end of file", line_ + 1);
        const auto nl = text_.find('\n');
        std::string_view l = text_.substr(0, nl);
        text_ = nl == std::string_view::npos ? std::string_view{} : text_.substr(nl + 1);
        ++line_;
        if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
        return l;
    }

    // next line must start with "<key> "; returns the remainder
    std::string_view field(std::string_view key) {
        std::string_view l = next();
        if (l.substr(0, key.size()) != key || (l.size() > key.size() && l[key.size()] != ' ')) {
            throw MappedFormatError("expected '" + std::string(key) + "'", line_);
        }
        return l.size() > key.size() ? l.substr(key.size() + 1) : std::string_view{};
    }

  private:
    std::string_view text_;
    int line_ = 0;
};

long to_long(std::string_view s, int line) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw MappedFormatError("bad integer '" + std::string(s) + "'", line);
    }
    return v;
}

std::uint64_t to_u64(std::string_view s, int line) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw MappedFormatError("bad unsigned integer '" + std::string(s) + "'", line);
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const auto pos = s.find(sep);
        out.push_back(s.substr(0, pos));
        if (pos == std::string_view::npos) return out;
        s = s.substr(pos + 1);
    }
}

std::map<std::string, std::string, std::less<>> key_values(std::string_view s, int line) {
    std::map<std::string, std::string, std::less<>> kv;
    for (std::string_view tok : split(s, ' ')) {
        if (tok.empty()) continue;
        const auto eq = tok.find('=');
        if (eq == std::string_view::npos) {
            throw MappedFormatError("expected key=value, got '" + std::string(tok) + "'", line);
        }
        kv.emplace(std::string(tok.substr(0, eq)), std::string(tok.substr(eq + 1)));
    }
    return kv;
}

MapperConfig parse_config(std::string_view s, int line) {
    auto kv = key_values(s, line);
    auto get = [&](const char* key) -> std::string {
        auto it = kv.find(key);
        if (it == kv.end()) throw MappedFormatError(std::string("config is missing ") + key, line);
        return it->second;
    };
    MapperConfig cfg;
    const std::string placement = get("placement");
    if (placement == "block") cfg.placement = PlacementStrategy::block;
    else if (placement == "random") cfg.placement = PlacementStrategy::random;
    else throw MappedFormatError("unknown placement '" + placement + "'", line);
    auto num = [&](const char* key) { return to_long(get(key), line); };
    cfg.seed = to_u64(get("seed"), line);
    cfg.allow_full = num("allow_full") != 0;
    cfg.lookahead = static_cast<int>(num("lookahead"));
    cfg.cost.dur_1q = static_cast<int>(num("dur_1q"));
    cfg.cost.dur_2q = static_cast<int>(num("dur_2q"));
    cfg.cost.dur_swap = static_cast<int>(num("dur_swap"));
    cfg.cost.dur_teleport = static_cast<int>(num("dur_teleport"));
    cfg.cost.swap_primitive_count = static_cast<int>(num("swap_primitive_count"));
    cfg.cost.readout_rate = to_u64(get("readout_rate"), line);
    cfg.cost.control_bits_per_gate = to_u64(get("control_bits_per_gate"), line);
    return cfg;
}

std::array<PhysicalId, 2> qubit_pair(std::string_view s, int line) {
    const auto parts = split(s, ',');
    if (parts.size() > 2) throw MappedFormatError("too many qubits", line);
    std::array<PhysicalId, 2> q{-1, -1};
    for (std::size_t i = 0; i < parts.size(); ++i) q[i] = static_cast<PhysicalId>(to_long(parts[i], line));
    return q;
}

TimedOp parse_op(std::string_view l, int line, const Architecture& a) {
    const auto toks = split(l, ' ');
    if (toks.size() < 2 || toks[0].substr(0, 2) != "t=") throw MappedFormatError("malformed op line", line);
    TimedOp op;
    op.timestep = static_cast<int>(to_long(toks[0].substr(2), line));
    const std::string_view kind = toks[1];
    if (kind == "gate") op.kind = OpKind::gate;
    else if (kind == "swap") op.kind = OpKind::swap;
    else if (kind == "teleport") op.kind = OpKind::teleport;
    else if (kind == "exchange") op.kind = OpKind::exchange;
    else throw MappedFormatError("unknown op kind '" + std::string(kind) + "'", line);

    auto kv = key_values(l.substr(toks[0].size() + toks[1].size() + 1), line);
    auto take = [&](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto q = take("q");
    auto d = take("d");
    if (!q || !d) throw MappedFormatError("op needs q= and d=", line);
    op.qubits = qubit_pair(*q, line);
    op.duration = static_cast<int>(to_long(*d, line));
    if (op.kind == OpKind::gate) {
        auto g = take("g");
        if (!g) throw MappedFormatError("gate op needs g=", line);
        op.gate_id = static_cast<int>(to_long(*g, line));
    } else {
        auto cores = take("cores");
        if (op.kind != OpKind::swap) {
            if (!cores) throw MappedFormatError("state transfer needs cores=", line);
            const auto c = qubit_pair(*cores, line);
            for (int k = 0; k < 2; ++k) {
                if (op.qubits[k] < 0 || op.qubits[k] >= a.n_physical() || a.core_of(op.qubits[k]) != c[k]) {
                    throw MappedFormatError("cores= disagrees with the qubit indices", line);
                }
            }
        }
    }
    if (!kv.empty()) throw MappedFormatError("unexpected field '" + kv.begin()->first + "'", line);
    return op;
}

}  // namespace

std::string config_digest(const Architecture& a, const MapperConfig& cfg) {
    return sha256_hex(arch_line(a) + "\n" + config_line(cfg) + "\n");
}

std::string write_mapped(const MappedCircuit& m) {
    std::ostringstream out;
    const std::string circuit_text = to_qasm(m.circuit);
    out << kMagic << '\n';
    out << arch_line(m.arch) << '\n';
    out << config_line(m.config) << '\n';
    out << "circuit_digest " << sha256_hex(circuit_text) << '\n';
    out << "config_digest " << config_digest(m.arch, m.config) << '\n';
    out << "circuit_begin " << m.circuit.name() << '\n';
    out << circuit_text;
    out << "circuit_end\n";
    out << placement_line("initial", m.initial) << '\n';
    out << placement_line("final", m.final_placement) << '\n';
    out << "depth " << m.depth << '\n';
    out << "ops " << m.ops.size() << '\n';
    for (const TimedOp& op : m.ops) {
        out << "t=" << op.timestep << ' ' << op_kind_name(op.kind);
        if (op.kind == OpKind::gate) out << " g=" << op.gate_id;
        out << " q=" << op.qubits[0];
        if (op.qubits[1] >= 0) out << ',' << op.qubits[1];
        if (op.kind == OpKind::teleport || op.kind == OpKind::exchange) {
            out << " cores=" << m.arch.core_of(op.qubits[0]) << ',' << m.arch.core_of(op.qubits[1]);
        }
        out << " d=" << op.duration << '\n';
    }
    return out.str();
}

MappedCircuit read_mapped(std::string_view text) {
    LineReader in(text);
    if (in.next() != kMagic) throw MappedFormatError("not a qmap mapped file", 1);

    std::optional<Architecture> arch;
    try {
        arch = parse_arch_spec(in.field("arch"));
    } catch (const InvalidArchitecture& e) {
        throw MappedFormatError(e.what(), in.line());
    }
    MapperConfig cfg = parse_config(in.field("config"), in.line());
    const std::string circuit_digest(in.field("circuit_digest"));
    const std::string cfg_digest(in.field("config_digest"));
    if (cfg_digest != config_digest(*arch, cfg)) {
        throw MappedFormatError("config digest mismatch (file edited?)", in.line());
    }
    const std::string name(in.field("circuit_begin"));
    const int circuit_line = in.line() + 1;
    std::string circuit_text;
    while (true) {
        std::string_view l = in.next();
        if (l == "circuit_end") break;
        circuit_text += l;
        circuit_text += '\n';
    }
    if (sha256_hex(circuit_text) != circuit_digest) {
        throw MappedFormatError("circuit digest mismatch (file edited?)", circuit_line);
    }
    std::optional<Circuit> circuit;
    try {
        circuit = parse_circuit(circuit_text, name);
    } catch (const ParseError& e) {
        throw MappedFormatError(std::string("embedded circuit: ") + e.what(), circuit_line + e.line() - 1);
    }

    auto placement = [&](std::string_view key) {
        std::string_view rest = in.field(key);
        std::vector<PhysicalId> v;
        if (!rest.empty()) {
            for (std::string_view tok : split(rest, ' ')) v.push_back(static_cast<PhysicalId>(to_long(tok, in.line())));
        }
        try {
            return Placement(arch->n_physical(), std::move(v));
        } catch (const std::invalid_argument& e) {
            throw MappedFormatError(e.what(), in.line());
        }
    };
    Placement initial = placement("initial");
    Placement final_pl = placement("final");
    const int depth = static_cast<int>(to_long(in.field("depth"), in.line()));
    const long n_ops = to_long(in.field("ops"), in.line());
    if (n_ops < 0) throw MappedFormatError("negative op count", in.line());
    std::vector<TimedOp> ops;
    ops.reserve(static_cast<std::size_t>(n_ops));
    for (long i = 0; i < n_ops; ++i) {
        std::string_view l = in.next();
        ops.push_back(parse_op(l, in.line(), *arch));
    }
    while (!in.done()) {
        if (!in.next().empty()) throw MappedFormatError("trailing content after ops", in.line());
    }
    return MappedCircuit{std::move(*arch), std::move(*circuit), cfg, std::move(initial),
                         std::move(ops), std::move(final_pl), depth};
}

}  // namespace qmap
