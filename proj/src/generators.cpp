#include "qmap/generators.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

namespace qmap {

SeededRng::SeededRng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t SeededRng::next() { return engine_(); }

std::uint64_t SeededRng::below(std::uint64_t bound) {
    // rejection sampling keeps the draw unbiased
    const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % bound);
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

Circuit gen_qft(int n, bool with_reversal) {
    if (n < 1) throw InvalidCircuit("gen_qft: n must be >= 1");
    std::vector<Gate> gates;
    gates.reserve(static_cast<std::size_t>(n) + static_cast<std::size_t>(n) * (n - 1) / 2 +
                  (with_reversal ? n / 2 : 0));
    for (int i = 0; i < n; ++i) {
        gates.push_back(Gate::h(i));
        for (int j = i + 1; j < n; ++j) {
            gates.push_back(Gate::cphase(j, i, std::numbers::pi / std::ldexp(1.0, j - i)));
        }
    }
    if (with_reversal) {
        for (int i = 0; i < n / 2; ++i) gates.push_back(Gate::swap(i, n - 1 - i));
    }
    return Circuit(n, std::move(gates), "qft" + std::to_string(n));
}

Circuit gen_random(int n, int gates, double p2, std::uint64_t seed) {
    if (!(p2 >= 0.0 && p2 <= 1.0)) throw InvalidCircuit("gen_random: p2 must lie in [0, 1]");
    if (gates < 0) throw InvalidCircuit("gen_random: gate count must be >= 0");
    if (n < 1) throw InvalidCircuit("gen_random: n must be >= 1");
    if (p2 > 0.0 && n < 2) throw InvalidCircuit("gen_random: two-qubit gates need n >= 2");

    const auto n_two = static_cast<std::size_t>(std::llround(p2 * gates));
    SeededRng rng(seed);

    // choose exactly n_two positions for two-qubit gates (partial Fisher-Yates)
    std::vector<int> order(static_cast<std::size_t>(gates));
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = 0; i < n_two; ++i) {
        const std::size_t j = i + rng.below(order.size() - i);
        std::swap(order[i], order[j]);
    }
    std::vector<bool> two(static_cast<std::size_t>(gates), false);
    for (std::size_t i = 0; i < n_two; ++i) two[static_cast<std::size_t>(order[i])] = true;

    std::vector<Gate> out;
    out.reserve(static_cast<std::size_t>(gates));
    const auto un = static_cast<std::uint64_t>(n);
    for (int i = 0; i < gates; ++i) {
        if (two[static_cast<std::size_t>(i)]) {
            const auto a = static_cast<VirtualId>(rng.below(un));
            auto b = static_cast<VirtualId>(rng.below(un - 1));
            if (b >= a) ++b;
            if (rng.below(2) == 0) {
                out.push_back(Gate::cnot(a, b));
            } else {
                const auto k = static_cast<int>(rng.below(8)) + 1;
                out.push_back(Gate::cphase(a, b, std::numbers::pi / std::ldexp(1.0, k)));
            }
        } else {
            const auto q = static_cast<VirtualId>(rng.below(un));
            out.push_back(rng.below(2) == 0 ? Gate::x(q) : Gate::h(q));
        }
    }
    return Circuit(n, std::move(out), "random_n" + std::to_string(n) + "_g" + std::to_string(gates) +
                                          "_s" + std::to_string(seed));
}

}  // namespace qmap
