#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace rsm {

enum class Side { Firm, Worker };

constexpr Side opposite(Side s) { return s == Side::Firm ? Side::Worker : Side::Firm; }

inline const char* side_name(Side s) { return s == Side::Firm ? "firm" : "worker"; }

struct AgentId {
    Side side = Side::Firm;
    int index = 0;

    friend bool operator==(const AgentId&, const AgentId&) = default;
};

// Bitmask over one side of the market. Agent i of the opposite side is bit i.
// The enumeration guards keep every side at or below 25 agents, so 32 bits is
// enough.
class AgentSet {
public:
    static constexpr int kMaxAgents = 32;

    constexpr AgentSet() = default;
    constexpr explicit AgentSet(std::uint32_t bits) : bits_(bits) {}

    static AgentSet of(std::initializer_list<int> members) {
        AgentSet s;
        for (int m : members) s.insert(m);
        return s;
    }
    static constexpr AgentSet all(int n) {
        return AgentSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
    constexpr bool subset_of(AgentSet o) const { return (bits_ & ~o.bits_) == 0; }

    void insert(int i) { bits_ |= std::uint32_t{1} << i; }
    void erase(int i) { bits_ &= ~(std::uint32_t{1} << i); }

    constexpr AgentSet operator|(AgentSet o) const { return AgentSet(bits_ | o.bits_); }
    constexpr AgentSet operator&(AgentSet o) const { return AgentSet(bits_ & o.bits_); }
    constexpr AgentSet without(AgentSet o) const { return AgentSet(bits_ & ~o.bits_); }

    // Members in ascending index order.
    std::vector<int> members() const {
        std::vector<int> out;
        for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    friend constexpr bool operator==(AgentSet, AgentSet) = default;
    friend constexpr auto operator<=>(AgentSet a, AgentSet b) { return a.bits_ <=> b.bits_; }

private:
    std::uint32_t bits_ = 0;
};

// "{w1,w3}" style rendering using 1-based indices and a side prefix.
std::string to_string(AgentSet s, Side members_side);

}  // namespace rsm
