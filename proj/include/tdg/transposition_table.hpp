#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

namespace tdg
{
    /// Packed search-state key.  `aux` uses bits 0..39; bit 63 is reserved
    /// as the occupied marker and bits 40..55 carry the stored bounds.
    struct StateKey
    {
        std::uint64_t dominated;
        std::uint64_t aux;
        auto operator==(const StateKey &) const -> bool = default;
    };

    /// Inclusive bounds on the optimal remaining-move value; exact when equal.
    struct Bounds
    {
        std::uint8_t lower;
        std::uint8_t upper;
        auto exact() const noexcept -> bool { return lower == upper; }
    };

    /// Sharded open-addressing map from StateKey to Bounds.  Stores tighten
    /// existing bounds, so concurrent writers with consistent information
    /// converge on the same entry.
    class TranspositionTable
    {
    public:
        explicit TranspositionTable(bool concurrent);

        auto find(const StateKey & key) const -> std::optional<Bounds>;
        /// Returns false when the key was new and the table already holds `limit` entries.
        auto store(const StateKey & key, Bounds b, std::uint64_t limit) -> bool;
        auto size() const noexcept -> std::uint64_t { return size_.load(std::memory_order_relaxed); }
        void clear();

    private:
        static constexpr unsigned shard_bits = 6;
        static constexpr std::uint64_t occupied = std::uint64_t{1} << 63;
        static constexpr std::uint64_t key_mask = (std::uint64_t{1} << 40) - 1;

        struct Slot
        {
            std::uint64_t dominated = 0;
            std::uint64_t aux = 0;
        };

        struct Shard
        {
            mutable std::mutex mutex;
            std::vector<Slot> slots;
            std::uint64_t used = 0;
        };

        static auto hash(const StateKey & key) noexcept -> std::uint64_t;
        static void grow(Shard & shard);

        bool concurrent_;
        std::vector<Shard> shards_;
        std::atomic<std::uint64_t> size_{0};
    };
}
