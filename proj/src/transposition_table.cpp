#include "tdg/transposition_table.hpp"

#include <algorithm>

namespace tdg
{
    TranspositionTable::TranspositionTable(bool concurrent) :
        concurrent_(concurrent),
        shards_(std::size_t{1} << shard_bits)
    {
        for (auto & s : shards_)
            s.slots.resize(1024);
    }

    auto TranspositionTable::hash(const StateKey & key) noexcept -> std::uint64_t
    {
        // splitmix64 finaliser over both words
        auto x = key.dominated * 0x9E3779B97F4A7C15ULL ^ (key.aux + 0x632BE59BD9B4E019ULL);
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ULL;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBULL;
        x ^= x >> 31;
        return x;
    }

    auto TranspositionTable::find(const StateKey & key) const -> std::optional<Bounds>
    {
        auto h = hash(key);
        auto & shard = shards_[h >> (64 - shard_bits)];
        std::unique_lock lock(shard.mutex, std::defer_lock);
        if (concurrent_)
            lock.lock();

        auto mask = shard.slots.size() - 1;
        for (auto i = h & mask;; i = (i + 1) & mask) {
            auto & slot = shard.slots[i];
            if (! (slot.aux & occupied))
                return std::nullopt;
            if (slot.dominated == key.dominated && (slot.aux & key_mask) == key.aux)
                return Bounds{static_cast<std::uint8_t>(slot.aux >> 40), static_cast<std::uint8_t>(slot.aux >> 48)};
        }
    }

    auto TranspositionTable::store(const StateKey & key, Bounds b, std::uint64_t limit) -> bool
    {
        auto h = hash(key);
        auto & shard = shards_[h >> (64 - shard_bits)];
        std::unique_lock lock(shard.mutex, std::defer_lock);
        if (concurrent_)
            lock.lock();

        auto mask = shard.slots.size() - 1;
        for (auto i = h & mask;; i = (i + 1) & mask) {
            auto & slot = shard.slots[i];
            if (! (slot.aux & occupied)) {
                if (size_.load(std::memory_order_relaxed) >= limit)
                    return false;
                slot.dominated = key.dominated;
                slot.aux = key.aux | occupied | (std::uint64_t{b.lower} << 40) | (std::uint64_t{b.upper} << 48);
                size_.fetch_add(1, std::memory_order_relaxed);
                if (++shard.used * 2 > shard.slots.size())
                    grow(shard);
                return true;
            }
            if (slot.dominated == key.dominated && (slot.aux & key_mask) == key.aux) {
                auto lower = std::max<std::uint8_t>(static_cast<std::uint8_t>(slot.aux >> 40), b.lower);
                auto upper = std::min<std::uint8_t>(static_cast<std::uint8_t>(slot.aux >> 48), b.upper);
                slot.aux = key.aux | occupied | (std::uint64_t{lower} << 40) | (std::uint64_t{upper} << 48);
                return true;
            }
        }
    }

    void TranspositionTable::grow(Shard & shard)
    {
        std::vector<Slot> old(shard.slots.size() * 2);
        old.swap(shard.slots);
        auto mask = shard.slots.size() - 1;
        for (auto & slot : old) {
            if (! (slot.aux & occupied))
                continue;
            auto h = hash(StateKey{slot.dominated, slot.aux & key_mask});
            auto i = h & mask;
            while (shard.slots[i].aux & occupied)
                i = (i + 1) & mask;
            shard.slots[i] = slot;
        }
    }

    void TranspositionTable::clear()
    {
        for (auto & s : shards_) {
            std::unique_lock lock(s.mutex, std::defer_lock);
            if (concurrent_)
                lock.lock();
            s.slots.assign(1024, Slot{});
            s.used = 0;
        }
        size_.store(0);
    }
}
