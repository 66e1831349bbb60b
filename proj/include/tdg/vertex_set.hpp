#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tdg
{
    using Vertex = unsigned;

    /// Largest graph order representable by a VertexSet.
    inline constexpr unsigned max_order = 64;

    /// A set of vertices of one graph, stored as a 64-bit mask.
    /// Iteration is in ascending vertex order.
    class VertexSet
    {
    public:
        constexpr VertexSet() noexcept = default;
        constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}

        static constexpr auto of(std::initializer_list<Vertex> vs) noexcept -> VertexSet
        {
            VertexSet out;
            for (auto v : vs)
                out.insert(v);
            return out;
        }

        static constexpr auto full(unsigned order) noexcept -> VertexSet
        {
            return VertexSet{order >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << order) - 1)};
        }

        static constexpr auto singleton(Vertex v) noexcept -> VertexSet { return VertexSet{std::uint64_t{1} << v}; }

        constexpr auto bits() const noexcept -> std::uint64_t { return bits_; }
        constexpr auto contains(Vertex v) const noexcept -> bool { return (bits_ >> v) & 1U; }
        constexpr auto empty() const noexcept -> bool { return bits_ == 0; }
        constexpr auto size() const noexcept -> unsigned { return static_cast<unsigned>(std::popcount(bits_)); }
        constexpr auto first() const noexcept -> Vertex { return static_cast<Vertex>(std::countr_zero(bits_)); }

        constexpr void insert(Vertex v) noexcept { bits_ |= std::uint64_t{1} << v; }
        constexpr void erase(Vertex v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }

        constexpr auto subset_of(VertexSet o) const noexcept -> bool { return (bits_ & ~o.bits_) == 0; }

        constexpr auto operator|(VertexSet o) const noexcept -> VertexSet { return VertexSet{bits_ | o.bits_}; }
        constexpr auto operator&(VertexSet o) const noexcept -> VertexSet { return VertexSet{bits_ & o.bits_}; }
        constexpr auto operator-(VertexSet o) const noexcept -> VertexSet { return VertexSet{bits_ & ~o.bits_}; }
        constexpr auto operator|=(VertexSet o) noexcept -> VertexSet &
        {
            bits_ |= o.bits_;
            return *this;
        }
        constexpr auto operator&=(VertexSet o) noexcept -> VertexSet &
        {
            bits_ &= o.bits_;
            return *this;
        }
        constexpr auto operator==(const VertexSet &) const noexcept -> bool = default;

        class iterator
        {
        public:
            using value_type = Vertex;
            using difference_type = std::ptrdiff_t;

            constexpr iterator() noexcept = default;
            constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
            constexpr auto operator*() const noexcept -> Vertex { return static_cast<Vertex>(std::countr_zero(rest_)); }
            constexpr auto operator++() noexcept -> iterator &
            {
                rest_ &= rest_ - 1;
                return *this;
            }
            constexpr auto operator++(int) noexcept -> iterator
            {
                auto copy = *this;
                ++*this;
                return copy;
            }
            constexpr auto operator==(const iterator &) const noexcept -> bool = default;

        private:
            std::uint64_t rest_ = 0;
        };

        constexpr auto begin() const noexcept -> iterator { return iterator{bits_}; }
        constexpr auto end() const noexcept -> iterator { return iterator{0}; }

        auto to_vector() const -> std::vector<Vertex> { return {begin(), end()}; }

    private:
        std::uint64_t bits_ = 0;
    };

    /// "{0,3,5}"
    auto to_string(VertexSet s) -> std::string;
}
