#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>

namespace coalign {

// Point of N^2; doubles as the degree of a 2-graph path.  The defaulted
// comparison is lexicographic and used for canonical ordering; the
// componentwise partial order is separate.
struct Vec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr auto operator<=>(const Vec2&, const Vec2&) = default;
};

constexpr bool componentwise_leq(Vec2 a, Vec2 b) { return a.x <= b.x && a.y <= b.y; }
constexpr Vec2 join(Vec2 a, Vec2 b) { return {std::max(a.x, b.x), std::max(a.y, b.y)}; }

// Unit vector along axis 1 or 2.
constexpr Vec2 unit2(int axis) { return axis == 1 ? Vec2{1, 0} : Vec2{0, 1}; }

inline std::string to_string(Vec2 p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace coalign
