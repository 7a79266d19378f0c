#pragma once

#include <utility>
#include <vector>

#include "snakechar/cartan.hpp"

namespace snakechar {

// A snake is a finite sequence (i_t, k_t) of points of X with each successive
// point in snake position with respect to the previous one.
struct Snake {
    LieType lie_type;
    std::vector<std::pair<int, int>> points;  // (i_t, k_t)

    friend auto operator<=>(const Snake&, const Snake&) = default;
};

enum class SnakePos { NotSnake, Snake, MinimalSnake };

// Relative position of (i2,k2) with respect to (i1,k1); both must lie in X.
SnakePos snake_position(const CartanData& cd, int i1, int k1, int i2, int k2);

struct SnakeClass {
    bool is_snake = false;
    bool is_minimal = false;                // minimal snake
    bool is_minimal_affinization = false;   // minimal and (i_t) monotone
};

SnakeClass classify_snake(const CartanData& cd,
                          const std::vector<std::pair<int, int>>& points);

// Throws std::domain_error unless the points form a snake.
Snake make_snake(const CartanData& cd,
                 const std::vector<std::pair<int, int>>& points);

}  // namespace snakechar
