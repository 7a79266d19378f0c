#include "snakechar/snakes.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "snakechar/lattice.hpp"

namespace snakechar {

namespace {
int mod4(int x) { return ((x % 4) + 4) % 4; }
}  // namespace

SnakePos snake_position(const CartanData& cd, int i1, int k1, int i2, int k2) {
    for (auto [i, k] : {std::pair{i1, k1}, std::pair{i2, k2}})
        if (!in_X(cd, i, k))
            throw std::domain_error("snake_position: (" + std::to_string(i) + "," +
                                    std::to_string(k) + ") not in X");
    const int n = cd.N();
    const int dk = k2 - k1;
    const int di = std::abs(i2 - i1);
    int bound;
    if (cd.lie_type.kind == Kind::A) {
        bound = di + 2;
    } else if (i1 == n && i2 == n) {
        if (mod4(dk) != 2) return SnakePos::NotSnake;
        bound = 2;
    } else if (i1 == n || i2 == n) {
        if (mod4(dk) != mod4(2 * di - 1)) return SnakePos::NotSnake;
        bound = 2 * di + 3;
    } else {
        if (mod4(dk) != mod4(2 * di)) return SnakePos::NotSnake;
        bound = 2 * di + 4;
    }
    if (dk < bound) return SnakePos::NotSnake;
    return dk == bound ? SnakePos::MinimalSnake : SnakePos::Snake;
}

SnakeClass classify_snake(const CartanData& cd,
                          const std::vector<std::pair<int, int>>& points) {
    SnakeClass sc;
    sc.is_snake = true;
    sc.is_minimal = true;
    for (auto [i, k] : points)
        if (!in_X(cd, i, k))
            throw std::domain_error("classify_snake: (" + std::to_string(i) + "," +
                                    std::to_string(k) + ") not in X");
    for (std::size_t t = 0; t + 1 < points.size(); ++t) {
        const SnakePos sp = snake_position(cd, points[t].first, points[t].second,
                                           points[t + 1].first, points[t + 1].second);
        if (sp == SnakePos::NotSnake) sc.is_snake = false;
        if (sp != SnakePos::MinimalSnake) sc.is_minimal = false;
    }
    if (!sc.is_snake) sc.is_minimal = false;
    bool up = true, down = true;
    for (std::size_t t = 0; t + 1 < points.size(); ++t) {
        if (points[t].first > points[t + 1].first) up = false;
        if (points[t].first < points[t + 1].first) down = false;
    }
    sc.is_minimal_affinization = sc.is_minimal && (up || down);
    return sc;
}

Snake make_snake(const CartanData& cd,
                 const std::vector<std::pair<int, int>>& points) {
    if (points.empty()) throw std::domain_error("make_snake: empty snake");
    const SnakeClass sc = classify_snake(cd, points);
    if (!sc.is_snake) {
        for (std::size_t t = 0; t + 1 < points.size(); ++t)
            if (snake_position(cd, points[t].first, points[t].second, points[t + 1].first,
                               points[t + 1].second) == SnakePos::NotSnake)
                throw std::domain_error(
                    "make_snake: (" + std::to_string(points[t + 1].first) + "," +
                    std::to_string(points[t + 1].second) + ") not in snake position after (" +
                    std::to_string(points[t].first) + "," + std::to_string(points[t].second) +
                    ")");
    }
    return Snake{cd.lie_type, points};
}

}  // namespace snakechar
