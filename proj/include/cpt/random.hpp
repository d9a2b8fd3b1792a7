/**
 * Seeded generation of small rational inputs.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the C++
 * standard. Integers in [lo, hi] are drawn as lo + (x mod (hi - lo + 1)) from
 * one 64-bit output x; the standard distributions are avoided because their
 * algorithms vary between library implementations. A coordinate is
 * num / den with num drawn from [-10, 10] first, then den from [1, 4].
 */

#ifndef CPT_RANDOM_HPP
#define CPT_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "cpt/rational.hpp"

namespace cpt {

class RationalSampler
{
    public:
        static constexpr int numerator_bound = 10;
        static constexpr int denominator_bound = 4;

        explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

        std::uint64_t next() { return engine_(); }

        std::int64_t uniform_int(std::int64_t lo, std::int64_t hi)
        {
            const auto span = static_cast<std::uint64_t>(hi - lo + 1);
            return lo + static_cast<std::int64_t>(next() % span);
        }

        Rational coordinate()
        {
            const std::int64_t num = uniform_int(-numerator_bound, numerator_bound);
            const std::int64_t den = uniform_int(1, denominator_bound);
            return Rational(num, den);
        }

        Point point(int dim)
        {
            Point p(dim);
            for (int i = 0; i < dim; ++i)
                p(i) = coordinate();
            return p;
        }

        std::vector<Point> points(int count, int dim)
        {
            std::vector<Point> out;
            out.reserve(count);
            for (int i = 0; i < count; ++i)
                out.push_back(point(dim));
            return out;
        }

    private:
        std::mt19937_64 engine_;
};

}   // namespace cpt

#endif
