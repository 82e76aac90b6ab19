#pragma once

#include <cstdint>
#include <string>

#include "rees/groebner.hpp"

namespace rees {

// Grade (= height, over our Cohen-Macaulay base rings) of an ideal, with the
// distinguished value INFINITY reserved for the unit ideal.
struct GradeValue {
    bool is_infinite = false;
    std::int64_t value = 0;

    static GradeValue infinite() { return {true, 0}; }
    static GradeValue finite(std::int64_t v) { return {false, v}; }

    bool at_least(std::int64_t bound) const { return is_infinite || value >= bound; }
    std::string to_string() const { return is_infinite ? "infinity" : std::to_string(value); }

    friend bool operator==(const GradeValue& a, const GradeValue& b) {
        return a.is_infinite == b.is_infinite && (a.is_infinite || a.value == b.value);
    }
};

// Krull dimension of ring/I via the initial ideal: the dimension equals the
// size of the largest variable subset containing no leading-term support.
// Requires I proper; the unit ideal has an empty variety and no dimension.
std::int64_t krull_dimension(const Ideal& I, const MonomialOrder& ord);
std::int64_t krull_dimension(const Ideal& I);

GradeValue grade(const Ideal& I);
bool grade_at_least(const Ideal& I, std::int64_t bound);

}  // namespace rees
