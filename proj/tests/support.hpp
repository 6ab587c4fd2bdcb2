// Small helpers shared by the test binaries.
#pragma once

#include "qpoly/exact.hpp"

#include <initializer_list>
#include <vector>

namespace qpoly::test {

inline Vector ints(std::initializer_list<long> xs)
{
    Vector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

inline std::vector<Vector> points(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<Vector> out;
    for (auto r : rows)
        out.push_back(ints(r));
    return out;
}

}  // namespace qpoly::test
