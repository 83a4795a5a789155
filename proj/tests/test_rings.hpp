#pragma once

#include "fusionrank/fusion.hpp"

namespace testing_support {

/// Z/3 group ring; "1" and "2" are dual to each other.
inline fusionrank::FusionData z3_ring() {
    fusionrank::FusionData d;
    d.labels = {"0", "1", "2"};
    d.vacuum = "0";
    d.dual = {{"0", "0"}, {"1", "2"}, {"2", "1"}};
    d.set_rank3("0", "0", "0", 1);
    d.set_rank3("0", "1", "2", 1);
    d.set_rank3("1", "1", "1", 1);
    d.set_rank3("2", "2", "2", 1);
    return d;
}

/// Ising: s (x) s = 1 + p, s (x) p = s, p (x) p = 1.
inline fusionrank::FusionData ising_ring() {
    fusionrank::FusionData d;
    d.labels = {"1", "s", "p"};
    d.vacuum = "1";
    d.dual = {{"1", "1"}, {"s", "s"}, {"p", "p"}};
    d.set_rank3("1", "1", "1", 1);
    d.set_rank3("1", "s", "s", 1);
    d.set_rank3("1", "p", "p", 1);
    d.set_rank3("s", "s", "p", 1);
    return d;
}

}  // namespace testing_support
