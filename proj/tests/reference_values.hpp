#pragma once

// Published invariants N_{d,alpha} for d <= 7 (alpha >= 2, descending) and
// the degree 10/11 classes with alpha >= 3.

#include "gwblowup/lattice.hpp"

#include <string>
#include <vector>

namespace gwb::testing {

struct Published {
    int d;
    std::vector<int> alpha;
    const char* value;
};

// Degrees 1..5, complete.
inline const std::vector<Published>& low_degree_table() {
    static const std::vector<Published> t = {
        {1, {}, "1"},
        {2, {}, "1"},
        {3, {}, "12"},
        {3, {2}, "1"},
        {4, {}, "620"},
        {4, {2}, "96"},
        {4, {2, 2}, "12"},
        {4, {2, 2, 2}, "1"},
        {4, {3}, "1"},
        {5, {}, "87304"},
        {5, {2}, "18132"},
        {5, {2, 2}, "3510"},
        {5, {2, 2, 2}, "620"},
        {5, {2, 2, 2, 2}, "96"},
        {5, {2, 2, 2, 2, 2}, "12"},
        {5, {2, 2, 2, 2, 2, 2}, "1"},
        {5, {3}, "640"},
        {5, {3, 2}, "96"},
        {5, {3, 2, 2}, "12"},
        {5, {3, 2, 2, 2}, "1"},
        {5, {4}, "1"},
    };
    return t;
}

// Degrees 6 and 7, leaving out classes reachable from lower degree by a
// Cremona transformation.
inline const std::vector<Published>& high_degree_table() {
    static const std::vector<Published> t = {
        {6, {}, "26312976"},
        {6, {2}, "6506400"},
        {6, {2, 2}, "1558272"},
        {6, {2, 2, 2}, "359640"},
        {6, {2, 2, 2, 2}, "79416"},
        {6, {2, 2, 2, 2, 2}, "16608"},
        {6, {2, 2, 2, 2, 2, 2}, "3240"},
        {6, {2, 2, 2, 2, 2, 2, 2}, "576"},
        {6, {2, 2, 2, 2, 2, 2, 2, 2}, "90"},
        {6, {3}, "401172"},
        {6, {3, 2}, "87544"},
        {6, {4}, "3840"},
        {7, {}, "14616808192"},
        {7, {2}, "4059366000"},
        {7, {2, 2}, "1108152240"},
        {7, {2, 2, 2}, "296849546"},
        {7, {2, 2, 2, 2}, "77866800"},
        {7, {2, 2, 2, 2, 2}, "19948176"},
        {7, {2, 2, 2, 2, 2, 2}, "4974460"},
        {7, {2, 2, 2, 2, 2, 2, 2}, "1202355"},
        {7, {2, 2, 2, 2, 2, 2, 2, 2}, "280128"},
        {7, {2, 2, 2, 2, 2, 2, 2, 2, 2}, "62450"},
        {7, {2, 2, 2, 2, 2, 2, 2, 2, 2, 2}, "13188"},
        {7, {3}, "347987200"},
        {7, {3, 2}, "90777600"},
        {7, {3, 2, 2}, "23133696"},
        {7, {3, 2, 2, 2}, "5739856"},
        {7, {3, 2, 2, 2, 2}, "1380648"},
        {7, {3, 2, 2, 2, 2, 2}, "320160"},
        {7, {3, 2, 2, 2, 2, 2, 2}, "71040"},
        {7, {3, 2, 2, 2, 2, 2, 2, 2}, "14928"},
        {7, {3, 2, 2, 2, 2, 2, 2, 2, 2}, "2928"},
        {7, {3, 3}, "6508640"},
        {7, {4}, "7492040"},
        {7, {4, 2}, "1763415"},
        {7, {5}, "21504"},
    };
    return t;
}

inline const std::vector<Published>& cremona_targets() {
    static const std::vector<Published> t = {
        {10, {4, 4, 3, 3, 3, 3, 3, 3, 3}, "520"},
        {10, {5, 3, 3, 3, 3, 3, 3, 3, 3}, "90"},
        {11, {5, 3, 3, 3, 3, 3, 3, 3, 3, 3}, "707328"},
        {11, {4, 4, 3, 3, 3, 3, 3, 3, 3, 3}, "2350228"},
    };
    return t;
}

}  // namespace gwb::testing
