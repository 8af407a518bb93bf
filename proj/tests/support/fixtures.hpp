#pragma once

#include <crnbinom/parse.hpp>

namespace fixtures {

// The three golden networks used throughout the suite.
inline constexpr const char* kIntro = "A + B <=> C <=> A + 2 D\n";
inline constexpr const char* kExample2 = "2 A + B <=> C <=> A <=> 2 B\n";
inline constexpr const char* kExample3 = "3 B <=> 2 C + A <=> 2 D + 2 B <=> 3 B\n";

inline crnbinom::ReactionNetwork intro() {
    return crnbinom::parse_network(kIntro).network;
}
inline crnbinom::ReactionNetwork example2() {
    return crnbinom::parse_network(kExample2).network;
}
inline crnbinom::ReactionNetwork example3() {
    return crnbinom::parse_network(kExample3).network;
}

}  // namespace fixtures
