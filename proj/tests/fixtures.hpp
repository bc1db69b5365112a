#pragma once

#include <string>

namespace fixtures {

// Standard table codes; the same strings ship in data/census.json.
inline const char* kUnknot = "unknot(1)";
inline const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
inline const char* kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
inline const char* kFiveOne = "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]";
inline const char* kHopf = "X[4,1,3,2] X[2,3,1,4]";
inline const char* kKink = "X[1,2,2,1]";  // 1-crossing reducible kink, writhe -1

inline std::string census_path() { return std::string(EDGENUM_DATA_DIR) + "/census.json"; }

}  // namespace fixtures
