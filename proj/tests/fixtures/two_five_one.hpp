#pragma once
// Generated reference data for the regression and acceptance suites.
// Do not edit by hand.

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

struct ProgressionCase {
    std::string word;
    int level;
    std::vector<std::vector<int>> chords; // second, fifth, first degree chords
};

inline const std::vector<ProgressionCase> two_five_one_tables = {
    {"major", 1, {{2,5,9},{7,11,2},{0,4,7}}},
    {"major", 2, {{2,5,9,0},{7,11,2,5},{0,4,7,11}}},
    {"major", 3, {{2,5,9,0,4},{7,11,2,5,9},{0,4,7,11,2}}},
    {"major", 4, {{2,5,9,0,4,7},{7,11,2,5,9,0},{0,4,7,11,2,5}}},
    {"major", 5, {{2,5,9,0,4,7,11},{7,11,2,5,9,0,4},{0,4,7,11,2,5,9}}},
    {"minor", 1, {{2,5,8},{7,10,2},{0,3,7}}},
    {"minor", 2, {{2,5,8,0},{7,10,2,5},{0,3,7,10}}},
    {"minor", 3, {{2,5,8,0,3},{7,10,2,5,8},{0,3,7,10,2}}},
    {"minor", 4, {{2,5,8,0,3,7},{7,10,2,5,8,0},{0,3,7,10,2,5}}},
    {"minor", 5, {{2,5,8,0,3,7,10},{7,10,2,5,8,0,3},{0,3,7,10,2,5,8}}},
    {"harmonicminor", 1, {{2,5,8},{7,11,2},{0,3,7}}},
    {"harmonicminor", 2, {{2,5,8,0},{7,11,2,5},{0,3,7,11}}},
    {"harmonicminor", 3, {{2,5,8,0,3},{7,11,2,5,8},{0,3,7,11,2}}},
    {"harmonicminor", 4, {{2,5,8,0,3,7},{7,11,2,5,8,0},{0,3,7,11,2,5}}},
    {"harmonicminor", 5, {{2,5,8,0,3,7,11},{7,11,2,5,8,0,3},{0,3,7,11,2,5,8}}},
    {"dorian", 1, {{2,5,9},{7,10,2},{0,3,7}}},
    {"dorian", 2, {{2,5,9,0},{7,10,2,5},{0,3,7,10}}},
    {"dorian", 3, {{2,5,9,0,3},{7,10,2,5,9},{0,3,7,10,2}}},
    {"dorian", 4, {{2,5,9,0,3,7},{7,10,2,5,9,0},{0,3,7,10,2,5}}},
    {"dorian", 5, {{2,5,9,0,3,7,10},{7,10,2,5,9,0,3},{0,3,7,10,2,5,9}}},
    {"phrigian", 1, {{1,5,8},{7,10,1},{0,3,7}}},
    {"phrigian", 2, {{1,5,8,0},{7,10,1,5},{0,3,7,10}}},
    {"phrigian", 3, {{1,5,8,0,3},{7,10,1,5,8},{0,3,7,10,1}}},
    {"phrigian", 4, {{1,5,8,0,3,7},{7,10,1,5,8,0},{0,3,7,10,1,5}}},
    {"phrigian", 5, {{1,5,8,0,3,7,10},{7,10,1,5,8,0,3},{0,3,7,10,1,5,8}}},
    {"lydian", 1, {{2,6,9},{7,11,2},{0,4,7}}},
    {"lydian", 2, {{2,6,9,0},{7,11,2,6},{0,4,7,11}}},
    {"lydian", 3, {{2,6,9,0,4},{7,11,2,6,9},{0,4,7,11,2}}},
    {"lydian", 4, {{2,6,9,0,4,7},{7,11,2,6,9,0},{0,4,7,11,2,6}}},
    {"lydian", 5, {{2,6,9,0,4,7,11},{7,11,2,6,9,0,4},{0,4,7,11,2,6,9}}},
    {"mixolydian", 1, {{2,5,9},{7,10,2},{0,4,7}}},
    {"mixolydian", 2, {{2,5,9,0},{7,10,2,5},{0,4,7,10}}},
    {"mixolydian", 3, {{2,5,9,0,4},{7,10,2,5,9},{0,4,7,10,2}}},
    {"mixolydian", 4, {{2,5,9,0,4,7},{7,10,2,5,9,0},{0,4,7,10,2,5}}},
    {"mixolydian", 5, {{2,5,9,0,4,7,10},{7,10,2,5,9,0,4},{0,4,7,10,2,5,9}}},
    {"locrian", 1, {{1,5,8},{6,10,1},{0,3,6}}},
    {"locrian", 2, {{1,5,8,0},{6,10,1,5},{0,3,6,10}}},
    {"locrian", 3, {{1,5,8,0,3},{6,10,1,5,8},{0,3,6,10,1}}},
    {"locrian", 4, {{1,5,8,0,3,6},{6,10,1,5,8,0},{0,3,6,10,1,5}}},
    {"locrian", 5, {{1,5,8,0,3,6,10},{6,10,1,5,8,0,3},{0,3,6,10,1,5,8}}},
    {"tziganminor", 1, {{2,6,8},{7,11,2},{0,3,7}}},
    {"tziganminor", 2, {{2,6,8,0},{7,11,2,6},{0,3,7,11}}},
    {"tziganminor", 3, {{2,6,8,0,3},{7,11,2,6,8},{0,3,7,11,2}}},
    {"tziganminor", 4, {{2,6,8,0,3,7},{7,11,2,6,8,0},{0,3,7,11,2,6}}},
    {"tziganminor", 5, {{2,6,8,0,3,7,11},{7,11,2,6,8,0,3},{0,3,7,11,2,6,8}}},
    {"jewish", 1, {{1,5,8},{7,10,1},{0,4,7}}},
    {"jewish", 2, {{1,5,8,0},{7,10,1,5},{0,4,7,10}}},
    {"jewish", 3, {{1,5,8,0,4},{7,10,1,5,8},{0,4,7,10,1}}},
    {"jewish", 4, {{1,5,8,0,4,7},{7,10,1,5,8,0},{0,4,7,10,1,5}}},
    {"jewish", 5, {{1,5,8,0,4,7,10},{7,10,1,5,8,0,4},{0,4,7,10,1,5,8}}},
    {"majorpentatonic", 1, {{2,7,0},{9,2,7},{0,4,9}}},
    {"majorpentatonic", 2, {{2,7,0,4},{9,2,7,0},{0,4,9,2}}},
    {"majorpentatonic", 3, {{2,7,0,4,9},{9,2,7,0,4},{0,4,9,2,7}}},
    {"minorpentatonic", 1, {{5,10,3},{0,5,10},{3,7,0}}},
    {"minorpentatonic", 2, {{5,10,3,7},{0,5,10,3},{3,7,0,5}}},
    {"minorpentatonic", 3, {{5,10,3,7,0},{0,5,10,3,7},{3,7,0,5,10}}},
    {"blues", 1, {{3,6,10},{7,0,5},{0,5,7}}},
    {"esatonal", 1, {{2,6,10},{8,0,4},{0,4,8}}},
    {"augmented", 1, {{3,7,11},{8,0,4},{0,4,8}}},
    {"halfwholediminished", 1, {{1,4,7},{6,9,0},{0,3,6}}},
    {"halfwholediminished", 2, {{1,4,7,10},{6,9,0,3},{0,3,6,9}}},
    {"wholehalfdiminished", 1, {{2,5,8},{6,9,0},{0,3,6}}},
    {"wholehalfdiminished", 2, {{2,5,8,11},{6,9,0,3},{0,3,6,9}}},
    {"wholetonediminished", 1, {{1,4,8},{6,10,1},{0,3,6}}},
    {"wholetonediminished", 2, {{1,4,8,0},{6,10,1,4},{0,3,6,10}}},
    {"wholetonediminished", 3, {{1,4,8,0,3},{6,10,1,4,8},{0,3,6,10,1}}},
    {"wholetonediminished", 4, {{1,4,8,0,3,6},{6,10,1,4,8,0},{0,3,6,10,1,4}}},
    {"wholetonediminished", 5, {{1,4,8,0,3,6,10},{6,10,1,4,8,0,3},{0,3,6,10,1,4,8}}},
    {"bebopmajor", 1, {{2,5,8},{7,9,0},{0,4,7}}},
    {"bebopmajor", 2, {{2,5,8,11},{7,9,0,4},{0,4,7,9}}},
    {"bebopdominant", 1, {{2,5,9},{7,10,0},{0,4,7}}},
    {"bebopdominant", 2, {{2,5,9,11},{7,10,0,4},{0,4,7,10}}},
    {"chromatic", 1, {{1,3,5},{4,6,8},{0,2,4}}},
    {"chromatic", 2, {{1,3,5,7},{4,6,8,10},{0,2,4,6}}},
    {"chromatic", 3, {{1,3,5,7,9},{4,6,8,10,0},{0,2,4,6,8}}},
    {"chromatic", 4, {{1,3,5,7,9,11},{4,6,8,10,0,2},{0,2,4,6,8,10}}},
};

} // namespace fixtures
