#pragma once

#include <string>
#include <vector>

#include "doctest.h"
#include "zonocube/colors.hpp"

namespace testing {

/// Digit-word shorthand: S("246") is {2,4,6}, S("") the empty set.
inline zonocube::ColorSet S(const std::string& word) {
  std::vector<int> colors;
  for (char ch : word) colors.push_back(ch - '0');
  return zonocube::ColorSet::from_sequence(colors);
}

/// Space separated digit words.
inline std::vector<zonocube::ColorSet> Sets(const std::string& words) {
  std::vector<zonocube::ColorSet> out;
  std::string w;
  for (char ch : words + " ") {
    if (ch == ' ') {
      if (!w.empty()) out.push_back(w == "0" ? zonocube::ColorSet{} : S(w));
      w.clear();
    } else {
      w += ch;
    }
  }
  return out;
}

}  // namespace testing
