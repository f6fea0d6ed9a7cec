#include "ehrhart/tables.hpp"

#include <algorithm>
#include <array>

namespace ehrhart {
namespace {

constexpr std::array<InvariantPair, 20> kDim4 = {{
    {5, 15},  {6, 20},  {6, 21},  {7, 25},  {7, 26},  {7, 27},  {8, 31},
    {8, 32},  {8, 33},  {8, 34},  {9, 36},  {9, 38},  {9, 39},  {9, 41},
    {9, 42},  {10, 44}, {10, 45}, {10, 50}, {11, 52}, {12, 60},
}};

constexpr std::array<InvariantPair, 29> kDim5 = {{
    {6, 21},  {7, 27},  {7, 28},  {8, 33},  {8, 34},  {8, 35},  {8, 36},  {9, 40},
    {9, 41},  {9, 42},  {9, 43},  {9, 44},  {10, 46}, {10, 49}, {10, 50}, {10, 51},
    {10, 52}, {10, 53}, {11, 56}, {11, 58}, {11, 59}, {11, 60}, {11, 61}, {11, 62},
    {12, 66}, {12, 67}, {12, 72}, {13, 76}, {14, 86},
}};

}  // namespace

std::span<const InvariantPair> smooth_invariant_pairs(int d) {
  switch (d) {
    case 4: return kDim4;
    case 5: return kDim5;
    default: return {};
  }
}

bool is_listed_pair(int d, int f0, int b2) {
  auto pairs = smooth_invariant_pairs(d);
  return std::find(pairs.begin(), pairs.end(), InvariantPair{f0, b2}) != pairs.end();
}

}  // namespace ehrhart
