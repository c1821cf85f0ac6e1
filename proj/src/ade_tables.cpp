#include "ade_tables.hpp"

#include <stdexcept>
#include <string>

namespace mfcat::detail {

namespace {

// Y^+ = y^2 + I*z and Y^- = y^2 - I*z are written out in the E6 entries.
// E7 k=3 row 7, column 6 reads y: with y^2 the product is not f.
const std::vector<EEntry> kE6 = {
    {1, 4,
     {{"-z", "0", "x^2", "y^3"},
      {"0", "-z", "y", "-x"},
      {"x", "y^3", "z", "0"},
      {"y", "-x^2", "0", "z"}},
     {}},
    {2, 6,
     {{"-I*z", "-y^2", "x*y", "0", "x^2", "0"},
      {"-y^2", "-I*z", "0", "0", "0", "x"},
      {"0", "0", "-I*z", "-x", "0", "y"},
      {"0", "x*y", "-x^2", "-I*z", "y^3", "0"},
      {"x", "0", "0", "y", "-I*z", "0"},
      {"0", "x^2", "y^3", "0", "x*y^2", "-I*z"}},
     {{"I*z", "-y^2", "x*y", "0", "x^2", "0"},
      {"-y^2", "I*z", "0", "0", "0", "x"},
      {"0", "0", "I*z", "-x", "0", "y"},
      {"0", "x*y", "-x^2", "I*z", "y^3", "0"},
      {"x", "0", "0", "y", "I*z", "0"},
      {"0", "x^2", "y^3", "0", "x*y^2", "I*z"}}},
    {3, 4,
     {{"-(y^2-I*z)", "0", "x*y", "x"},
      {"-x*y", "(y^2+I*z)", "x^2", "0"},
      {"0", "x", "I*z", "y"},
      {"x^2", "-x*y", "y^3", "I*z"}},
     {{"-(y^2+I*z)", "0", "x*y", "x"},
      {"-x*y", "(y^2-I*z)", "x^2", "0"},
      {"0", "x", "-I*z", "y"},
      {"x^2", "-x*y", "y^3", "-I*z"}}},
    {4, 4,
     {{"-(y^2+I*z)", "0", "x*y", "x"},
      {"-x*y", "(y^2-I*z)", "x^2", "0"},
      {"0", "x", "-I*z", "y"},
      {"x^2", "-x*y", "y^3", "-I*z"}},
     {{"-(y^2-I*z)", "0", "x*y", "x"},
      {"-x*y", "(y^2+I*z)", "x^2", "0"},
      {"0", "x", "I*z", "y"},
      {"x^2", "-x*y", "y^3", "I*z"}}},
    {5, 2,
     {{"-(y^2-I*z)", "x"},
      {"x^2", "(y^2+I*z)"}},
     {{"-(y^2+I*z)", "x"},
      {"x^2", "(y^2-I*z)"}}},
    {6, 2,
     {{"-(y^2+I*z)", "x"},
      {"x^2", "(y^2-I*z)"}},
     {{"-(y^2-I*z)", "x"},
      {"x^2", "(y^2+I*z)"}}},
};

const std::vector<EEntry> kE7 = {
    {1, 4,
     {{"z", "0", "-x^2", "y"},
      {"0", "z", "x*y^2", "x"},
      {"-x", "y", "-z", "0"},
      {"x*y^2", "x^2", "0", "-z"}},
     {}},
    {2, 6,
     {{"-z", "y^2", "x*y", "0", "x^2", "0"},
      {"x*y", "z", "0", "0", "0", "-x"},
      {"0", "0", "z", "-x", "0", "y"},
      {"0", "-x*y", "-x^2", "-z", "x*y^2", "0"},
      {"x", "0", "0", "y", "z", "0"},
      {"0", "-x^2", "x*y^2", "0", "x^2*y", "-z"}},
     {}},
    {3, 8,
     {{"-z", "0", "x*y", "-y^2", "0", "0", "x^2", "0"},
      {"0", "-z", "0", "y^2", "0", "0", "0", "x"},
      {"y^2", "y^2", "z", "0", "0", "-x", "0", "0"},
      {"0", "x*y", "0", "z", "-x^2", "0", "0", "0"},
      {"0", "0", "0", "-x", "-z", "0", "0", "y"},
      {"0", "0", "-x^2", "0", "0", "-z", "x*y^2", "y^2"},
      {"x", "0", "0", "0", "-y^2", "y", "z", "0"},
      {"0", "x^2", "0", "0", "x*y^2", "0", "0", "z"}},
     {}},
    {4, 4,
     {{"-z", "y^2", "0", "x"},
      {"x*y", "z", "-x^2", "0"},
      {"0", "-x", "-z", "y"},
      {"x^2", "0", "x*y^2", "z"}},
     {}},
    {5, 6,
     {{"-z", "0", "x*y", "0", "0", "x"},
      {"-x*y", "z", "0", "-y^2", "-x^2", "0"},
      {"y^2", "0", "z", "-x", "x*y", "0"},
      {"0", "-x*y", "-x^2", "-z", "0", "0"},
      {"0", "-x", "0", "0", "-z", "-y"},
      {"x^2", "0", "0", "x*y", "-x*y^2", "z"}},
     {}},
    {6, 4,
     {{"z", "0", "-x*y", "x"},
      {"0", "z", "x^2", "y^2"},
      {"-y^2", "x", "-z", "0"},
      {"x^2", "x*y", "0", "-z"}},
     {}},
    {7, 2,
     {{"z", "x"},
      {"x^2+y^3", "-z"}},
     {}},
};

const std::vector<EEntry> kE8 = {
    {1, 4,
     {{"z", "0", "x", "y"},
      {"0", "z", "y^4", "-x^2"},
      {"x^2", "y", "-z", "0"},
      {"y^4", "-x", "0", "-z"}},
     {}},
    {2, 6,
     {{"z", "-y^2", "x*y", "0", "-x^2", "0"},
      {"-y^3", "-z", "0", "0", "0", "x"},
      {"0", "0", "-z", "x", "0", "y"},
      {"0", "-x*y", "x^2", "z", "y^4", "0"},
      {"-x", "0", "0", "y", "-z", "0"},
      {"0", "x^2", "y^4", "0", "-x*y^3", "z"}},
     {}},
    {3, 8,
     {{"-z", "0", "-x*y", "y^2", "0", "0", "x^2", "0"},
      {"0", "-z", "y^3", "0", "0", "0", "0", "x"},
      {"0", "y^2", "z", "0", "0", "-x", "0", "0"},
      {"y^3", "x*y", "0", "z", "-x^2", "0", "0", "0"},
      {"0", "0", "0", "-x", "-z", "0", "y^3", "y"},
      {"0", "0", "-x^2", "0", "0", "-z", "0", "y^2"},
      {"x", "0", "0", "0", "y^2", "-y", "z", "0"},
      {"0", "x^2", "0", "0", "0", "y^3", "0", "z"}},
     {}},
    {4, 10,
     {{"z", "0", "x*y", "0", "0", "-y^2", "y^3", "0", "-x^2", "0"},
      {"0", "-z", "0", "0", "0", "0", "0", "-y^2", "0", "x"},
      {"0", "0", "-z", "y^2", "0", "0", "0", "x", "0", "0"},
      {"0", "x*y", "y^3", "z", "0", "0", "-x^2", "0", "0", "0"},
      {"0", "y^2", "0", "0", "z", "-x", "0", "0", "y^3", "0"},
      {"-y^3", "0", "0", "0", "-x^2", "-z", "0", "0", "0", "y^2"},
      {"0", "0", "0", "-x", "0", "0", "-z", "0", "0", "y"},
      {"0", "-y^3", "x^2", "0", "0", "0", "x*y^2", "z", "0", "0"},
      {"-x", "0", "0", "0", "y^2", "0", "0", "y", "-z", "0"},
      {"0", "x^2", "x*y^2", "0", "0", "0", "y^4", "0", "0", "z"}},
     {}},
    {5, 12,
     {{"-z", "0", "0", "0", "0", "0", "0", "y^2", "0", "0", "0", "x"},
      {"0", "-z", "-x*y", "0", "0", "0", "y^3", "-y^2", "0", "0", "x^2", "0"},
      {"0", "0", "z", "0", "0", "-y^2", "0", "0", "y^3", "-x", "0", "0"},
      {"x*y", "0", "0", "z", "-y^3", "0", "0", "0", "-x^2", "0", "0", "0"},
      {"0", "0", "0", "-y^2", "-z", "0", "0", "x", "0", "0", "0", "0"},
      {"0", "0", "-y^3", "0", "0", "-z", "-x^2", "0", "0", "0", "x*y^2", "y^2"},
      {"y^2", "y^2", "0", "0", "0", "-x", "z", "0", "0", "0", "0", "0"},
      {"y^3", "0", "0", "0", "x^2", "0", "0", "z", "-x*y^2", "0", "0", "0"},
      {"0", "0", "0", "-x", "0", "0", "0", "0", "-z", "0", "0", "y"},
      {"0", "0", "-x^2", "-y^3", "0", "0", "x*y^2", "0", "0", "-z", "-y^4", "0"},
      {"0", "x", "0", "0", "y^2", "0", "0", "0", "0", "-y", "z", "0"},
      {"x^2", "0", "0", "0", "-x*y^2", "0", "0", "0", "y^4", "0", "0", "z"}},
     {}},
    {6, 6,
     {{"-z", "0", "0", "y^2", "0", "x"},
      {"x*y", "z", "-y^3", "0", "-x^2", "0"},
      {"0", "-y^2", "-z", "x", "0", "0"},
      {"y^3", "0", "x^2", "z", "-x*y^2", "0"},
      {"0", "-x", "0", "0", "-z", "y"},
      {"x^2", "0", "-x*y^2", "0", "y^4", "z"}},
     {}},
    {7, 8,
     {{"z", "0", "0", "0", "-y^3", "0", "0", "-x"},
      {"x*y", "-z", "0", "0", "0", "y^2", "x^2", "0"},
      {"0", "0", "-z", "y^2", "0", "x", "-y^3", "0"},
      {"0", "0", "0", "z", "-x^2", "0", "0", "y^2"},
      {"-y^2", "0", "0", "-x", "-z", "0", "0", "0"},
      {"0", "y^3", "x^2", "0", "x*y^2", "z", "0", "0"},
      {"0", "x", "-y^2", "0", "0", "0", "z", "y"},
      {"-x^2", "0", "0", "y^3", "0", "0", "0", "-z"}},
     {}},
    {8, 4,
     {{"z", "0", "x", "y^2"},
      {"0", "z", "y^3", "-x^2"},
      {"x^2", "y^2", "-z", "0"},
      {"y^3", "-x", "0", "-z"}},
     {}},
};

}  // namespace

const std::vector<EEntry>& e_table(int l) {
  switch (l) {
    case 6: return kE6;
    case 7: return kE7;
    case 8: return kE8;
    default: throw std::invalid_argument("no exceptional table for l=" + std::to_string(l));
  }
}

}  // namespace mfcat::detail
