#pragma once

// Matrix factorizations of the exceptional types, as expression strings.

#include <vector>

namespace mfcat::detail {

using StrMatrix = std::vector<std::vector<const char*>>;

struct EEntry {
  int k;
  int size;
  StrMatrix phi;
  StrMatrix psi;  // empty when psi = phi
};

const std::vector<EEntry>& e_table(int l);

}  // namespace mfcat::detail
