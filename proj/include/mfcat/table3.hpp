#pragma once

// Reference values of the multisets C(k, k'): printed grids for E6, E7, E8 and
// closed formulas for A_l and D_l.

#include "mfcat/homcat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mfcat {

/// Parses "1 3 5^2 7"; throws std::invalid_argument.
Multiset parse_multiset(const std::string& s);

/// A printed E-type entry that disagrees with Serre symmetry or the mesh recursion.
struct Erratum {
  int l;  // E_l
  int k, kp;
  std::string printed;
  std::string corrected;
};
const std::vector<Erratum>& table3_errata();

/// Printed E_l entry, before errata.
std::string e_printed(int l, int k, int kp);

/// A_l closed formula (independent of b).
Multiset a_formula(int l, int k, int kp);
/// D_l formulas: row 1, the generic two-run rows, and the leaf rows by parity of l.
Multiset d_formula(int l, int k, int kp);

/// Reference C(k, k') for any ADE type, with errata applied for E types.
Multiset golden_multiset(const ADEType& t, int k, int kp);

}  // namespace mfcat
