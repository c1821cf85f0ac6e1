#pragma once

// Whole-type invariant sweeps shared by the command line and the test suite.

#include "mfcat/stability.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mfcat {

/// verify_mf and verify_grading for every vertex.
CheckReport catalog_soundness(const ADEType& t, int b);
/// Computed C(k, k') against golden_multiset for every pair.
CheckReport table3_check(const ADEType& t, int b);
/// Heart size, positive-root count and l*h/2 agree; nu_k is the highest-root coefficient.
CheckReport counting_check(const ADEType& t, int b);
/// Principal collection (n = 0, phases in [1/h, 2/h]) plus `random` random orientations.
CheckReport exceptional_suite(const ADEType& t, int b, int random, unsigned long seed);
/// Random nonzero basis classes over the given types, each multiplied by a random df/dx_v.
CheckReport jacobi_sample(const std::vector<TypeParam>& types, int count, unsigned long seed);

struct SuiteStep {
  std::string name;
  CheckReport report;
  double seconds = 0;
};

/// Every check above plus the coproduct recursion, shape, Serre, AR, irreducibility, stability and projectivity.
std::vector<SuiteStep> verify_type(const ADEType& t, int b,
                                   const std::function<void(const SuiteStep&)>& on_step = {});

}  // namespace mfcat
