#pragma once

#include <vector>

#include "gz/oracle/group.hpp"
#include "gz/zeta/identity.hpp"

namespace gz {

// Eigenvector, normalization, display and trace checks for the GL2 and GSp4
// local vectors, evaluated exactly at a concrete prime.
// A non-empty list restricts the run to those ids.
std::vector<VerificationReport> verifyLocalVectors(unsigned long p, int jobs = 1,
                                                   const std::vector<std::string>& only = {});

// Ids produced by verifyLocalVectors.
std::vector<std::string> localVectorCheckIds();

// Cardinalities of the enumerated coset systems (depth 1, and depth 2 when
// maxLevel >= 2).
std::vector<VerificationReport> cosetCardinalityChecks(unsigned long p, int maxLevel = 1,
                                                       const std::vector<std::string>& only = {});
std::vector<std::string> cosetCheckIds(unsigned long p, int maxLevel = 1);

// The three volume indices and the trivial one, each as exact orbit size and
// enumeration modulo p^n.
std::vector<VerificationReport> indexChecks(unsigned long p, const std::vector<std::string>& only = {});
std::vector<std::string> indexCheckIds(unsigned long p);

}  // namespace gz
