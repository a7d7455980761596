#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gz/params/context.hpp"

namespace gz {

enum class TableId { gsp4, gsp4xgl2, triple };

TableId tableFromName(std::string_view name);
std::string_view tableName(TableId id);

// Images of q, alpha, beta, a1, b1, a2, b2 over the extended unit symbols.
const Substitution& relabelTable(TableId id);

RationalFunction relabel(TableId id, const RationalFunction& f);

// The relabeled Hecke parameter written in the application's variables: for
// alpha and beta this is the variable itself, for gamma and delta it is the
// image of the derived expression with the table's scaling removed.
RationalFunction relabeledParam(TableId id, Param p);

struct ValuationSplit {
  std::vector<std::string> small;    // valuation <= threshold
  std::vector<std::string> large;    // valuation >= threshold + gap
  std::vector<std::string> between;  // neither; reported, not fatal
};

// Partition of the products lambda*mu, lambda in {alpha..delta}, mu in
// {a2, b2}, by valuation. Keys of vals: alpha, beta, gamma, delta, a2, b2.
ValuationSplit valuationSplit(const std::map<std::string, Rational>& vals, const Rational& threshold,
                              const Rational& gap = Rational(1));

}  // namespace gz
