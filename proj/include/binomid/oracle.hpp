#ifndef BINOMID_ORACLE_HPP
#define BINOMID_ORACLE_HPP

#include "binomid/ast.hpp"
#include "binomid/pivalue.hpp"

namespace binomid {

// Independent reference evaluator: no memoization, binomials recomputed
// from raw Gamma products on every use, sums accumulated strictly left
// to right. Shares only the big-integer primitives with eval_exact; used
// to cross-check it.
PiValue eval_oracle(const ExprPtr& expr, const ParamBinding& binding);

}  // namespace binomid

#endif
