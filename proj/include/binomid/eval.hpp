#ifndef BINOMID_EVAL_HPP
#define BINOMID_EVAL_HPP

#include <string>
#include <vector>

#include "binomid/ast.hpp"
#include "binomid/bigfloat.hpp"
#include "binomid/exactval.hpp"
#include "binomid/pivalue.hpp"

namespace binomid {

// Exact evaluation over the pi-graded rationals. Throws OffGrid if the
// value carries residual Gamma factors that do not cancel.
PiValue eval_exact(const ExprPtr& expr, const ParamBinding& binding);

// Exact evaluation in the extended domain that keeps residual Gamma
// factors symbolic; verification compares here so a common symbolic
// factor on both sides still yields an exact result.
ExactValue eval_exact_value(const ExprPtr& expr, const ParamBinding& binding);

// Evaluation of a scalar (pure rational) subexpression: bounds,
// exponents, binomial arguments, guard subjects. Throws Undefined if the
// value is not rational.
Rational eval_scalar(const ExprPtr& expr, const ParamBinding& binding);

// Numeric evaluation at the given precision. Binomial and Gamma factors
// go through the numeric Gamma; pole detection stays exact because all
// scalar subexpressions are rational. Throws NumericPole at a numerator
// Gamma pole.
BigFloat eval_numeric(const ExprPtr& expr, const ParamBinding& binding,
                      int digits);

bool predicate_holds(const Predicate& pred, const ParamBinding& binding);

// The first right-hand case whose guard fires, or nullptr.
const CasedRhs* select_case(const Identity& ident, const ParamBinding& binding);

enum class Status { ExactEqual, NumericEqual, Mismatch, Skipped };

const char* status_name(Status s);

struct VerificationResult {
    std::string id;
    ParamBinding binding;
    Status status = Status::Skipped;
    std::string lhs;     // canonical value string (Mismatch and Equal)
    std::string rhs;
    double relerr = 0;   // numeric comparisons
    std::string note;    // Skipped reason
};

struct VerifyMode {
    bool numeric = false;
    int digits = 30;
};

// Verifies one instance; every failure mode is encoded in the status.
VerificationResult verify_instance(const Identity& ident,
                                   const ParamBinding& binding,
                                   const VerifyMode& mode);

// Per-parameter value lists, matched to the identity's declared
// parameters by name; parameters without a list get no variation and
// must not exist (ConfigError).
using SweepRanges = std::map<std::string, std::vector<Rational>>;

// Cartesian product in declared parameter order (outermost first);
// result order is deterministic regardless of the degree of parallelism.
std::vector<VerificationResult> sweep(const Identity& ident,
                                      const SweepRanges& ranges,
                                      const VerifyMode& mode, int jobs = 1);

}  // namespace binomid

#endif
