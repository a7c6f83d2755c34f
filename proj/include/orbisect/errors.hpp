#ifndef ORBISECT_ERRORS_HPP
#define ORBISECT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orbisect {

/// An algebraic axiom failed on user-supplied data. Carries the location
/// (a path into the input document or the name of the offending object)
/// and a witness for the violation.
struct AxiomViolation : std::runtime_error {
    std::string path;
    std::string axiom;
    std::string witness;

    AxiomViolation(std::string path_, std::string axiom_, std::string witness_)
        : std::runtime_error("axiom violation at " + path_ + ": " + axiom_ +
                             (witness_.empty() ? "" : " (witness: " + witness_ + ")")),
          path(std::move(path_)), axiom(std::move(axiom_)), witness(std::move(witness_)) {}
};

struct ParseError : std::runtime_error {
    std::string path;

    ParseError(std::string path_, const std::string& what_)
        : std::runtime_error("parse error at " + path_ + ": " + what_), path(std::move(path_)) {}
};

/// A group exceeded the configured order cap (default 64).
struct OrderCapExceeded : std::runtime_error {
    int order;
    int cap;

    OrderCapExceeded(int order_, int cap_)
        : std::runtime_error("group order " + std::to_string(order_) +
                             " exceeds the configured cap " + std::to_string(cap_)),
          order(order_), cap(cap_) {}
};

/// A nerve / enumeration grew past the configured size budget.
struct SizeBudgetExceeded : std::runtime_error {
    long long budget;

    explicit SizeBudgetExceeded(long long budget_, const std::string& what_)
        : std::runtime_error(what_ + " (budget " + std::to_string(budget_) + ")"),
          budget(budget_) {}
};

struct DegreeOutOfRange : std::runtime_error {
    int degree;

    explicit DegreeOutOfRange(int degree_, const std::string& what_)
        : std::runtime_error(what_), degree(degree_) {}
};

/// A groupoid homomorphism that had to be faithful is not.
struct Unfaithful : std::runtime_error {
    explicit Unfaithful(const std::string& what_) : std::runtime_error(what_) {}
};

}  // namespace orbisect

#endif
