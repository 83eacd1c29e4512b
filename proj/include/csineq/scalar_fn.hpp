#pragma once

#include <memory>
#include <string>
#include <vector>

namespace csineq {

/// Real interval used as a function domain. Bounds may be infinite.
struct Interval {
    double lo;
    double hi;
    bool lo_closed;
    bool hi_closed;

    bool contains(double t) const noexcept;
};

/// Identified real scalar function on (a subset of) [0, inf).
///
/// The kinds are the ones needed for matrix functions and Kwong tests:
/// t^alpha, log(1+t), t/log(1+t), sqrt, a piecewise-linear table, and the
/// quotient of two of these. Values are immutable; copies share quotient
/// operands.
class ScalarFn {
public:
    enum class Kind { Power, Log1p, TOverLog1p, Sqrt, Table, Quotient };

    static ScalarFn power(double alpha);
    static ScalarFn log1p();
    static ScalarFn t_over_log1p();
    static ScalarFn sqrt();
    /// Linear interpolation through (xs[i], ys[i]); xs strictly increasing.
    static ScalarFn table(std::vector<double> xs, std::vector<double> ys);
    static ScalarFn quotient(const ScalarFn& num, const ScalarFn& den);

    /// Parses "pow:<alpha>", "log1p", "t_over_log1p", "sqrt".
    static ScalarFn parse(const std::string& text);

    Kind kind() const noexcept { return kind_; }
    double alpha() const noexcept { return alpha_; }
    const Interval& domain() const noexcept { return domain_; }
    bool in_domain(double t) const noexcept { return domain_.contains(t); }

    /// Throws Error(DomainViolation) outside the domain or on a non-finite value.
    double operator()(double t) const;

    std::string name() const;

private:
    ScalarFn(Kind kind, Interval domain) : kind_(kind), domain_(domain) {}

    double eval_unchecked(double t) const;

    Kind kind_;
    Interval domain_;
    double alpha_ = 0.0;
    std::vector<double> xs_;
    std::vector<double> ys_;
    std::shared_ptr<const ScalarFn> num_;
    std::shared_ptr<const ScalarFn> den_;
};

} // namespace csineq
