#include "csineq/scalar_fn.hpp"

#include "csineq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace csineq {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

std::string format_double(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

bool Interval::contains(double t) const noexcept
{
    if (!std::isfinite(t)) return false;
    const bool above = lo_closed ? t >= lo : t > lo;
    const bool below = hi_closed ? t <= hi : t < hi;
    return above && below;
}

ScalarFn ScalarFn::power(double alpha)
{
    if (!std::isfinite(alpha)) throw Error(Errc::InvalidParams, "power exponent must be finite");
    // 0^0 = 1 and 0^alpha = 0 for alpha > 0; negative powers need t > 0.
    ScalarFn f(Kind::Power, Interval{0.0, inf, alpha >= 0.0, false});
    f.alpha_ = alpha;
    return f;
}

ScalarFn ScalarFn::log1p() { return ScalarFn(Kind::Log1p, Interval{0.0, inf, true, false}); }

ScalarFn ScalarFn::t_over_log1p() { return ScalarFn(Kind::TOverLog1p, Interval{0.0, inf, false, false}); }

ScalarFn ScalarFn::sqrt() { return ScalarFn(Kind::Sqrt, Interval{0.0, inf, true, false}); }

ScalarFn ScalarFn::table(std::vector<double> xs, std::vector<double> ys)
{
    if (xs.size() < 2 || xs.size() != ys.size())
        throw Error(Errc::InvalidParams, "table needs at least two (x, y) pairs of equal length");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(ys[i]))
            throw Error(Errc::InvalidParams, "table entries must be finite");
        if (i > 0 && !(xs[i] > xs[i - 1])) throw Error(Errc::InvalidParams, "table abscissae must increase");
    }
    ScalarFn f(Kind::Table, Interval{xs.front(), xs.back(), true, true});
    f.xs_ = std::move(xs);
    f.ys_ = std::move(ys);
    return f;
}

ScalarFn ScalarFn::quotient(const ScalarFn& num, const ScalarFn& den)
{
    const Interval& a = num.domain();
    const Interval& b = den.domain();
    Interval d{std::max(a.lo, b.lo), std::min(a.hi, b.hi), false, false};
    d.lo_closed = (a.lo == d.lo ? a.lo_closed : true) && (b.lo == d.lo ? b.lo_closed : true);
    d.hi_closed = (a.hi == d.hi ? a.hi_closed : true) && (b.hi == d.hi ? b.hi_closed : true);
    // The denominators in use vanish at 0.
    if (d.lo == 0.0) d.lo_closed = false;
    ScalarFn f(Kind::Quotient, d);
    f.num_ = std::make_shared<const ScalarFn>(num);
    f.den_ = std::make_shared<const ScalarFn>(den);
    return f;
}

ScalarFn ScalarFn::parse(const std::string& text)
{
    if (text == "log1p") return log1p();
    if (text == "t_over_log1p") return t_over_log1p();
    if (text == "sqrt") return sqrt();
    if (text.rfind("pow:", 0) == 0) {
        try {
            std::size_t used = 0;
            const double a = std::stod(text.substr(4), &used);
            if (used == text.size() - 4) return power(a);
        } catch (const std::exception&) {
        }
    }
    throw Error(Errc::InvalidParams, "unknown scalar function '" + text + "'");
}

double ScalarFn::eval_unchecked(double t) const
{
    switch (kind_) {
    case Kind::Power:
        if (alpha_ == 0.0) return 1.0;
        if (alpha_ == 1.0) return t;
        return std::pow(t, alpha_);
    case Kind::Log1p: return std::log1p(t);
    case Kind::TOverLog1p: return t / std::log1p(t);
    case Kind::Sqrt: return std::sqrt(t);
    case Kind::Table: {
        auto it = std::upper_bound(xs_.begin(), xs_.end(), t);
        if (it == xs_.end()) return ys_.back();
        const std::size_t j = static_cast<std::size_t>(it - xs_.begin());
        if (j == 0) return ys_.front();
        const double w = (t - xs_[j - 1]) / (xs_[j] - xs_[j - 1]);
        return (1.0 - w) * ys_[j - 1] + w * ys_[j];
    }
    case Kind::Quotient: return (*num_)(t) / (*den_)(t);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double ScalarFn::operator()(double t) const
{
    if (!in_domain(t)) throw Error(Errc::DomainViolation, name() + " evaluated outside its domain at " + format_double(t));
    const double v = eval_unchecked(t);
    if (!std::isfinite(v)) throw Error(Errc::DomainViolation, name() + " is not finite at " + format_double(t));
    return v;
}

std::string ScalarFn::name() const
{
    switch (kind_) {
    case Kind::Power: return "pow:" + format_double(alpha_);
    case Kind::Log1p: return "log1p";
    case Kind::TOverLog1p: return "t_over_log1p";
    case Kind::Sqrt: return "sqrt";
    case Kind::Table: return "table[" + std::to_string(xs_.size()) + "]";
    case Kind::Quotient: return "(" + num_->name() + ")/(" + den_->name() + ")";
    }
    return "?";
}

} // namespace csineq
