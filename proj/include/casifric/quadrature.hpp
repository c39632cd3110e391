#ifndef CASIFRIC_QUADRATURE_HPP
#define CASIFRIC_QUADRATURE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string_view>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "casifric/errors.hpp"

namespace casifric {

enum class QuadratureScheme { gauss_kronrod, double_exponential };

inline std::string_view to_string(QuadratureScheme s) {
    return s == QuadratureScheme::gauss_kronrod ? "gauss_kronrod" : "double_exponential";
}

struct QuadratureSpec {
    double relative_tolerance = 1e-10;
    double absolute_floor = 1e-300;
    int max_subdivisions = 2000;
    QuadratureScheme scheme = QuadratureScheme::gauss_kronrod;

    void validate() const {
        if (!(relative_tolerance > 1e-14 && relative_tolerance < 1e-2))
            throw DomainError("quadrature relative tolerance must lie in (1e-14, 1e-2)");
        if (max_subdivisions < 10) throw DomainError("quadrature needs max_subdivisions >= 10");
        if (!(absolute_floor >= 0.0)) throw DomainError("quadrature absolute floor must be >= 0");
    }
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
    bool converged = false;
};

namespace detail {

// Bisection depth that yields at most max_subdivisions leaf intervals.
inline unsigned gk_depth(int max_subdivisions) {
    unsigned depth = 0;
    while ((2L << depth) <= max_subdivisions && depth < 30) ++depth;
    return depth == 0 ? 1 : depth;
}

template <typename F>
struct CountingIntegrand {
    F* f;
    std::int64_t* count;

    double operator()(double x) const {
        ++*count;
        const double y = (*f)(x);
        if (std::isnan(y)) {
            std::ostringstream os;
            os.precision(17);
            os << "integrand returned NaN at x = " << x;
            throw QuadratureError(os.str());
        }
        return y;
    }
};

}  // namespace detail

/// Integrate f over [a, b]; b may be +infinity.
///
/// Gauss-Kronrod (G7/K15, adaptive bisection) or double-exponential
/// (tanh-sinh on finite ranges, exp-sinh on [a, inf)), both from Boost.Math.
/// The reported error never drops below a few ulps of the L1 norm, so a
/// zero estimate cannot claim more accuracy than the arithmetic delivers.
template <typename F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
    spec.validate();
    if (!std::isfinite(a)) throw DomainError("integrate: lower limit must be finite");
    if (std::isnan(b)) throw DomainError("integrate: upper limit is NaN");

    QuadratureResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    if (b < a) {
        auto r = integrate(f, b, a, spec);
        r.value = -r.value;
        return r;
    }

    auto& fn = f;
    detail::CountingIntegrand<std::remove_reference_t<F>> g{&fn, &out.evaluations};
    double err = 0.0;
    double l1 = 0.0;

    try {
        if (spec.scheme == QuadratureScheme::gauss_kronrod) {
            out.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
                g, a, b, detail::gk_depth(spec.max_subdivisions), spec.relative_tolerance, &err, &l1);
        } else {
            // The DE routines may stop with a level difference just above
            // their target; one extra decade keeps it under spec.
            const double tol = 0.1 * spec.relative_tolerance;
            if (std::isinf(b)) {
                boost::math::quadrature::exp_sinh<double> de;
                out.value = de.integrate(g, a, b, tol, &err, &l1);
            } else {
                boost::math::quadrature::tanh_sinh<double> de;
                out.value = de.integrate(g, a, b, tol, &err, &l1);
            }
        }
    } catch (const QuadratureError&) {
        throw;
    } catch (const std::exception& e) {
        throw QuadratureError(std::string("quadrature failed: ") + e.what(), out.value, err);
    }

    out.error_estimate = std::max(err, 4.0 * std::numeric_limits<double>::epsilon() * l1);
    out.converged = std::isfinite(out.value) &&
                    out.error_estimate <= spec.relative_tolerance * std::abs(out.value) + spec.absolute_floor;
    return out;
}

/// As integrate(), but throws QuadratureError carrying the best estimate
/// when the tolerance is not met.
template <typename F>
double integrate_or_throw(F&& f, double a, double b, const QuadratureSpec& spec,
                          std::string_view what) {
    auto r = integrate(std::forward<F>(f), a, b, spec);
    if (!r.converged) {
        std::ostringstream os;
        os.precision(6);
        os << what << ": quadrature did not converge (estimate " << r.value << ", error "
           << r.error_estimate << ")";
        throw QuadratureError(os.str(), r.value, r.error_estimate);
    }
    return r.value;
}

}  // namespace casifric

#endif
