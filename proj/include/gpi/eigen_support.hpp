#pragma once

#include <Eigen/Core>

#include "gpi/cpoly.hpp"
#include "gpi/rational.hpp"

// NumTraits so that gpi scalars can be used as Eigen matrix element types.
// Only ring operations are ever invoked on them; there is no epsilon-based
// logic anywhere in the exact computations.
namespace Eigen {

template <>
struct NumTraits<gpi::Rational> : GenericNumTraits<gpi::Rational> {
    typedef gpi::Rational Real;
    typedef gpi::Rational NonInteger;
    typedef gpi::Rational Nested;
    typedef gpi::Rational Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 30,
        MulCost = 30
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<gpi::CPoly> : GenericNumTraits<gpi::CPoly> {
    typedef gpi::CPoly Real;
    typedef gpi::CPoly NonInteger;
    typedef gpi::CPoly Nested;
    typedef gpi::CPoly Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 60,
        MulCost = 200
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace gpi {

using Mat3 = Eigen::Matrix<CPoly, 3, 3>;
using RatRow = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

} // namespace gpi
