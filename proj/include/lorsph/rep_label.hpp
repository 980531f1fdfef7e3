#pragma once

#include <variant>

#include "lorsph/errors.hpp"
#include "lorsph/half_int.hpp"

namespace lorsph {

struct FiniteDimLabel {
    HalfInt l, ldot;

    void validate() const {
        if (l < HalfInt::whole(0) || ldot < HalfInt::whole(0))
            throw IndexError("FiniteDimLabel: l, ldot must be non-negative");
    }
};

struct PrincipalLabel {
    HalfInt l0;
    double rho = 0.0;

    void validate() const {
        if (l0 < HalfInt::whole(0)) throw IndexError("PrincipalLabel: l0 must be non-negative");
    }
};

struct SupplementaryLabel {
    double sigma = 0.0;

    void validate() const {
        if (sigma == 0.0) throw IndexError("SupplementaryLabel: sigma must be nonzero");
    }
};

using RepLabel = std::variant<FiniteDimLabel, PrincipalLabel, SupplementaryLabel>;

}  // namespace lorsph
