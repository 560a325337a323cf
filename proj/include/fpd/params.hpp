#pragma once

#include <cmath>
#include <string>

#include "fpd/errors.hpp"

namespace fpd {

enum class DiffusionKind { ReciprocalGamma, FisherSnedecor };

inline const char* kind_name(DiffusionKind k) {
    return k == DiffusionKind::ReciprocalGamma ? "rg" : "fs";
}

/// Parameters of the two heavy-tailed Pearson diffusions on (0, inf):
/// theta is the mean-reversion speed, (beta, gamma) the shape/scale pair
/// of the stationary law.
struct DiffusionParams {
    DiffusionKind kind = DiffusionKind::ReciprocalGamma;
    double theta = 1.0;
    double beta = 5.0;
    double gamma = 2.0;

    void validate() const {
        if (!(theta > 0.0)) throw DomainError("params: theta must be > 0");
        if (!(gamma > 0.0)) throw DomainError("params: gamma must be > 0");
        if (kind == DiffusionKind::ReciprocalGamma) {
            if (!(beta > 1.0)) throw DomainError("params: rg requires beta > 1");
        } else {
            if (!(beta > 2.0)) throw DomainError("params: fs requires beta > 2");
        }
    }

    /// gamma/(beta-1) for RG, beta/(beta-2) for FS.
    double stationary_mean() const {
        return kind == DiffusionKind::ReciprocalGamma ? gamma / (beta - 1.0)
                                                      : beta / (beta - 2.0);
    }

    /// The spectral representation of the FS transition density requires
    /// gamma > 2 and gamma off the lattice {2(m+1), m = 1, 2, ...}.
    void validate_for_spectral() const {
        validate();
        if (kind != DiffusionKind::FisherSnedecor) return;
        if (!(gamma > 2.0))
            throw DomainError("params: fs spectral representation requires gamma > 2");
        const double m = gamma / 2.0 - 1.0;
        if (m >= 1.0 - 1e-9 && std::fabs(m - std::round(m)) < 1e-9)
            throw DegenerateParameterError(
                "params: fs spectral representation excludes gamma in {2(m+1)}");
    }
};

}  // namespace fpd
