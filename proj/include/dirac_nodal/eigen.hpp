#pragma once

#include <vector>

#include "dirac_nodal/integrator.hpp"
#include "dirac_nodal/model.hpp"

namespace dirac_nodal {

struct EigenSearchConfig {
    double lambda_tolerance = 1e-10;
    double bracket_half_width = 0.6;  ///< scan [seed - w, seed + w]
    int scan_points = 13;
    int max_iterations = 200;
    /// Reject seeds that would need to drop the 1/n term (singular c1) instead of
    /// falling back to the first-order seed.
    bool strict_seed = false;

    void validate() const;
};

/// Asymptotic seed used to label the n-th eigenvalue.
double eigen_seed(const DiracProblem& problem, int n, bool strict);

/// Locates the eigenvalue labelled n by scanning around its asymptotic seed and
/// refining the single sign change with TOMS 748.
/// SeedFailure when the scan sees no sign change, AmbiguousBracket when it sees several.
EigenRecord find_eigenvalue(const Shooter& shooter, int n, const EigenSearchConfig& config = {});

EigenRecord find_eigenvalue(const DiracProblem& problem, int n, const EigenSearchConfig& config = {},
                            const IntegratorConfig& integrator = {});

struct Spectrum {
    std::vector<EigenRecord> records;
    /// Roots found strictly between consecutive labelled eigenvalues.
    std::vector<double> unmatched;
};

/// Roots of the characteristic function strictly between consecutive records
/// (records must be sorted by index).
std::vector<double> find_unmatched_roots(const Shooter& shooter, const std::vector<EigenRecord>& records,
                                         const EigenSearchConfig& config = {});

/// Records for every n in [n_min, n_max] except 0, plus the gap audit.
/// Throws AmbiguousBracket if the labelled eigenvalues are not strictly increasing.
Spectrum find_spectrum(const Shooter& shooter, int n_min, int n_max, const EigenSearchConfig& config = {});

/// Checks strict ordering of records with consecutive labels.
void check_ordering(const std::vector<EigenRecord>& records);

}  // namespace dirac_nodal
