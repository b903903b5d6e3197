// Copyright 2026 The reltps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RELTPS_VERIFY_H
#define RELTPS_VERIFY_H

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "reltps/linalg.h"
#include "reltps/states.h"
#include "reltps/tps.h"

namespace reltps {

/// Identities between constant matrices and kets.
inline constexpr double kExactTolerance = 1e-12;
/// Identities that pass Haar-sampled SU(2) elements through conjugations.
inline constexpr double kSampledTolerance = 1e-10;

/// A lower bound that a check requires: value > threshold.
struct Bound {
    std::string name;
    double value;
    double threshold;

    bool holds() const {
        return value > threshold;
    }
};

struct CheckResult {
    std::string check_id;
    /// Stable names of the identities this check covers.
    std::vector<std::string> identities;
    double tolerance = kExactTolerance;
    double max_deviation = 0;
    std::vector<Bound> bounds;
    bool passed = false;
    std::string details;
};

struct VerificationReport {
    uint64_t seed = 0;
    std::vector<CheckResult> checks;

    size_t passed_count() const;
    size_t failed_count() const;
    bool all_passed() const {
        return failed_count() == 0;
    }
};

/// Source of the 24 subsystem projectors examined by check_projector_algebra.
/// Tests swap in a corrupted source as a negative control.
using ProjectorSource = std::function<Op4(TpsLabel, Side, int)>;

ProjectorSource library_projectors();

struct VerifyOptions {
    ProjectorSource projectors = library_projectors();
    /// Haar samples used wherever an identity holds "for any V".
    size_t samples = 100;
};

/// Hard-coded U_abc against the permutation definition, the basis kets they
/// define, the 123-product as the Kronecker product, local bits by the usual
/// row/column rule, and U_321 as a relabeling.
CheckResult check_permutation_unitaries();

/// Joint and marginal probabilities from the 123 projectors on random states.
CheckResult check_marginal_rules(Rng &rng);

/// All 24 subsystem projectors against the reference color-sum tables, plus
/// projector properties, completeness and pairwise commutation.
CheckResult check_projector_algebra(const ProjectorSource &projectors = library_projectors());

/// Conjugation, covariance, composition closure and the mixed-product law.
CheckResult check_tps_laws(Rng &rng);

/// The Pauli dictionary of the 321 product and its eigenvector cross-checks.
CheckResult check_pauli_dictionary();

/// Truth values of the 321 left bit on the Bell basis.
CheckResult check_bell_truth_values();

/// Schmidt data of the singlet and of the IFF eigenvector family per label.
CheckResult check_relative_entanglement();

/// Local basis changes V (x)_123 W acting on every product's projectors.
CheckResult check_local_basis_change(size_t n_samples, Rng &rng);

/// Product forms, eigen-relations and factorizations of the singlet, with
/// Haar-sampled V where the identity holds for any V.
CheckResult check_singlet_identities(size_t n_samples, Rng &rng);

/// Singlet invariance under V (x) V, non-invariance of states orthogonal to it,
/// and the EPR chain of equivalent singlet forms.
CheckResult check_uniqueness_theorem(size_t n_samples, Rng &rng);

/// Largest phase distance between psi and (V (x) V) psi over n Haar samples.
double max_invariance_distance(const Ket4 &psi, size_t n_samples, Rng &rng);

/// Sub-seeded generator for the check at `index` in the declared order.
Rng check_rng(uint64_t seed, size_t index);

/// Runs every check in the declared order. Failures are recorded, not thrown.
VerificationReport run_all(uint64_t seed, const VerifyOptions &options = {});

/// check_id -> identity names, in the order run_all emits them.
struct CheckCoverage {
    std::string_view check_id;
    std::vector<std::string_view> identities;
};
const std::vector<CheckCoverage> &coverage_table();

}  // namespace reltps

#endif
