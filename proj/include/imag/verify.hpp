#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace imag {

struct AuditFailure {
    std::uint64_t seed = 0; // reproducing seed (or grid index for grid checks)
    std::string description;
    double magnitude = 0.0;
};

struct AuditReport {
    std::string suite;
    int trials = 0;
    double tolerance = 0.0;
    double max_violation = 0.0;
    std::vector<AuditFailure> failures;
    bool passed() const { return failures.empty(); }
};

// Individual randomized checks. Each runs `trials` independent seeded
// trials derived from `seed` and reports the worst deviation observed.
namespace checks {

AuditReport m1_faithfulness_real(int trials, std::uint64_t seed);
AuditReport m1_faithfulness_nonreal(int trials, std::uint64_t seed);
AuditReport m2_monotonicity(int trials, std::uint64_t seed);
AuditReport m3_probabilistic_monotonicity(int trials, std::uint64_t seed);
AuditReport m4_convexity(int trials, std::uint64_t seed);
AuditReport m5_direct_sum_additivity(int trials, std::uint64_t seed);
AuditReport tsallis_symmetry(int trials, std::uint64_t seed);
AuditReport orthogonal_invariance(int trials, std::uint64_t seed);
AuditReport pure_state_consistency(int trials, std::uint64_t seed);
AuditReport channel_trace_preservation(int trials, std::uint64_t seed);
AuditReport real_closure(int trials, std::uint64_t seed);
AuditReport prop1_commutation(int trials, std::uint64_t seed);
AuditReport prop1_negative_control(int trials, std::uint64_t seed);
AuditReport prop2_completion(int trials, std::uint64_t seed);
AuditReport prop3_diagonalizer(int trials, std::uint64_t seed);
AuditReport rel_entropy_coherence_link(int trials, std::uint64_t seed);
AuditReport affinity_identities(int trials, std::uint64_t seed);
AuditReport chernoff_dominance(int trials, std::uint64_t seed);
AuditReport qubit_closed_form_equivalence(int trials, std::uint64_t seed);

AuditReport williamson_nu_recovery(int trials, std::uint64_t seed);
AuditReport williamson_reconstruction(int trials, std::uint64_t seed);
AuditReport williamson_symplectic(int trials, std::uint64_t seed);
AuditReport oso_symplectic(int trials, std::uint64_t seed);
AuditReport conjugate_power_consistency(int trials, std::uint64_t seed);
AuditReport theorem2_half_reduction(int trials, std::uint64_t seed);
AuditReport one_mode_closed_form_random(int trials, std::uint64_t seed);
AuditReport tensor_additivity(int trials, std::uint64_t seed);
AuditReport example2_real_zero(int trials, std::uint64_t seed);
AuditReport example2_x2_monotonicity(int trials, std::uint64_t seed);
AuditReport example2_x2_saturation(int trials, std::uint64_t seed);
AuditReport example2_nu_monotonicity(int trials, std::uint64_t seed);

// Fixed-grid oracles (trial count is the grid size).
AuditReport fock_oracle_grid(int cutoff = 80);
AuditReport closed_form_oracle_grid();
AuditReport oracle_checkpoint();

} // namespace checks

std::vector<AuditReport> run_axioms_suite(int trials, std::uint64_t seed);
std::vector<AuditReport> run_gaussian_suite(int trials, std::uint64_t seed);
std::vector<AuditReport> run_oracle_suite(std::uint64_t seed);

bool all_passed(const std::vector<AuditReport>& reports);
std::string reports_to_json(const std::vector<AuditReport>& reports);

} // namespace imag
