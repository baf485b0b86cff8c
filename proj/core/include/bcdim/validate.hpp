#pragma once

#include <string>
#include <vector>

namespace bcdim {

// Outcome of one named validation check, typically a sweep.
struct CheckResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    std::vector<std::string> failure_samples; // first few, for reports

    bool pass() const { return failures == 0; }
};

// Squarefree integers in [1, max_level], ascending.
std::vector<long long> squarefree_levels_up_to(long long max_level);

// All products of distinct primes <= max_prime that exceed 1, ascending.
std::vector<long long> squarefree_products_of_primes_up_to(long long max_prime);

// Engine-vs-literal sweep of the three dimension closed forms, plus the
// integrality, evenness and Bianchi-integrality properties, over the given
// squarefree levels (entries <= 1 are skipped) and weights up to max_weight.
// jobs > 1 splits the levels across threads; results do not depend on jobs.
std::vector<CheckResult> closed_form_suite(const std::vector<long long>& levels,
                                           long long max_weight, int jobs);

// Engine against the Cohen-Oesterle/Moebius oracle: trivial-character
// newspaces for squarefree N <= max_level, the pinned level-one odd-weight
// equalities, upper bounds above level one, and the frozen anchors.
std::vector<CheckResult> oracle_suite(long long max_level, long long max_weight,
                                      int jobs);

// Library RepData constructors against the GL2(F_p) character-table oracle.
std::vector<CheckResult> chartable_suite();

} // namespace bcdim
