#pragma once

#include "qhc/rewrite/engine.hpp"

#include <random>

namespace qhc {

// Outcome of one randomized engine property over an algebra.
struct PropReport {
    std::string name;
    int trials = 0;
    int failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0 && trials > 0; }
};

Word random_word(const Algebra& a, std::mt19937_64& g, int max_len);
// A normal-form element with up to `terms` terms from random words.
NcPoly random_element(const Algebra& a, std::mt19937_64& g, int terms, int max_len);
// A homogeneous normal-form element: permutations of one random word.
NcPoly random_homogeneous(const Algebra& a, std::mt19937_64& g, int terms, int max_len);

PropReport check_strategy_independence(const Algebra& a, int trials, uint64_t seed, int max_len = 6);
PropReport check_associativity(const Algebra& a, int trials, uint64_t seed, int max_len = 3);
PropReport check_homogeneity(const Algebra& a, int trials, uint64_t seed, int max_len = 5);
PropReport check_qcentrality(const Algebra& a, int trials, uint64_t seed, int max_len = 4);
// Reduction commutes with specialization, over Q and over F_p.
PropReport check_specialization(const Algebra& a, int trials, uint64_t seed, const std::vector<SpecPoint>& points,
                                int max_len = 4);

const std::vector<SpecPoint>& consistency_points();

}  // namespace qhc
