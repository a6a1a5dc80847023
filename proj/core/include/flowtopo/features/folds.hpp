#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "flowtopo/types.hpp"

namespace flowtopo::features {

// Inverse-frequency class weights: w_c = N_total / (3 * N_c), ordered
// (Wake, NREM, REM). Throws MissingClassError when a class is absent.
std::array<double, 3> class_weights(std::span<const SleepStage> labels);

struct SubjectInfo {
    std::string subject_id;
    int age_years = 0;
    char sex = 'M';
};

// subject_id -> fold index in [0, k)
using FoldAssignment = std::map<std::string, int>;

// Per-subject stratified folds: within each (age_years, sex) stratum the
// subjects are shuffled by a generator split from `seed` and dealt
// round-robin, so per-stratum fold counts differ by at most 1 and a
// subject's epochs always share one fold.
FoldAssignment stratified_folds(std::span<const SubjectInfo> subjects, int k,
                                std::uint64_t seed);

} // namespace flowtopo::features
