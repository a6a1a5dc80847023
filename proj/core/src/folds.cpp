#include "flowtopo/features/folds.hpp"

#include <algorithm>

#include "flowtopo/errors.hpp"
#include "flowtopo/util/rng.hpp"

namespace flowtopo::features {

std::array<double, 3> class_weights(std::span<const SleepStage> labels) {
    std::array<std::size_t, 3> counts{};
    for (const SleepStage s : labels) {
        switch (s) {
        case SleepStage::Wake: ++counts[0]; break;
        case SleepStage::NREM: ++counts[1]; break;
        case SleepStage::REM: ++counts[2]; break;
        case SleepStage::Unknown: break;
        }
    }
    const double total = static_cast<double>(counts[0] + counts[1] + counts[2]);
    std::array<double, 3> weights{};
    for (std::size_t c = 0; c < 3; ++c) {
        if (counts[c] == 0)
            throw MissingClassError("class_weights: class " + std::to_string(c) +
                                    " absent from labels");
        weights[c] = total / (3.0 * static_cast<double>(counts[c]));
    }
    return weights;
}

FoldAssignment stratified_folds(std::span<const SubjectInfo> subjects, int k,
                                std::uint64_t seed) {
    if (k < 2) throw ConfigError("stratified_folds: k must be >= 2");

    // strata keyed by (age, sex); subjects sorted by id so the assignment
    // does not depend on input order
    std::map<std::pair<int, char>, std::vector<std::string>> strata;
    for (const SubjectInfo& s : subjects)
        strata[{s.age_years, s.sex}].push_back(s.subject_id);

    FoldAssignment assignment;
    const SplitRng base(seed);
    for (auto& [key, ids] : strata) {
        std::sort(ids.begin(), ids.end());
        SplitRng rng = base.split("stratum-" + std::to_string(key.first) + "-" +
                                  std::string(1, key.second));
        deterministic_shuffle(ids, rng);
        // seeded starting fold keeps small strata from piling onto fold 0
        const std::size_t offset =
            static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(k)));
        for (std::size_t j = 0; j < ids.size(); ++j)
            assignment[ids[j]] =
                static_cast<int>((j + offset) % static_cast<std::size_t>(k));
    }
    return assignment;
}

} // namespace flowtopo::features
