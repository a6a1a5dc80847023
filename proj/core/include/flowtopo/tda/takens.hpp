#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace flowtopo::tda {

// Delay-coordinate point cloud. Points are stored row-major,
// point i = coords[i*dim .. i*dim+dim).
struct PointCloud {
    std::vector<double> coords;
    std::size_t dim = 0;
    std::size_t tau_samples = 0;

    std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
    std::span<const double> point(std::size_t i) const {
        return {coords.data() + i * dim, dim};
    }
};

// Point i = (f_i, f_{i+tau}, ..., f_{i+(d-1)tau}); count = N - (d-1) tau.
// Throws EmbeddingError when the series is too short.
PointCloud takens_embed(std::span<const double> signal, std::size_t tau_samples,
                        std::size_t dim);

double squared_distance(const PointCloud& cloud, std::size_t i, std::size_t j);

} // namespace flowtopo::tda
