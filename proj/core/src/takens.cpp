#include "flowtopo/tda/takens.hpp"

#include "flowtopo/errors.hpp"

namespace flowtopo::tda {

PointCloud takens_embed(std::span<const double> signal, std::size_t tau_samples,
                        std::size_t dim) {
    if (dim < 2) throw EmbeddingError("takens_embed: dimension must be >= 2");
    if (tau_samples == 0) throw EmbeddingError("takens_embed: tau must be >= 1");
    const std::size_t span = (dim - 1) * tau_samples;
    if (signal.size() <= span)
        throw EmbeddingError("takens_embed: series of length " +
                             std::to_string(signal.size()) +
                             " too short for (d-1)*tau = " + std::to_string(span));
    const std::size_t count = signal.size() - span;
    PointCloud cloud;
    cloud.dim = dim;
    cloud.tau_samples = tau_samples;
    cloud.coords.resize(count * dim);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t k = 0; k < dim; ++k)
            cloud.coords[i * dim + k] = signal[i + k * tau_samples];
    return cloud;
}

double squared_distance(const PointCloud& cloud, std::size_t i, std::size_t j) {
    const double* a = cloud.coords.data() + i * cloud.dim;
    const double* b = cloud.coords.data() + j * cloud.dim;
    double acc = 0.0;
    for (std::size_t k = 0; k < cloud.dim; ++k) {
        const double d = a[k] - b[k];
        acc += d * d;
    }
    return acc;
}

} // namespace flowtopo::tda
