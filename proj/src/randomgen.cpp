#include "randomgen.hpp"

namespace conserva {

namespace {

std::vector<std::string> generic_labels(std::size_t dim) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= dim; ++i)
        labels.push_back("e" + std::to_string(i));
    return labels;
}

} // namespace

Algebra random_algebra(Rng& rng, std::size_t dim) {
    Tensor3 c(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (rng.below(3) == 0)
                    c.at(i, j, k) = rng.rational(2);
    return Algebra("random", generic_labels(dim), std::move(c));
}

Algebra random_four_nilpotent_algebra(Rng& rng, std::size_t dim) {
    // weight(e_i) in {1, 2, 3} by thirds of the basis; entries allowed only
    // where weight(e_k) >= weight(e_i) + weight(e_j), so four-fold products
    // would need weight >= 4 and vanish.
    auto weight = [dim](std::size_t i) { return 1 + (3 * i) / dim; };
    Tensor3 c(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (weight(k) >= weight(i) + weight(j) && rng.below(2) == 0)
                    c.at(i, j, k) = rng.rational(2);
    return Algebra("nilpotent", generic_labels(dim), std::move(c));
}

Algebra zero_product_algebra(std::size_t dim) {
    return Algebra("zero-product", generic_labels(dim), Tensor3(dim));
}

RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.below(3) != 0)
                m.at(r, c) = rng.rational(3);
    return m;
}

Element random_element(Rng& rng, std::size_t dim) {
    Element x(dim);
    for (std::size_t i = 0; i < dim; ++i)
        x[i] = rng.rational(3);
    return x;
}

} // namespace conserva
