#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "homothety.hpp"

namespace affhom {

struct Options {
    int word_cap = 0;          // 0 picks 12 for n <= 2 and 8 otherwise
    int harvest_cap = 10;      // word length for translation harvesting
    double eps = 1e-9;         // tolerance for approximate decisions
    double dedup = 1e-7;       // grid cell for approximate orbit deduplication
    std::vector<std::complex<double>> window_center;  // empty means the origin
    double window_half = 2.0;
    int grid = 40;
    std::size_t budget = 2000000;
    bool require_exact = false;

    int effective_word_cap(std::size_t n) const
    {
        if (word_cap > 0) return word_cap;
        return n <= 2 ? 12 : 8;
    }
};

/// Generators of a group of homotheties of C^n with run options.
struct GroupSpec {
    std::size_t dim = 0;
    std::vector<Homothety> generators;
    Options options;

    GroupSpec() = default;
    GroupSpec(std::size_t n, std::vector<Homothety> gens, Options opts = {})
        : dim(n), generators(std::move(gens)), options(std::move(opts))
    {
        validate();
    }

    void validate() const
    {
        if (dim == 0) throw InputError("dimension must be positive");
        if (generators.empty()) throw InputError("at least one generator is required");
        for (const auto& g : generators) {
            if (g.dim() != dim) throw DimensionMismatch();
        }
        if (options.eps <= 0) throw InputError("eps must be positive");
        if (options.grid < 2) throw InputError("grid resolution must be at least 2");
        if (options.window_half <= 0) throw InputError("window half-width must be positive");
    }

    bool exact() const
    {
        for (const auto& g : generators) {
            if (!is_exact(g)) return false;
        }
        return true;
    }

    std::vector<Scalar> ratios() const
    {
        std::vector<Scalar> r;
        for (const auto& g : generators) r.push_back(g.ratio());
        return r;
    }
};

} // namespace affhom
