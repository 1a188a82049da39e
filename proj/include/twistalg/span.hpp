#pragma once

#include <map>
#include <optional>
#include <vector>

#include "twistalg/nc_poly.hpp"

namespace twistalg {

/// Incremental exact row reduction over the Scalar field with words as
/// columns. Rows are kept in echelon form with monic pivots (pivot = the
/// canonically first word of the row); pivot tests are exact zero tests.
/// Each inserted vector gets an index, and rows carry coordinates over the
/// inserted generators so members can be expressed as combinations.
class SpanSolver {
public:
    using Combination = std::map<size_t, Scalar>;  // generator index -> coefficient

    /// Adds a generator; returns its index. The span grows only if the
    /// vector is independent of the current rows.
    size_t insert(const NcPoly& v);

    bool contains(const NcPoly& v) const;

    /// Expresses v over the inserted generators, if v lies in the span.
    std::optional<Combination> solve(const NcPoly& v) const;

    size_t dim() const { return rows_.size(); }
    size_t generator_count() const { return n_generators_; }
    std::vector<NcPoly> basis() const;

private:
    struct Row {
        NcPoly value;       // monic at its pivot word
        Combination combo;  // value as a combination of generators
    };
    std::vector<Row> rows_;  // sorted by pivot word (canonical order)
    size_t n_generators_ = 0;

    // Eliminates all pivots from v, accumulating the used combination.
    void eliminate(NcPoly& v, Combination& combo) const;
};

}  // namespace twistalg
