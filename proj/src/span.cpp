#include "twistalg/span.hpp"

#include <algorithm>

namespace twistalg {

namespace {

void combo_add(SpanSolver::Combination& into, const SpanSolver::Combination& from, const Scalar& c) {
    for (const auto& [idx, coeff] : from) {
        auto it = into.find(idx);
        if (it == into.end()) {
            Scalar v = coeff * c;
            if (!v.is_zero()) into.emplace(idx, v);
        } else {
            it->second += coeff * c;
            if (it->second.is_zero()) into.erase(it);
        }
    }
}

}  // namespace

void SpanSolver::eliminate(NcPoly& v, Combination& combo) const {
    for (const Row& row : rows_) {
        if (v.is_zero()) break;
        const Scalar c = v.coeff(row.value.leading_word());
        if (c.is_zero()) continue;
        v -= row.value * c;
        combo_add(combo, row.combo, c);
    }
}

size_t SpanSolver::insert(const NcPoly& v) {
    const size_t idx = n_generators_++;
    NcPoly residual = v;
    Combination combo;
    eliminate(residual, combo);
    if (residual.is_zero()) return idx;

    // New row: make the pivot monic; the combination tracks the generator
    // minus the eliminated part.
    const Scalar pivot = residual.coeff(residual.leading_word());
    const Scalar pivot_inv = pivot.inv();
    Combination row_combo;
    row_combo.emplace(idx, pivot_inv);
    for (auto& [gi, c] : combo) {
        Scalar scaled = -(c * pivot_inv);
        if (!scaled.is_zero()) row_combo.emplace(gi, scaled);
    }
    Row row{residual * pivot_inv, std::move(row_combo)};

    // Back-substitute into existing rows to keep reduced echelon form.
    for (Row& r : rows_) {
        const Scalar c = r.value.coeff(row.value.leading_word());
        if (c.is_zero()) continue;
        r.value -= row.value * c;
        combo_add(r.combo, row.combo, -c);
    }

    auto at = std::lower_bound(rows_.begin(), rows_.end(), row, [](const Row& a, const Row& b) {
        return CanonicalWordLess{}(a.value.leading_word(), b.value.leading_word());
    });
    rows_.insert(at, std::move(row));
    return idx;
}

bool SpanSolver::contains(const NcPoly& v) const {
    NcPoly residual = v;
    Combination combo;
    eliminate(residual, combo);
    return residual.is_zero();
}

std::optional<SpanSolver::Combination> SpanSolver::solve(const NcPoly& v) const {
    NcPoly residual = v;
    Combination combo;
    eliminate(residual, combo);
    if (!residual.is_zero()) return std::nullopt;
    return combo;
}

std::vector<NcPoly> SpanSolver::basis() const {
    std::vector<NcPoly> out;
    out.reserve(rows_.size());
    for (const Row& r : rows_) out.push_back(r.value);
    return out;
}

}  // namespace twistalg
